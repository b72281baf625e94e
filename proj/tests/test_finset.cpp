#include <gtest/gtest.h>

#include "seqcat/finset.hpp"
#include "support/oracles.hpp"

using namespace seqcat;

TEST(FinSet, PullbackOfTwoMaps) {
    FinDiagram d;
    d.add_node(3);
    d.add_node(2);
    d.add_node(2);
    d.add_edge(0, 2, {0, 1, 1});
    d.add_edge(1, 2, {1, 0});
    const auto lim = limit(d);
    EXPECT_EQ(lim.tuples, (std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}, {2, 0, 1}}));
    EXPECT_EQ(lim.find({1, 0, 1}), 1);
    EXPECT_EQ(lim.find({0, 0, 0}), -1);
    EXPECT_EQ(lim.projection(0, 3).map, (std::vector<int>{0, 1, 2}));
}

TEST(FinSet, EmptyDiagramHasOneTuple) {
    FinDiagram d;
    EXPECT_EQ(limit(d).size(), 1);
    EXPECT_EQ(colimit(d).classes, 0);
}

TEST(FinSet, EmptyNodeEmptiesTheLimit) {
    FinDiagram d;
    d.add_node(0);
    d.add_node(4);
    EXPECT_EQ(limit(d).size(), 0);
}

TEST(FinSet, CoequalizerOfTwoMaps) {
    FinDiagram d;
    d.add_node(2);
    d.add_node(4);
    d.add_edge(0, 1, {0, 1});
    d.add_edge(0, 1, {2, 3});
    const auto c = colimit(d);
    EXPECT_EQ(c.classes, 2);
    EXPECT_EQ(c.injections[1], (std::vector<int>{0, 1, 0, 1}));
    EXPECT_EQ(c.representatives.front(), (std::pair<int, int>{0, 0}));
}

TEST(FinSet, EdgeValidation) {
    FinDiagram d;
    d.add_node(2);
    d.add_node(1);
    d.add_edge(0, 1, {0, 0});
    EXPECT_NO_THROW(d.validate());
    auto leaves = d;
    leaves.add_edge(0, 1, {0, 1});
    EXPECT_THROW(leaves.validate(), invalid_input);
    auto partial = d;
    partial.add_edge(0, 1, {0});
    EXPECT_THROW(partial.validate(), invalid_input);
    auto dangling = d;
    dangling.add_edge(0, 5, {0, 0});
    EXPECT_THROW(dangling.validate(), invalid_input);
    EXPECT_THROW(limit(leaves), invalid_input);
}

TEST(FinSet, LimitCapRaisesResourceError) {
    FinDiagram d;
    for (int k = 0; k < 4; ++k) d.add_node(10);
    EXPECT_THROW(limit(d, 100), resource_error);
    EXPECT_EQ(limit(d, 10000).size(), 10000);
}

TEST(FinSet, Classification) {
    EXPECT_EQ(classify({3, 3, {2, 0, 1}}), Classification::bijective);
    EXPECT_EQ(classify({3, 2, {0, 1, 1}}), Classification::surjective_only);
    EXPECT_EQ(classify({2, 3, {0, 2}}), Classification::injective_only);
    EXPECT_EQ(classify({2, 3, {0, 0}}), Classification::neither);
    EXPECT_EQ(classify({0, 0, {}}), Classification::bijective);
    EXPECT_TRUE(is_injective(Classification::bijective));
    EXPECT_FALSE(is_surjective(Classification::injective_only));
    EXPECT_EQ(to_string(Classification::surjective_only), "surjective_only");
}

TEST(FinSet, ComposeAndIdentity) {
    const Function f{3, 2, {0, 1, 1}};
    const Function g{2, 4, {3, 2}};
    EXPECT_EQ(compose(g, f).map, (std::vector<int>{3, 2, 2}));
    EXPECT_EQ(compose(f, identity_function(3)), f);
    EXPECT_THROW(compose(f, g), invalid_input);
}

TEST(FinSet, ConeAdjointIntoLimit) {
    FinDiagram d;
    d.add_node(2);
    d.add_node(2);
    d.add_edge(0, 1, {1, 0});
    const SetCone c{3, d, {{3, 2, {0, 1, 0}}, {3, 2, {1, 0, 1}}}};
    EXPECT_NO_THROW(check_cone(c));
    const auto u = limit_adjoint(c);
    EXPECT_EQ(u.cod, 2);
    EXPECT_EQ(u.map, (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(classify(u), Classification::surjective_only);
    SetCone bad = c;
    bad.legs[1].map = {0, 0, 0};
    EXPECT_THROW(check_cone(bad), invalid_input);
}

TEST(FinSet, AdjointProjectsBackToLegs) {
    gen::Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gen::random_diagram(rng, 3, 4);
        const auto lim = limit(d);
        if (lim.size() == 0) continue;
        // cone from a random subset of the limit, so the cone condition holds by construction
        const int apex = gen::uniform(rng, 1, 5);
        SetCone c{apex, d, {}};
        std::vector<int> pick;
        for (int x = 0; x < apex; ++x) pick.push_back(gen::uniform(rng, 0, lim.size() - 1));
        for (std::size_t v = 0; v < d.sizes.size(); ++v) {
            Function leg{apex, d.sizes[v], {}};
            for (int x : pick) leg.map.push_back(lim.tuples[static_cast<std::size_t>(x)][v]);
            c.legs.push_back(leg);
        }
        const auto u = limit_adjoint(c, lim);
        EXPECT_EQ(u.map, pick);
        for (std::size_t v = 0; v < d.sizes.size(); ++v)
            EXPECT_EQ(compose(lim.projection(static_cast<int>(v), d.sizes[v]), u), c.legs[v]);
    }
}

TEST(FinSet, AgreesWithBruteForceOracles) {
    const auto s = oracle::sweep_diagrams(101, 300);
    EXPECT_EQ(s.diagrams, 300);
    EXPECT_EQ(s.limit_mismatches, 0);
    EXPECT_EQ(s.colimit_mismatches, 0);
}
