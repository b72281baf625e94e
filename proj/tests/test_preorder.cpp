#include <gtest/gtest.h>

#include "seqcat/errors.hpp"
#include "seqcat/preorder.hpp"
#include "support/generators.hpp"

using namespace seqcat;

TEST(Preorder, BooleanOrder) {
    const auto p = boolean_preorder();
    ASSERT_EQ(p->size(), 2);
    EXPECT_TRUE(p->leq(0, 1));
    EXPECT_FALSE(p->leq(1, 0));
    EXPECT_TRUE(p->leq(0, 0));
    EXPECT_TRUE(p->leq(1, 1));
}

TEST(Preorder, ChainIsTransitive) {
    const auto p = chain_preorder(3);
    EXPECT_TRUE(p->leq(0, 1));
    EXPECT_TRUE(p->leq(1, 2));
    EXPECT_TRUE(p->leq(0, 2));
    EXPECT_FALSE(p->leq(2, 0));
}

TEST(Preorder, MakePreorderClosesTransitively) {
    const auto p = make_preorder({"x", "y", "z"}, {{true, true, false}, {false, true, true}, {false, false, true}});
    EXPECT_TRUE(p->leq(0, 2));
    EXPECT_EQ(p->index_of("y"), 1);
}

TEST(Preorder, ProductOfFourBooleans) {
    const auto [p, proj] = power(boolean_preorder(), 4);
    ASSERT_EQ(p->size(), 16);
    ASSERT_EQ(proj.size(), 4u);
    const int x = p->index_of("[1010]");
    const int y = p->index_of("[1110]");
    ASSERT_GE(x, 0);
    ASSERT_GE(y, 0);
    EXPECT_TRUE(p->leq(x, y));
    EXPECT_FALSE(p->leq(y, x));
    EXPECT_TRUE(p->leq(x, x));
    EXPECT_EQ(proj[1](x), 0);
    EXPECT_EQ(proj[0](x), 1);
    for (const auto& m : proj) EXPECT_TRUE(validate_monotone(m).empty());
}

TEST(Preorder, ProductRejectsEmptyFactorList) { EXPECT_THROW(product({}), invalid_input); }

TEST(Preorder, MonotoneChecks) {
    const auto b = boolean_preorder();
    EXPECT_TRUE(validate_monotone(identity_map(b)).empty());
    EXPECT_TRUE(validate_monotone(MonotoneMap(b, b, {1, 1})).empty());
    const auto swap = validate_monotone(MonotoneMap(b, b, {1, 0}));
    ASSERT_EQ(swap.size(), 1u);
    EXPECT_EQ(swap.front().x, 0);
    EXPECT_EQ(swap.front().y, 1);
}

TEST(Preorder, GeneratedPreordersAreReflexiveAndTransitive) {
    for (const auto& p : gen::all_preorders(3)) {
        const int n = p->size();
        for (int a = 0; a < n; ++a) {
            EXPECT_TRUE(p->leq(a, a));
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (p->leq(a, b) && p->leq(b, c)) EXPECT_TRUE(p->leq(a, c));
        }
    }
}

TEST(Preorder, ProjectionsExtractComponents) {
    for (const auto& f : gen::preorders_up_to_iso(3))
        for (int arity = 1; arity <= 4; ++arity) {
            const auto [p, proj] = power(f, arity);
            for (int x = 0; x < p->size(); ++x)
                for (int i = 0; i < arity; ++i) EXPECT_EQ(proj[static_cast<std::size_t>(i)](x), p->components(x)[static_cast<std::size_t>(i)]);
            for (int x = 0; x < p->size(); ++x)
                for (int y = 0; y < p->size(); ++y) {
                    bool componentwise = true;
                    for (int i = 0; i < arity; ++i)
                        componentwise = componentwise && f->leq(p->components(x)[static_cast<std::size_t>(i)], p->components(y)[static_cast<std::size_t>(i)]);
                    EXPECT_EQ(p->leq(x, y), componentwise);
                }
        }
}

TEST(Preorder, CompositeOfMonotoneMapsIsMonotone) {
    gen::Rng rng(11);
    const auto all = gen::all_preorders(3);
    int checked = 0;
    for (int trial = 0; trial < 3000 && checked < 300; ++trial) {
        const auto& a = all[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(all.size()) - 1))];
        const auto& b = all[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(all.size()) - 1))];
        const auto& c = all[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(all.size()) - 1))];
        auto random_map = [&](const PreorderPtr& d, const PreorderPtr& e) {
            std::vector<int> m;
            for (int x = 0; x < d->size(); ++x) m.push_back(gen::uniform(rng, 0, e->size() - 1));
            return MonotoneMap(d, e, m);
        };
        const auto f = random_map(a, b);
        const auto g = random_map(b, c);
        if (!validate_monotone(f).empty() || !validate_monotone(g).empty()) continue;
        ++checked;
        EXPECT_TRUE(validate_monotone(compose(g, f)).empty());
    }
    EXPECT_GE(checked, 100);
}
