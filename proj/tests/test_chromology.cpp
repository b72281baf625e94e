#include <gtest/gtest.h>

#include "seqcat/chromology.hpp"
#include "support/generators.hpp"

using namespace seqcat;

namespace {

SegCone cone(const PreorderPtr& om, const std::string& apex, const std::vector<std::string>& nodes,
             const std::vector<std::pair<int, int>>& edges = {}) {
    std::vector<Segment> ns;
    for (const auto& n : nodes) ns.push_back(parse_segment(om, n));
    return make_chromology_cone(parse_segment(om, apex), ns, edges);
}

}  // namespace

TEST(Chromology, DisjointCoverIsExactlyDistributive) {
    const auto c = cone(boolean_preorder(), "(11)(11)", {"(11)(00)", "(00)(11)"});
    EXPECT_TRUE(is_chromology_cone(c));
    EXPECT_EQ(cone_kind(c, 1), "exactly-distributive");
    // at the bottom level both nodes see every position and nothing glues them
    EXPECT_EQ(cone_kind(c, 0), "neither");
}

TEST(Chromology, SharedLowerNodeGluesTheCover) {
    const auto c = cone(boolean_preorder(), "(11)(11)", {"(11)(00)", "(00)(11)", "(00)(00)"}, {{0, 2}, {1, 2}});
    EXPECT_EQ(cone_kind(c, 0), "exactly-distributive");
    EXPECT_EQ(cone_kind(c, 1), "exactly-distributive");
    const auto arrow = canonical_arrow(c, 0);
    EXPECT_EQ(arrow.colim.classes, 4);
    EXPECT_EQ(arrow.apex_tr.size(), 4);
}

TEST(Chromology, MissingPositionGivesInjective) {
    const auto c = cone(boolean_preorder(), "(1)(1)", {"(1)(0)"});
    EXPECT_EQ(cone_kind(c, 1), "injective");
    EXPECT_TRUE(is_injective(c, 1));
    EXPECT_FALSE(is_exactly_distributive(c, 1));
}

TEST(Chromology, ConesMustCommute) {
    const auto om = boolean_preorder();
    auto c = cone(om, "(11)", {"(11)", "(00)"}, {{0, 1}});
    EXPECT_NO_THROW(check_seg_cone(c));
    // a non-identity f1 on a leg breaks both the cone condition and the chromology shape
    const auto s = parse_segment(om, "(1)");
    const auto t = parse_segment(om, "(11)");
    SegCone bad{s, {t}, {}, {*make_morphism(s, t, {1})}};
    EXPECT_NO_THROW(check_seg_cone(bad));
    EXPECT_FALSE(is_chromology_cone(bad));
    Chromology chrom{om, {}};
    EXPECT_THROW(chrom.add(bad), invalid_input);
    EXPECT_NO_THROW(chrom.add(c));
    EXPECT_EQ(chrom.cones_by_domain.at(2).size(), 1u);
}

TEST(Chromology, MakeConeRejectsUnreachableNodes) {
    EXPECT_THROW(cone(boolean_preorder(), "(00)", {"(11)"}), invalid_input);
    EXPECT_THROW(cone(boolean_preorder(), "(11)", {"(111)"}), invalid_input);
}

TEST(Chromology, EnvironmentFunctorCountsWords) {
    const EnvironmentFunctor F(make_alphabet({"A", "C", "eps"}, "eps"), 1);
    const auto om = boolean_preorder();
    EXPECT_EQ(F.object_size(parse_segment(om, "(11)(0)(1)")), 27);
    const auto m = *quasi_homologous_morphism(parse_segment(om, "(11)(1)"), parse_segment(om, "(00)(1)"));
    const auto f = F.arrow(m);
    EXPECT_EQ(f.dom, 27);
    EXPECT_EQ(f.cod, 3);
    EXPECT_EQ(classify(f), Classification::surjective_only);
    const EnvironmentFunctor tiny(dna_alphabet(), 1, 100);
    EXPECT_FALSE(tiny.materializable(parse_segment(om, "(111)")));
    EXPECT_THROW(tiny.object_size(parse_segment(om, "(111)")), resource_error);
}

TEST(Chromology, TableFunctorLooksUpByEquality) {
    const auto om = boolean_preorder();
    const auto s = parse_segment(om, "(1)");
    TableFunctor F;
    F.set_object(s, 2);
    F.set_arrow(identity(s), identity_function(2));
    EXPECT_EQ(F.object_size(s), 2);
    EXPECT_EQ(F.arrow(identity(s)), identity_function(2));
    EXPECT_THROW(F.object_size(parse_segment(om, "(0)")), invalid_input);
}

TEST(Chromology, SmallConesMatchTheirImageAdjoint) {
    const auto om = chain_preorder(3);
    Chromology chrom{om, {}};
    chrom.add(cone(om, "(222)(11)(222)(2222)", {"(000)(11)(111)(0000)", "(000)(11)(000)(2222)", "(222)(11)(000)(0000)", "(000)(11)(000)(0000)"},
                   {{0, 3}, {1, 3}, {2, 3}}));
    const EnvironmentFunctor F(make_alphabet({"A", "eps"}, "eps"), 1);
    const auto bij = verify_pedigrad(F, chrom, PedigradMode::bij);
    ASSERT_EQ(bij.cones.size(), 1u);
    EXPECT_FALSE(bij.cones.front().structural);
    EXPECT_EQ(bij.cones.front().classification == Classification::bijective, cone_kind(chrom.cones_by_domain.at(12).front(), 1) == "exactly-distributive");
}

// Exactly-distributive cones give bijective adjoints, injective ones surjective adjoints.
TEST(Chromology, CanonicalArrowPredictsTheAdjoint) {
    gen::Rng rng(77);
    const auto alphabet = make_alphabet({"A", "eps"}, "eps");
    int bij = 0, surj = 0;
    for (int draw = 0; draw < 2000 && (bij < 40 || surj < 40); ++draw) {
        const auto om = gen::random_preorder(rng, 3);
        const auto c = gen::random_chromology_cone(rng, om, gen::uniform(rng, 1, 6));
        ASSERT_TRUE(is_chromology_cone(c));
        const int b = gen::uniform(rng, 0, om->size() - 1);
        const auto kind = cone_kind(c, b);
        if (kind == "neither") continue;
        Chromology chrom{om, {}};
        chrom.add(c);
        const EnvironmentFunctor F(alphabet, b);
        const auto mode = kind == "exactly-distributive" ? PedigradMode::bij : PedigradMode::surj;
        const auto report = verify_pedigrad(F, chrom, mode);
        ASSERT_EQ(report.cones.size(), 1u);
        EXPECT_FALSE(report.cones.front().structural);
        EXPECT_TRUE(report.pass) << kind << " at level " << b;
        (mode == PedigradMode::bij ? bij : surj)++;
    }
    EXPECT_GE(bij, 40);
    EXPECT_GE(surj, 40);
}

TEST(Chromology, StructuralShortcutAgreesWithMaterialized) {
    gen::Rng rng(79);
    const auto alphabet = make_alphabet({"A", "eps"}, "eps");
    for (int draw = 0; draw < 150; ++draw) {
        const auto om = gen::random_preorder(rng, 3);
        const auto c = gen::random_chromology_cone(rng, om, gen::uniform(rng, 1, 5));
        Chromology chrom{om, {}};
        chrom.add(c);
        const int b = gen::uniform(rng, 0, om->size() - 1);
        const auto full = verify_pedigrad(EnvironmentFunctor(alphabet, b), chrom, PedigradMode::bij);
        const auto shortcut = verify_pedigrad(EnvironmentFunctor(alphabet, b, 0), chrom, PedigradMode::bij);
        ASSERT_TRUE(shortcut.cones.front().structural);
        EXPECT_EQ(full.cones.front().classification, shortcut.cones.front().classification);
    }
}
