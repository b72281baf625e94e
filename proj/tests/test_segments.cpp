#include <gtest/gtest.h>

#include "seqcat/errors.hpp"
#include "seqcat/segments.hpp"
#include "support/generators.hpp"

using namespace seqcat;

namespace {

Segment seg(const std::string& lit) { return parse_segment(boolean_preorder(), lit); }

}  // namespace

TEST(Segments, LiteralRoundTrip) {
    const auto s = seg("(111)(00)(1111)(00000)(111)(0)");
    EXPECT_EQ(s.n1(), 18);
    EXPECT_EQ(s.n0(), 6);
    EXPECT_EQ(s.patch_sizes(), (std::vector<int>{3, 2, 4, 5, 3, 1}));
    EXPECT_EQ(s.color_at(3), 0);
    EXPECT_EQ(s.color_at(17), 0);
    EXPECT_EQ(parse_segment(s.omega(), to_literal(s)), s);
    EXPECT_EQ(to_string(seg("(11)(0)")), "(••)(◦)");
}

TEST(Segments, TrivialAndCountedLiterals) {
    const auto [om, proj] = power(boolean_preorder(), 4);
    const auto t = parse_segment(om, "(!8,[1100])");
    EXPECT_EQ(t.n1(), 8);
    EXPECT_EQ(t.n0(), 1);
    EXPECT_EQ(t, trivial_segment(om, 8, om->index_of("[1100]")));
    const auto c = parse_segment(om, "(2:[1100])(3:[0011])");
    EXPECT_EQ(c.patch_sizes(), (std::vector<int>{2, 3}));
    EXPECT_EQ(parse_segment(om, to_literal(t)), t);
}

TEST(Segments, MalformedLiteralsThrow) {
    EXPECT_THROW(seg("(110)"), parse_error);
    EXPECT_THROW(seg("(11"), parse_error);
    EXPECT_THROW(seg(""), parse_error);
    EXPECT_THROW(seg("11"), parse_error);
}

TEST(Segments, ConstructorRejectsBadTopology) {
    const auto b = boolean_preorder();
    EXPECT_THROW(Segment(b, {0, 2}, {1, 1, 1}), invalid_input);
    EXPECT_THROW(Segment(b, {1, 0}, {1, 1}), invalid_input);
    EXPECT_THROW(Segment(b, {0, 0}, {5}), invalid_input);
}

TEST(Segments, IdentityValidates) {
    const auto s = seg("(11)(0)(111)");
    const auto id = identity(s);
    EXPECT_TRUE(validate_morphism(id).empty());
    EXPECT_EQ(id.f1, (std::vector<int>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(id.f0, (std::vector<int>{0, 1, 2}));
}

TEST(Segments, ColorsMayOnlyDecrease) {
    // a morphism may only send a patch to a patch of lower or equal color
    EXPECT_TRUE(quasi_homologous_morphism(seg("(1111)"), seg("(0000)")).has_value());
    EXPECT_FALSE(quasi_homologous_morphism(seg("(0000)"), seg("(1111)")).has_value());
    EXPECT_TRUE(quasi_homologous_morphism(seg("(11)(11)"), seg("(1111)")).has_value());
    EXPECT_FALSE(quasi_homologous_morphism(seg("(1111)"), seg("(11)(11)")).has_value());
}

TEST(Segments, NoMorphismsBetweenIncomparableTrivialSegments) {
    const auto [om, proj] = power(boolean_preorder(), 4);
    EXPECT_TRUE(enumerate_morphisms(parse_segment(om, "(!8,[0011])"), parse_segment(om, "(!8,[1100])")).empty());
    EXPECT_FALSE(enumerate_morphisms(parse_segment(om, "(!8,[1100])"), parse_segment(om, "(!8,[1000])")).empty());
}

TEST(Segments, EnumerationCountsInjectiveMonotoneMaps) {
    // one patch to one patch of the same color: every strictly increasing f1 works
    const auto src = seg("(11)");
    const auto dst = seg("(1111)");
    const auto all = enumerate_morphisms(src, dst);
    EXPECT_EQ(all.size(), 6u);
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1].f1, all[k].f1);
}

TEST(Segments, MakeMorphismChecksPatchOrder) {
    const auto src = seg("(1)(1)");
    const auto dst = seg("(11)(1)");
    EXPECT_TRUE(make_morphism(src, dst, {0, 2}).has_value());
    EXPECT_TRUE(make_morphism(src, dst, {0, 1}).has_value());
    EXPECT_FALSE(make_morphism(src, dst, {1, 0}).has_value());
    EXPECT_FALSE(make_morphism(src, dst, {0, 0}).has_value());
}

TEST(Segments, ComposeMatchesComponentwiseComposition) {
    gen::Rng rng(3);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto om = gen::random_preorder(rng, 3);
        const auto a = gen::random_segment(rng, om, gen::uniform(rng, 1, 3));
        const auto b = gen::random_segment(rng, om, a.n1() + gen::uniform(rng, 0, 1));
        const auto c = gen::random_segment(rng, om, b.n1() + gen::uniform(rng, 0, 1));
        const auto fs = enumerate_morphisms(a, b);
        const auto gs = enumerate_morphisms(b, c);
        if (fs.empty() || gs.empty()) continue;
        const auto& f = fs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(fs.size()) - 1))];
        const auto& g = gs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(gs.size()) - 1))];
        const auto h = compose(g, f);
        ++checked;
        EXPECT_TRUE(validate_morphism(h).empty());
        for (int i = 0; i < a.n1(); ++i) EXPECT_EQ(h.f1[static_cast<std::size_t>(i)], g.f1[static_cast<std::size_t>(f.f1[static_cast<std::size_t>(i)])]);
        for (int p = 0; p < a.n0(); ++p) EXPECT_EQ(h.f0[static_cast<std::size_t>(p)], g.f0[static_cast<std::size_t>(f.f0[static_cast<std::size_t>(p)])]);
    }
    EXPECT_GT(checked, 50);
}

TEST(Segments, InducedF0IsDeterminedByF1) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto om = gen::random_preorder(rng, 3);
        const auto a = gen::random_segment(rng, om, gen::uniform(rng, 1, 3));
        const auto b = gen::random_segment(rng, om, a.n1() + gen::uniform(rng, 0, 2));
        for (const auto& m : enumerate_morphisms(a, b)) {
            const auto f0 = induce_f0(m.f1, a, b);
            ASSERT_TRUE(f0.has_value());
            EXPECT_EQ(*f0, m.f0);
        }
    }
}

TEST(Segments, PushColorsAlongProjection) {
    const auto [om, proj] = power(boolean_preorder(), 4);
    const auto s = parse_segment(om, "(2:[1100])(3:[0110])");
    const auto pushed = push_colors(proj[1], s);
    EXPECT_EQ(pushed.topology(), s.topology());
    EXPECT_EQ(pushed.colors(), (std::vector<int>{1, 1}));
    const auto m = *quasi_homologous_morphism(s, parse_segment(om, "(!5,[0100])"));
    EXPECT_TRUE(validate_morphism(push_colors_morphism(proj[1], m)).empty());
    EXPECT_THROW(push_colors(proj[1], seg("(1)")), invalid_input);
}

TEST(Segments, PushColorsPreservesMorphisms) {
    gen::Rng rng(9);
    const auto [om, proj] = power(chain_preorder(3), 2);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = gen::random_segment(rng, om, gen::uniform(rng, 1, 4));
        const auto b = gen::random_quotient(rng, a);
        const auto m = quasi_homologous_morphism(a, b);
        ASSERT_TRUE(m.has_value());
        for (const auto& p : proj) EXPECT_TRUE(validate_morphism(push_colors_morphism(p, *m)).empty());
    }
}

TEST(Segments, HomologyRelations) {
    EXPECT_TRUE(is_homologous(seg("(11)(0)"), seg("(00)(0)")));
    EXPECT_FALSE(is_homologous(seg("(11)(0)"), seg("(111)")));
    EXPECT_TRUE(is_quasi_homologous(seg("(11)(0)"), seg("(111)")));
    EXPECT_FALSE(is_quasi_homologous(seg("(11)"), seg("(111)")));
}
