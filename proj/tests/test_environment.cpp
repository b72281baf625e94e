#include <gtest/gtest.h>

#include "seqcat/environment.hpp"
#include "support/oracles.hpp"

using namespace seqcat;

namespace {

// Inserts target positions 5, 8, 9 and 12.
SegmentMorphism gap_insertion() {
    const auto b = boolean_preorder();
    const auto src = parse_segment(b, "(111)(00)(1111)(11)");
    const auto dst = parse_segment(b, "(111)(000)(111111)(111)");
    auto m = make_morphism(src, dst, {0, 1, 2, 3, 4, 6, 7, 10, 11, 13, 14});
    return *m;
}

}  // namespace

TEST(Environment, AlphabetBasics) {
    const auto a = dna_alphabet();
    EXPECT_EQ(a.size(), 5);
    EXPECT_EQ(a.symbols[static_cast<std::size_t>(a.basepoint)], "eps");
    EXPECT_EQ(a.from_char('G'), a.index_of("G"));
    EXPECT_EQ(a.from_char(gap_char), a.basepoint);
    EXPECT_EQ(a.render(a.basepoint, false), "e");
    EXPECT_EQ(a.render(a.basepoint, true), "ε");
    EXPECT_THROW(make_alphabet({"A", "A"}, "A"), invalid_input);
    EXPECT_THROW(make_alphabet({"A", "C"}, "eps"), invalid_input);
}

TEST(Environment, GapInsertionWordImage) {
    const auto a = dna_alphabet();
    const auto m = gap_insertion();
    EXPECT_TRUE(validate_morphism(m).empty());
    const auto w = word_from_row(a, m.src, 1, "GACATTCCT");
    EXPECT_EQ(render_word(a, w), "(GAC)(ATTC)(CT)");
    const auto img = word_image(m, w, 1, a);
    EXPECT_EQ(render_row(a, img), "GACATeeTCeCT");
    EXPECT_EQ(render_word(a, img), "(GAC)(ATeeTC)(eCT)");
}

TEST(Environment, RowsWithEveryPosition) {
    const auto a = dna_alphabet();
    const auto s = parse_segment(boolean_preorder(), "(11)(00)(1)");
    // letters at the non-truncated positions are ignored
    EXPECT_EQ(word_from_row(a, s, 1, "ACGGT"), word_from_row(a, s, 1, "ACT"));
    EXPECT_THROW(word_from_row(a, s, 1, "ACGG"), invalid_input);
    EXPECT_THROW(word_from_row(a, s, 1, "AXT"), invalid_input);
}

TEST(Environment, EnumerationOrderAndCount) {
    const auto a = make_alphabet({"A", "C", "eps"}, "eps");
    const auto s = parse_segment(boolean_preorder(), "(11)(0)");
    WordEnumerator en(s, 1, a);
    EXPECT_EQ(en.count(), 9u);
    std::vector<Word> seen;
    while (auto w = en.next()) seen.push_back(*w);
    ASSERT_EQ(seen.size(), 9u);
    for (std::size_t k = 1; k < seen.size(); ++k) EXPECT_TRUE(seen[k - 1] < seen[k]);
    EXPECT_EQ(seen, enumerate_words(s, 1, a));
    EXPECT_THROW(enumerate_words(s, 0, a, 5), resource_error);
}

TEST(Environment, EmptyTruncationHasOneWord) {
    const auto s = parse_segment(boolean_preorder(), "(000)");
    const auto words = enumerate_words(s, 1, dna_alphabet());
    ASSERT_EQ(words.size(), 1u);
    EXPECT_TRUE(words.front().letters.empty());
}

TEST(Environment, ProductSpecAndAlignedTuples) {
    const auto spec = product_spec(boolean_preorder(), {"P", "Q"});
    EXPECT_EQ(spec.size(), 2);
    EXPECT_EQ(spec.index_of("Q"), 1);
    const auto om = spec.omega();
    const auto a = dna_alphabet();
    const auto s = parse_segment(om, "(!4,[11])");
    const auto x = make_aligned_tuple(spec, a, s, om->index_of("[11]"), {"ACeT", "AGGT"});
    EXPECT_TRUE(is_aligned_tuple_of(spec, x, s, om->index_of("[11]")));
    EXPECT_EQ(render_row(a, project(x, 0)), "ACeT");
    const auto hub = parse_segment(om, "(!4,[10])");
    const auto m = *quasi_homologous_morphism(s, hub);
    const auto y = aligned_image(spec, a, m, x);
    // the second index is no longer visible at the hub
    EXPECT_EQ(render_row(a, project(y, 0)), "ACeT");
    EXPECT_TRUE(project(y, 1).letters.empty());
}

TEST(Environment, FunctorLawsOnSmallPreorders) {
    const auto s = oracle::sweep_functor_laws(2, 4);
    EXPECT_EQ(s.preorders, 4);
    EXPECT_GT(s.composable_pairs, 10000);
    EXPECT_EQ(s.failures, 0) << (s.first_failures.empty() ? "" : s.first_failures.front());
}

TEST(Environment, WordImageOfCompositeOverDna) {
    gen::Rng rng(31);
    const auto a = dna_alphabet();
    const auto om = chain_preorder(3);
    int checked = 0;
    for (int trial = 0; trial < 3000 && checked < 100; ++trial) {
        const auto x = gen::random_segment(rng, om, gen::uniform(rng, 1, 4));
        const auto y = gen::random_segment(rng, om, x.n1() + gen::uniform(rng, 0, 2));
        const auto z = gen::random_segment(rng, om, y.n1() + gen::uniform(rng, 0, 2));
        const auto fs = enumerate_morphisms(x, y);
        const auto gs = enumerate_morphisms(y, z);
        if (fs.empty() || gs.empty()) continue;
        const auto& f = fs.back();
        const auto& g = gs.front();
        const int b = gen::uniform(rng, 0, 2);
        const auto words = enumerate_words(x, b, a);
        const auto& w = words[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(words.size()) - 1))];
        ++checked;
        EXPECT_EQ(word_image(compose(g, f), w, b, a), word_image(g, word_image(f, w, b, a), b, a));
    }
    EXPECT_GE(checked, 50);
}
