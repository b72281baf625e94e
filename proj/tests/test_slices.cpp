#include <gtest/gtest.h>

#include "seqcat/demo_data.hpp"
#include "seqcat/slices.hpp"

using namespace seqcat;

namespace {

const SeqAlignFunctor& four() {
    static const auto f = demo::four_individual_functor();
    return f;
}

Segment seg(const std::string& lit) { return parse_segment(four().spec.omega(), lit); }

const std::vector<MechanismTemplate>& templates() {
    static const std::vector<MechanismTemplate> t{duplication_template(), inversion_template()};
    return t;
}

}  // namespace

TEST(Slices, SameLengthSliceLiftsTheAnneRow) {
    const auto& f = four();
    const auto c = comma(seg("(!8,[1100])"), f.base);
    std::vector<int> eight;
    for (int k = 0; k < static_cast<int>(c.objects.size()); ++k)
        if (f.base.objects[static_cast<std::size_t>(c.objects[static_cast<std::size_t>(k)].base_object)].n1() == 8) eight.push_back(k);
    const auto s = slice_eval(f, 0, ran_eval_restricted(f, c, eight));
    EXPECT_EQ(s.ran_size.value, 3u);
    EXPECT_EQ(s.support.value, 3u);
    EXPECT_EQ(s.pairs.value, 3u);
    ASSERT_TRUE(s.listed);
    for (const auto& e : s.elements) EXPECT_EQ(render_row(f.alphabet, e.z), "ACCGACTG");
}

// Each of the nine insertions into the length-9 object forces ε at a different place.
TEST(Slices, CrossLengthComponentsEmptyTheFullSlice) {
    const auto s = slice_eval(four(), 0, seg("(!8,[1100])"));
    EXPECT_EQ(s.ran_size.value, 3u);
    EXPECT_EQ(s.support.value, 0u);
    EXPECT_TRUE(s.listed);
    EXPECT_TRUE(s.elements.empty());
}

TEST(Slices, LiftsAreUnitPreimages) {
    const auto& f = four();
    const auto tau = seg("(!8,[1100])");
    const auto ran = ran_eval(f, tau);
    for (const auto& choice : ran.choices()) {
        const auto x = ran.element(choice);
        for (const auto& z : lifts_of(f, 0, ran, x)) {
            const auto fwd = unit_forward(f, 0, ran.comma, z);
            const auto proj = project_ran(x, 0);
            for (std::size_t k = 0; k < fwd.size(); ++k)
                if (proj[k]) EXPECT_EQ(fwd[k], *proj[k]);
        }
    }
}

TEST(Slices, LargeRanIsSummarized) {
    SliceOptions opts;
    opts.list_cap = 10;
    const auto s = slice_eval(four(), 2, seg("(!8,[1011])"), opts);
    EXPECT_EQ(s.ran_size.value, 1048576u);
    EXPECT_FALSE(s.listed);
    EXPECT_EQ(s.support.value, 0u);
}

TEST(Slices, ParetoSubsetsAtTheFullColor) {
    const auto& f = four();
    const auto ran = ran_eval(f, seg("(!8,[1111])"));
    const auto front = pareto_subsets(f, ran);
    ASSERT_FALSE(front.empty());
    for (const auto& w : front) {
        EXPECT_FALSE(w.indices.empty());
        if (w.support.value > 0) {
            ASSERT_TRUE(w.witness.has_value());
            EXPECT_EQ(w.witness_z.size(), w.indices.size());
        }
    }
    // no member dominates another
    for (const auto& a : front)
        for (const auto& b : front) {
            if (&a == &b) continue;
            const bool dominates = a.indices.size() >= b.indices.size() && a.support.value >= b.support.value &&
                                   (a.indices.size() > b.indices.size() || a.support.value > b.support.value);
            EXPECT_FALSE(dominates);
        }
}

TEST(Slices, DuplicationIsDetectedWithAWitness) {
    const auto c = demo::duplication_case();
    EXPECT_TRUE(validate(c.functor).ok());
    const auto r = detect_mechanisms(c.functor, c.index, c.tau, templates());
    EXPECT_TRUE(r.detected(MechanismKind::duplication));
    EXPECT_FALSE(r.detected(MechanismKind::inversion));
    ASSERT_EQ(r.matches.size(), 1u);
    const auto& m = r.matches.front();
    EXPECT_TRUE(m.lifted);
    ASSERT_TRUE(m.z.has_value());
    EXPECT_EQ(render_word(c.functor.alphabet, *m.z), "(AC)(G)(GTCA)");
    EXPECT_EQ(m.implicated, (std::vector<int>{3}));
}

TEST(Slices, SubstitutionIsNotADuplication) {
    const auto c = demo::duplication_case("ACGGTCA", "ACGTGTCA");
    const auto r = detect_mechanisms(c.functor, c.index, c.tau, templates());
    EXPECT_FALSE(r.detected(MechanismKind::duplication));
    EXPECT_FALSE(r.detected(MechanismKind::inversion));
}

TEST(Slices, InversionIsDetected) {
    const auto c = demo::inversion_case();
    EXPECT_TRUE(validate(c.functor).ok());
    const auto r = detect_mechanisms(c.functor, c.index, c.tau, templates());
    EXPECT_TRUE(r.detected(MechanismKind::inversion));
    EXPECT_FALSE(r.detected(MechanismKind::duplication));
    ASSERT_FALSE(r.matches.empty());
    ASSERT_TRUE(r.matches.front().z.has_value());
    EXPECT_EQ(render_word(c.functor.alphabet, *r.matches.front().z), "(AC)(A)(C)(G)(GTCA)");
}

TEST(Slices, MechanismNames) {
    EXPECT_EQ(to_string(MechanismKind::duplication), "duplication");
    EXPECT_EQ(to_string(MechanismKind::inversion), "inversion");
    EXPECT_EQ(duplication_template().leg_insertions.size(), 2u);
    EXPECT_EQ(inversion_template().leg_insertions.size(), 3u);
}
