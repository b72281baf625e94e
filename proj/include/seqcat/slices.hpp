#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqcat/kan.hpp"

namespace seqcat {

struct SliceElement {
    RanTuple x;
    Word z;
    int index = 0;
};

struct SliceOptions {
    std::size_t cap = default_cap;
    // Elements are listed only when Ran(tau) has at most this many elements.
    std::size_t list_cap = 100000;
};

struct SliceResult {
    int index = 0;
    Count ran_size;
    // Elements x of Ran(tau) with at least one lift z.
    Count support;
    // Pairs (x, z).
    Count pairs;
    // True when `elements` is the whole slice; otherwise it holds at most one witness.
    bool listed = false;
    std::vector<SliceElement> elements;
};

SliceResult slice_eval(const SeqAlignFunctor& f, int i, const RanValue& ran, const SliceOptions& opts = {});
SliceResult slice_eval(const SeqAlignFunctor& f, int i, const Segment& tau, const SliceOptions& opts = {});

// Lifts of a single element at index i (unit_solve on its projection).
std::vector<Word> lifts_of(const SeqAlignFunctor& f, int i, const RanValue& ran, const RanTuple& x,
                           std::size_t cap = default_cap);

struct WidePullback {
    std::vector<int> indices;
    Count support;
    // One element of the support with a lift per index, when the support is non-empty.
    std::optional<RanTuple> witness;
    std::vector<Word> witness_z;
};

WidePullback wide_pullback(const SeqAlignFunctor& f, const RanValue& ran, const std::vector<int>& indices,
                           const SliceOptions& opts = {});
// Subsets of indices that are Pareto-optimal for (subset size, support), over all non-empty subsets.
std::vector<WidePullback> pareto_subsets(const SeqAlignFunctor& f, const RanValue& ran, const SliceOptions& opts = {});

enum class MechanismKind { duplication, inversion, custom };

std::string to_string(MechanismKind k);

struct MechanismTemplate {
    MechanismKind kind = MechanismKind::custom;
    std::string name;
    int block_len = 0;
    // Inserted positions of each leg on the pushed target, relative to the block start.
    std::vector<std::vector<int>> leg_insertions;
    // Inserted nodes must be strictly above f_i(b); otherwise they only need to be visible at f_i(b).
    bool above_level = false;
};

MechanismTemplate duplication_template();
MechanismTemplate inversion_template();

struct MechanismMatch {
    MechanismKind kind = MechanismKind::custom;
    std::string name;
    int block_start = 0;
    int block_len = 0;
    std::vector<int> comma_objects;
    bool lifted = false;
    std::optional<RanTuple> x;
    std::optional<Word> z;
    std::vector<int> implicated;
};

struct MechanismReport {
    int index = 0;
    Segment tau;
    std::vector<MechanismMatch> matches;

    bool detected(MechanismKind k) const;
};

MechanismReport detect_mechanisms(const SeqAlignFunctor& f, int i, const Segment& tau,
                                  const std::vector<MechanismTemplate>& templates, const SliceOptions& opts = {});

}  // namespace seqcat
