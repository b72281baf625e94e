#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcat/alignment_functor.hpp"
#include "seqcat/chromology.hpp"

namespace seqcat {

struct CommaObject {
    int base_object = 0;
    SegmentMorphism f;
};

struct CommaArrow {
    int src = 0;
    int dst = 0;
    int base_morphism = 0;
};

struct CommaCategory {
    Segment tau;
    std::vector<CommaObject> objects;
    // Identity arrows are omitted.
    std::vector<CommaArrow> arrows;

    // Object with the given base object and f1, or -1.
    int find(int base_object, const std::vector<int>& f1) const;
};

CommaCategory comma(const Segment& tau, const BaseCategory& base);
// The cone with apex tau, one node per comma object and one edge per arrow.
SegCone comma_cone(const CommaCategory& c, const BaseCategory& base);

// One connected component of the comma diagram; its limit is one factor of Ran.
struct RanFactor {
    std::vector<int> nodes;
    // tuples[k][j] indexes node_values[nodes[j]].
    std::vector<std::vector<int>> tuples;

    int size() const { return static_cast<int>(tuples.size()); }
    bool terminal() const { return tuples.size() == 1; }
};

// Saturating count.
struct Count {
    std::uint64_t value = 1;
    bool overflow = false;

    Count& operator*=(std::uint64_t k);
    Count& operator*=(const Count& k);
    Count& operator+=(const Count& k);
    static Count zero() { return {0, false}; }
    std::string str() const;
};

// Components of a Ran element, one per comma object; empty for dropped hubs.
using RanTuple = std::vector<std::optional<AlignedTuple>>;

struct RanValue {
    CommaCategory comma;
    // Values admitted at each comma object after arc consistency.
    std::vector<std::vector<AlignedTuple>> node_values;
    // Lazy hubs with no determined inbound edge; their component is free.
    std::vector<bool> dropped;
    std::vector<RanFactor> factors;
    std::vector<std::string> warnings;

    Count cardinality() const;
    int nonterminal_factor_count() const;
    // e.g. "L[7 nodes]{3} x T(!9,[1100])^9{1}"; terminal factors marked.
    std::string summary() const;
    // choice[k] picks a tuple of factors[k].
    RanTuple element(const std::vector<int>& choice) const;
    std::vector<std::vector<int>> choices(std::size_t cap = default_cap) const;
    // Factor containing a comma object, or -1 for dropped objects.
    int factor_of(int comma_object) const;
};

struct RanOptions {
    std::size_t cap = default_cap;
};

RanValue ran_eval(const SeqAlignFunctor& f, const Segment& tau, const RanOptions& opts = {});
// Limit over the full subdiagram on the listed comma objects; the others are
// marked dropped without a warning.
RanValue ran_eval_restricted(const SeqAlignFunctor& f, const CommaCategory& c, const std::vector<int>& objects,
                             const RanOptions& opts = {});

// Diagram of segments with a cone of legs out of tau, to evaluate
// Ran(tau) -> lim_A Ran∘F.
struct RanCone {
    Segment apex;
    std::vector<Segment> nodes;
    std::vector<SegEdge> edges;
    std::vector<SegmentMorphism> legs;
};

struct CanonicalRanArrow {
    Classification classification = Classification::neither;
    Count domain_size;
    int codomain_size = 0;
    // The map restricted to the product of the factors it depends on.
    Function restricted;
    std::vector<int> dependent_factors;
    std::vector<std::string> warnings;
};

CanonicalRanArrow canonical_ran_arrow(const SeqAlignFunctor& f, const RanCone& cone, const RanOptions& opts = {});
CanonicalRanArrow ran_on_morphism(const SeqAlignFunctor& f, const SegmentMorphism& h, const RanOptions& opts = {});
// Image of a single element under Ran(h).
RanTuple ran_apply(const RanValue& from, const CommaCategory& to, const SegmentMorphism& h, const RanTuple& x);

// Unit component: word at each comma object.
std::vector<Word> unit_forward(const SeqAlignFunctor& f, int i, const CommaCategory& c, const Word& z);
std::vector<Word> unit_forward(const SeqAlignFunctor& f, int i, const Segment& tau, const Word& z);

// Letters forced on Tr(tau_i) by the target (-1 = unconstrained), or nothing
// when an unmapped position is not ε or two constraints disagree. Missing
// target components impose nothing.
std::optional<std::vector<int>> unit_constraints(const SeqAlignFunctor& f, int i, const CommaCategory& c,
                                                 const std::vector<std::optional<Word>>& target);
std::vector<Word> unit_solve(const SeqAlignFunctor& f, int i, const CommaCategory& c,
                             const std::vector<std::optional<Word>>& target, std::size_t cap = default_cap);
std::vector<Word> unit_solve(const SeqAlignFunctor& f, int i, const Segment& tau,
                             const std::vector<std::optional<Word>>& target, std::size_t cap = default_cap);

// Projection of a Ran element at index i, component by component.
std::vector<std::optional<Word>> project_ran(const RanTuple& x, int i);

}  // namespace seqcat
