#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqcat/dp_align.hpp"
#include "seqcat/environment.hpp"
#include "seqcat/finset.hpp"

namespace seqcat {

struct BaseMorphism {
    int src = 0;
    int dst = 0;
    SegmentMorphism m;
};

struct BaseCategory {
    std::vector<Segment> objects;
    std::vector<BaseMorphism> morphisms;

    // Full subcategory of each Seg(Ω|n) on the objects, plus every Seg(Ω)
    // morphism between the declared cross-length pairs, closed under composition.
    static BaseCategory full(std::vector<Segment> objects, const std::vector<std::pair<int, int>>& links = {});

    int index_of(const Segment& s) const;  // -1 when absent
    std::vector<int> hom(int src, int dst) const;
    int identity_of(int obj) const;
};

enum class HubMode { lazy, reachable_closure, full_enumeration };

HubMode parse_hub_mode(const std::string& s);
std::string to_string(HubMode m);

struct ObjectImage {
    // A hub stands for the full aligned environment image. A lazy hub keeps no
    // elements; membership is checked by shape, minus the excluded tuples.
    bool hub = false;
    bool materialized = true;
    std::vector<AlignedTuple> elements;
    std::vector<AlignedTuple> excluded;
};

class SeqAlignFunctor {
public:
    BaseCategory base;
    AlignmentSpec spec;
    PointedAlphabet alphabet;
    int level = 0;
    std::vector<ObjectImage> images;

    bool is_lazy(int obj) const;
    bool contains(int obj, const AlignedTuple& x) const;
    // Index of x in a materialized image, or -1.
    int find(int obj, const AlignedTuple& x) const;
    AlignedTuple apply(int morphism, const AlignedTuple& x) const;
    // Function between materialized images; throws when x leaves the target.
    Function arrow(int morphism) const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const SeqAlignFunctor& f);

struct BuildPolicy {
    // Objects over the spec's Ω. Objects with exactly two visible indices get
    // that pair's alignments of matching length; exactly one visible index
    // makes a hub.
    std::vector<Segment> objects;
    int level = 0;
    HubMode hub_mode = HubMode::lazy;
    std::size_t hub_cap = 100000;
    std::vector<std::pair<int, int>> links;
};

// Indices i with f_i(level) ⪯ f_i(color) somewhere on the segment.
std::vector<int> visible_indices(const AlignmentSpec& spec, const Segment& s, int level);

SeqAlignFunctor build_from_pairwise(const AlignmentSpec& spec, const PointedAlphabet& alphabet,
                                    const NamedSequences& individuals, const std::vector<PairAlignments>& pairwise,
                                    const BuildPolicy& policy);

// The 15 objects used for the four-individual example, over Ω = {0⪯1}^4.
std::vector<Segment> example_objects(const PreorderPtr& omega4);

struct RecolorPlan {
    // Size of the new chain factor; 0 keeps the current Ω.
    int chain_size = 0;
    // Old factor element -> new factor element.
    std::vector<int> embedding;
    // Copy the image of an existing object onto a new segment (over the new Ω).
    std::vector<std::pair<int, Segment>> recolor;
    std::vector<Segment> new_hubs;
    // Cross-length links between object segments (over the new Ω).
    std::vector<std::pair<Segment, Segment>> links;
};

SeqAlignFunctor extend_colors(const SeqAlignFunctor& f, const RecolorPlan& plan);

}  // namespace seqcat
