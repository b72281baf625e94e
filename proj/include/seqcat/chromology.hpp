#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "seqcat/environment.hpp"
#include "seqcat/finset.hpp"
#include "seqcat/truncation.hpp"

namespace seqcat {

struct SegEdge {
    int src = 0;
    int dst = 0;
    SegmentMorphism m;
};

struct SegCone {
    Segment apex;
    std::vector<Segment> nodes;
    std::vector<SegEdge> edges;
    std::vector<SegmentMorphism> legs;
};

// Throws invalid_input on shape errors or when e ∘ leg(src) != leg(dst).
void check_seg_cone(const SegCone& c);
// Nodes quasi-homologous with the apex and every leg and edge has f1 = identity.
bool is_chromology_cone(const SegCone& c);
// Cone in Seg(Ω|n) from an apex and nodes; legs and edges are the unique
// quasi-homologous morphisms. Edges are given as node index pairs.
SegCone make_chromology_cone(const Segment& apex, const std::vector<Segment>& nodes,
                             const std::vector<std::pair<int, int>>& edges);

struct CanonicalArrow {
    TruncationSet apex_tr;
    std::vector<TruncationSet> node_tr;
    // Each morphism u -> v yields the inclusion Tr(v) -> Tr(u).
    FinDiagram diagram;
    ColimitResult colim;
    // Colimit classes -> ranks in apex_tr.
    Function arrow;
};

CanonicalArrow canonical_arrow(const SegCone& c, int b);
bool is_exactly_distributive(const SegCone& c, int b);
bool is_injective(const SegCone& c, int b);
// "exactly-distributive", "injective" or "neither".
std::string cone_kind(const SegCone& c, int b);

struct Chromology {
    PreorderPtr omega;
    std::map<int, std::vector<SegCone>> cones_by_domain;

    // Checks the cone lives in Seg(Ω|n) before filing it under n.
    void add(const SegCone& c);
};

// Covariant set-valued functor on segments, evaluated on demand.
class SetFunctor {
public:
    virtual ~SetFunctor() = default;
    virtual int object_size(const Segment& s) const = 0;
    virtual Function arrow(const SegmentMorphism& m) const = 0;
    // Whether object_size/arrow can be evaluated without exceeding the cap.
    virtual bool materializable(const Segment& s) const { (void)s; return true; }
};

// E_b^ε: words over Tr_b, indexed lexicographically.
class EnvironmentFunctor : public SetFunctor {
public:
    EnvironmentFunctor(PointedAlphabet alphabet, int level, std::size_t cap = default_cap);
    int object_size(const Segment& s) const override;
    Function arrow(const SegmentMorphism& m) const override;
    bool materializable(const Segment& s) const override;
    int level() const { return level_; }

private:
    PointedAlphabet alphabet_;
    int level_;
    std::size_t cap_;
};

// Finite table of images; lookups by equality. Missing data is an error.
class TableFunctor : public SetFunctor {
public:
    void set_object(const Segment& s, int size);
    void set_arrow(const SegmentMorphism& m, Function f);
    int object_size(const Segment& s) const override;
    Function arrow(const SegmentMorphism& m) const override;

private:
    std::vector<std::pair<Segment, int>> objects_;
    std::vector<std::pair<SegmentMorphism, Function>> arrows_;
};

enum class PedigradMode { bij, surj };

PedigradMode parse_pedigrad_mode(const std::string& s);

struct ConeCheck {
    int n = 0;
    int index = 0;
    Classification classification = Classification::neither;
    bool pass = false;
    // Classification taken from the canonical arrow instead of materialized images.
    bool structural = false;
};

struct PedigradReport {
    std::vector<ConeCheck> cones;
    bool pass = true;
};

// Image cone of a segment cone under a functor.
SetCone image_cone(const SetFunctor& F, const SegCone& c);

// With an EnvironmentFunctor whose images exceed the cap, the structural
// shortcut is used: bijective adjoint iff the canonical arrow is bijective,
// surjective adjoint iff it is injective.
PedigradReport verify_pedigrad(const SetFunctor& F, const Chromology& chrom, PedigradMode mode,
                               std::size_t cap = default_cap);

}  // namespace seqcat
