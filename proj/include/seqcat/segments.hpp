#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqcat/preorder.hpp"

namespace seqcat {

// A colored segment: topology [n1] -> [n0] (monotone surjection) and a color per patch.
class Segment {
public:
    Segment() = default;
    Segment(PreorderPtr omega, std::vector<int> topology, std::vector<int> colors);

    const PreorderPtr& omega() const { return omega_; }
    int n1() const { return static_cast<int>(topology_.size()); }
    int n0() const { return static_cast<int>(colors_.size()); }
    const std::vector<int>& topology() const { return topology_; }
    const std::vector<int>& colors() const { return colors_; }
    int patch(int pos) const { return topology_.at(static_cast<std::size_t>(pos)); }
    int color(int patch) const { return colors_.at(static_cast<std::size_t>(patch)); }
    int color_at(int pos) const { return color(patch(pos)); }
    std::vector<int> patch_sizes() const;

    bool operator==(const Segment& o) const;
    bool operator<(const Segment& o) const;

private:
    PreorderPtr omega_;
    std::vector<int> topology_;
    std::vector<int> colors_;
};

struct SegmentMorphism {
    Segment src;
    Segment dst;
    std::vector<int> f1;
    std::vector<int> f0;

    bool operator==(const SegmentMorphism& o) const {
        return src == o.src && dst == o.dst && f1 == o.f1 && f0 == o.f0;
    }
};

Segment trivial_segment(const PreorderPtr& omega, int n, int b);
Segment segment_from_patches(const PreorderPtr& omega, const std::vector<int>& sizes, const std::vector<int>& colors);

// Human-readable violations of the morphism invariants; empty when valid.
std::vector<std::string> validate_morphism(const SegmentMorphism& m);

SegmentMorphism identity(const Segment& s);
SegmentMorphism compose(const SegmentMorphism& g, const SegmentMorphism& f);

std::optional<std::vector<int>> induce_f0(const std::vector<int>& f1, const Segment& src, const Segment& dst);
// Morphism with the given f1 and its induced f0, if one exists.
std::optional<SegmentMorphism> make_morphism(const Segment& src, const Segment& dst, const std::vector<int>& f1);

// All morphisms src -> dst in lexicographic f1 order.
std::vector<SegmentMorphism> enumerate_morphisms(const Segment& src, const Segment& dst);
std::optional<SegmentMorphism> quasi_homologous_morphism(const Segment& src, const Segment& dst);

Segment push_colors(const MonotoneMap& f, const Segment& s);
SegmentMorphism push_colors_morphism(const MonotoneMap& f, const SegmentMorphism& m);

bool is_homologous(const Segment& a, const Segment& b);
bool is_quasi_homologous(const Segment& a, const Segment& b);

// Bracket notation. Over a two-element chain colors render as bullets
// (• for the top, ◦ for the bottom); otherwise each node shows its color label.
std::string to_string(const Segment& s);
// Compact literal: "(!n,label)" for trivial segments, else the bracket form
// with single-character color labels, e.g. "(222)(11)".
std::string to_literal(const Segment& s);
Segment parse_segment(const PreorderPtr& omega, const std::string& literal);

}  // namespace seqcat
