#pragma once

#include <vector>

#include "seqcat/segments.hpp"

namespace seqcat {

// Positions of a segment whose patch color is above the level. Positions keep
// their original numbering.
struct TruncationSet {
    Segment segment;
    int level = 0;
    std::vector<int> indices;

    int size() const { return static_cast<int>(indices.size()); }
    // Rank of a position inside indices, or -1 when it is not truncated.
    int rank(int pos) const;
    bool contains(int pos) const { return rank(pos) >= 0; }
};

inline constexpr int star = -1;

// Pointed map Tr_b(dst) ∪ {★} -> Tr_b(src) ∪ {★} induced by a morphism src -> dst.
// mapping[k] is the image of dom.indices[k]: a position of src, or star.
struct PointedIndexMap {
    TruncationSet dom;
    TruncationSet cod;
    std::vector<int> mapping;

    int apply(int pos) const;
    bool operator==(const PointedIndexMap& o) const {
        return dom.indices == o.dom.indices && cod.indices == o.cod.indices && mapping == o.mapping;
    }
};

TruncationSet truncate(const Segment& s, int b);
PointedIndexMap truncate_morphism(const SegmentMorphism& m, int b);
// Composite of pointed maps: first g, then f (g: Tr(C)->Tr(B), f: Tr(B)->Tr(A)).
PointedIndexMap compose(const PointedIndexMap& f, const PointedIndexMap& g);

}  // namespace seqcat
