#include "seqcat/truncation.hpp"

#include <algorithm>

#include "seqcat/errors.hpp"

namespace seqcat {

int TruncationSet::rank(int pos) const {
    auto it = std::lower_bound(indices.begin(), indices.end(), pos);
    if (it == indices.end() || *it != pos) return -1;
    return static_cast<int>(it - indices.begin());
}

int PointedIndexMap::apply(int pos) const {
    if (pos == star) return star;
    const int r = dom.rank(pos);
    if (r < 0) throw invalid_input("position outside the truncation set");
    return mapping[static_cast<std::size_t>(r)];
}

TruncationSet truncate(const Segment& s, int b) {
    if (b < 0 || b >= s.omega()->size()) throw invalid_input("truncation level outside the preorder");
    TruncationSet t{s, b, {}};
    for (int i = 0; i < s.n1(); ++i)
        if (s.omega()->leq(b, s.color_at(i))) t.indices.push_back(i);
    return t;
}

PointedIndexMap truncate_morphism(const SegmentMorphism& m, int b) {
    PointedIndexMap p{truncate(m.dst, b), truncate(m.src, b), {}};
    // Inverse of f1 on its image.
    std::vector<int> pre(static_cast<std::size_t>(m.dst.n1()), star);
    for (int i = 0; i < m.src.n1(); ++i) pre[static_cast<std::size_t>(m.f1[static_cast<std::size_t>(i)])] = i;
    for (int j : p.dom.indices) {
        const int i = pre[static_cast<std::size_t>(j)];
        p.mapping.push_back(i != star && p.cod.contains(i) ? i : star);
    }
    return p;
}

PointedIndexMap compose(const PointedIndexMap& f, const PointedIndexMap& g) {
    if (g.cod.indices != f.dom.indices) throw invalid_input("pointed maps are not composable");
    PointedIndexMap out{g.dom, f.cod, {}};
    for (int v : g.mapping) out.mapping.push_back(f.apply(v));
    return out;
}

}  // namespace seqcat
