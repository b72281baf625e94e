#include "seqcat/chromology.hpp"

#include <limits>

namespace seqcat {

void check_seg_cone(const SegCone& c) {
    if (c.legs.size() != c.nodes.size()) throw invalid_input("cone needs one leg per node");
    for (std::size_t k = 0; k < c.nodes.size(); ++k) {
        const auto& l = c.legs[k];
        if (!(l.src == c.apex) || !(l.dst == c.nodes[k])) throw invalid_input("cone leg endpoints do not match");
        if (!validate_morphism(l).empty()) throw invalid_input("cone leg is not a segment morphism");
    }
    const int n = static_cast<int>(c.nodes.size());
    for (const auto& e : c.edges) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) throw invalid_input("cone edge endpoint out of range");
        if (!(e.m.src == c.nodes[static_cast<std::size_t>(e.src)]) || !(e.m.dst == c.nodes[static_cast<std::size_t>(e.dst)]))
            throw invalid_input("cone edge endpoints do not match");
        if (!validate_morphism(e.m).empty()) throw invalid_input("cone edge is not a segment morphism");
        if (!(compose(e.m, c.legs[static_cast<std::size_t>(e.src)]) == c.legs[static_cast<std::size_t>(e.dst)]))
            throw invalid_input("cone condition fails");
    }
}

namespace {

bool is_identity_f1(const SegmentMorphism& m) {
    for (std::size_t i = 0; i < m.f1.size(); ++i)
        if (m.f1[i] != static_cast<int>(i)) return false;
    return m.src.n1() == m.dst.n1();
}

}  // namespace

bool is_chromology_cone(const SegCone& c) {
    for (const auto& l : c.legs)
        if (!is_identity_f1(l)) return false;
    for (const auto& e : c.edges)
        if (!is_identity_f1(e.m)) return false;
    return true;
}

SegCone make_chromology_cone(const Segment& apex, const std::vector<Segment>& nodes,
                             const std::vector<std::pair<int, int>>& edges) {
    SegCone c{apex, nodes, {}, {}};
    for (const auto& s : nodes) {
        auto m = quasi_homologous_morphism(apex, s);
        if (!m) throw invalid_input("no quasi-homologous morphism from the apex to " + to_string(s));
        c.legs.push_back(std::move(*m));
    }
    for (auto [u, v] : edges) {
        auto m = quasi_homologous_morphism(nodes.at(static_cast<std::size_t>(u)), nodes.at(static_cast<std::size_t>(v)));
        if (!m) throw invalid_input("no quasi-homologous morphism between cone nodes");
        c.edges.push_back({u, v, std::move(*m)});
    }
    check_seg_cone(c);
    return c;
}

CanonicalArrow canonical_arrow(const SegCone& c, int b) {
    check_seg_cone(c);
    if (!is_chromology_cone(c)) throw invalid_input("canonical arrow needs legs and edges with f1 = identity");
    CanonicalArrow a;
    a.apex_tr = truncate(c.apex, b);
    for (const auto& s : c.nodes) {
        a.node_tr.push_back(truncate(s, b));
        a.diagram.add_node(a.node_tr.back().size());
    }
    for (const auto& e : c.edges) {
        const auto& from = a.node_tr[static_cast<std::size_t>(e.dst)];
        const auto& into = a.node_tr[static_cast<std::size_t>(e.src)];
        std::vector<int> map;
        for (int pos : from.indices) map.push_back(into.rank(pos));
        a.diagram.add_edge(e.dst, e.src, std::move(map));
    }
    a.colim = colimit(a.diagram);
    a.arrow = {a.colim.classes, a.apex_tr.size(), {}};
    for (auto [node, elem] : a.colim.representatives) {
        const int pos = a.node_tr[static_cast<std::size_t>(node)].indices[static_cast<std::size_t>(elem)];
        const int r = a.apex_tr.rank(pos);
        if (r < 0) throw std::logic_error("truncated node position missing from the apex truncation");
        a.arrow.map.push_back(r);
    }
    return a;
}

bool is_exactly_distributive(const SegCone& c, int b) {
    return classify(canonical_arrow(c, b).arrow) == Classification::bijective;
}

bool is_injective(const SegCone& c, int b) { return is_injective(classify(canonical_arrow(c, b).arrow)); }

std::string cone_kind(const SegCone& c, int b) {
    const auto k = classify(canonical_arrow(c, b).arrow);
    if (k == Classification::bijective) return "exactly-distributive";
    if (is_injective(k)) return "injective";
    return "neither";
}

void Chromology::add(const SegCone& c) {
    check_seg_cone(c);
    if (!is_chromology_cone(c)) throw invalid_input("chromology cones must live in Seg(Ω|n)");
    if (!same_preorder(c.apex.omega(), omega)) throw invalid_input("cone over a different preorder");
    cones_by_domain[c.apex.n1()].push_back(c);
}

EnvironmentFunctor::EnvironmentFunctor(PointedAlphabet alphabet, int level, std::size_t cap)
    : alphabet_(std::move(alphabet)), level_(level), cap_(cap) {}

bool EnvironmentFunctor::materializable(const Segment& s) const {
    return WordEnumerator(s, level_, alphabet_).count() <= std::min<std::size_t>(cap_, std::numeric_limits<int>::max());
}

int EnvironmentFunctor::object_size(const Segment& s) const {
    if (!materializable(s)) throw resource_error("environment image exceeds the cap");
    return static_cast<int>(WordEnumerator(s, level_, alphabet_).count());
}

Function EnvironmentFunctor::arrow(const SegmentMorphism& m) const {
    const int dom = object_size(m.src);
    const int cod = object_size(m.dst);
    const auto p = truncate_morphism(m, level_);
    Function f{dom, cod, {}};
    f.map.reserve(static_cast<std::size_t>(dom));
    WordEnumerator e(m.src, level_, alphabet_);
    while (auto w = e.next()) {
        const Word img = word_image(p, m.dst, *w, alphabet_.basepoint);
        int idx = 0;
        for (int l : img.letters) idx = idx * alphabet_.size() + l;
        f.map.push_back(idx);
    }
    return f;
}

void TableFunctor::set_object(const Segment& s, int size) {
    for (auto& [seg, n] : objects_)
        if (seg == s) {
            n = size;
            return;
        }
    objects_.emplace_back(s, size);
}

void TableFunctor::set_arrow(const SegmentMorphism& m, Function f) {
    for (auto& [mm, g] : arrows_)
        if (mm == m) {
            g = std::move(f);
            return;
        }
    arrows_.emplace_back(m, std::move(f));
}

int TableFunctor::object_size(const Segment& s) const {
    for (const auto& [seg, n] : objects_)
        if (seg == s) return n;
    throw invalid_input("missing image data for segment " + to_literal(s));
}

Function TableFunctor::arrow(const SegmentMorphism& m) const {
    for (const auto& [mm, f] : arrows_)
        if (mm == m) return f;
    throw invalid_input("missing image data for a morphism out of " + to_literal(m.src));
}

PedigradMode parse_pedigrad_mode(const std::string& s) {
    if (s == "bij") return PedigradMode::bij;
    if (s == "surj") return PedigradMode::surj;
    throw invalid_input("unknown pedigrad mode: " + s);
}

SetCone image_cone(const SetFunctor& F, const SegCone& c) {
    SetCone sc;
    sc.apex = F.object_size(c.apex);
    for (const auto& s : c.nodes) sc.diagram.add_node(F.object_size(s));
    for (const auto& e : c.edges) sc.diagram.add_edge(e.src, e.dst, F.arrow(e.m).map);
    for (const auto& l : c.legs) sc.legs.push_back(F.arrow(l));
    return sc;
}

PedigradReport verify_pedigrad(const SetFunctor& F, const Chromology& chrom, PedigradMode mode, std::size_t cap) {
    PedigradReport report;
    const auto* env = dynamic_cast<const EnvironmentFunctor*>(&F);
    for (const auto& [n, cones] : chrom.cones_by_domain)
        for (std::size_t k = 0; k < cones.size(); ++k) {
            const auto& c = cones[k];
            ConeCheck check{n, static_cast<int>(k), Classification::neither, false, false};
            bool small = F.materializable(c.apex);
            for (const auto& s : c.nodes) small = small && F.materializable(s);
            if (small) {
                check.classification = classify(limit_adjoint(image_cone(F, c), cap));
            } else if (env) {
                // Restriction along the canonical arrow swaps injective and surjective.
                const auto k2 = classify(canonical_arrow(c, env->level()).arrow);
                check.structural = true;
                check.classification = k2 == Classification::bijective     ? Classification::bijective
                                       : k2 == Classification::injective_only ? Classification::surjective_only
                                       : k2 == Classification::surjective_only ? Classification::injective_only
                                                                               : Classification::neither;
            } else {
                throw resource_error("functor images exceed the cap");
            }
            check.pass = mode == PedigradMode::bij ? check.classification == Classification::bijective
                                                   : is_surjective(check.classification);
            report.pass = report.pass && check.pass;
            report.cones.push_back(check);
        }
    return report;
}

}  // namespace seqcat
