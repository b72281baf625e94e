#pragma once

// Random and exhaustive generators shared by the property tests and the acceptance run.

#include <algorithm>
#include <random>
#include <vector>

#include "seqcat/chromology.hpp"
#include "seqcat/finset.hpp"
#include "seqcat/segments.hpp"

namespace seqcat::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Every reflexive transitive relation on 1..max_size labeled elements.
inline std::vector<PreorderPtr> all_preorders(int max_size) {
    std::vector<PreorderPtr> out;
    for (int n = 1; n <= max_size; ++n) {
        std::vector<std::pair<int, int>> offdiag;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) offdiag.emplace_back(a, b);
        for (unsigned mask = 0; mask < (1u << offdiag.size()); ++mask) {
            std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
            for (int a = 0; a < n; ++a) rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
            for (std::size_t k = 0; k < offdiag.size(); ++k)
                if (mask & (1u << k)) rel[static_cast<std::size_t>(offdiag[k].first)][static_cast<std::size_t>(offdiag[k].second)] = true;
            bool transitive = true;
            for (int a = 0; a < n && transitive; ++a)
                for (int b = 0; b < n && transitive; ++b)
                    for (int c = 0; c < n && transitive; ++c)
                        if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                            !rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
                            transitive = false;
            if (!transitive) continue;
            std::vector<std::string> labels;
            for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
            out.push_back(make_preorder(labels, rel));
        }
    }
    return out;
}

// One representative per isomorphism class.
inline std::vector<PreorderPtr> preorders_up_to_iso(int max_size) {
    std::vector<PreorderPtr> out;
    std::vector<std::vector<std::vector<bool>>> seen;
    for (const auto& p : all_preorders(max_size)) {
        const int n = p->size();
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
        std::vector<std::vector<bool>> best;
        do {
            std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) r[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] = p->leq(a, b);
            if (best.empty() || r < best) best = r;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::find(seen.begin(), seen.end(), best) == seen.end()) {
            seen.push_back(best);
            out.push_back(p);
        }
    }
    return out;
}

inline PreorderPtr random_preorder(Rng& rng, int max_size) {
    static const auto all = all_preorders(3);
    std::vector<PreorderPtr> fit;
    for (const auto& p : all)
        if (p->size() <= max_size) fit.push_back(p);
    return fit[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fit.size()) - 1))];
}

// Every segment over omega with exactly n1 nodes.
inline std::vector<Segment> all_segments(const PreorderPtr& omega, int n1) {
    std::vector<Segment> out;
    if (n1 == 0) {
        out.emplace_back(omega, std::vector<int>{}, std::vector<int>{});
        return out;
    }
    for (unsigned cuts = 0; cuts < (1u << (n1 - 1)); ++cuts) {
        std::vector<int> topo{0};
        for (int i = 1; i < n1; ++i) topo.push_back(topo.back() + ((cuts >> (i - 1)) & 1u ? 1 : 0));
        const int n0 = topo.back() + 1;
        std::vector<int> colors(static_cast<std::size_t>(n0), 0);
        for (;;) {
            out.emplace_back(omega, topo, colors);
            int k = 0;
            while (k < n0 && ++colors[static_cast<std::size_t>(k)] == omega->size()) colors[static_cast<std::size_t>(k++)] = 0;
            if (k == n0) break;
        }
    }
    return out;
}

inline Segment random_segment(Rng& rng, const PreorderPtr& omega, int n1) {
    std::vector<int> topo;
    int patch = 0;
    for (int i = 0; i < n1; ++i) {
        if (i > 0 && coin(rng)) ++patch;
        topo.push_back(patch);
    }
    std::vector<int> colors;
    for (int p = 0; p <= (n1 ? patch : -1); ++p) colors.push_back(uniform(rng, 0, omega->size() - 1));
    return Segment(omega, topo, colors);
}

// Node reachable from s by a quasi-homologous morphism: merges random adjacent
// patches that share a lower bound and picks colors below every merged patch.
inline Segment random_quotient(Rng& rng, const Segment& s, double merge = 0.4) {
    const auto& om = *s.omega();
    auto lower_bounds = [&](const std::vector<int>& patches) {
        std::vector<int> below;
        for (int c = 0; c < om.size(); ++c)
            if (std::all_of(patches.begin(), patches.end(), [&](int p) { return om.leq(c, s.color(p)); })) below.push_back(c);
        return below;
    };
    std::vector<std::vector<int>> groups;
    for (int p = 0; p < s.n0(); ++p) {
        if (!groups.empty() && coin(rng, merge)) {
            auto grown = groups.back();
            grown.push_back(p);
            if (!lower_bounds(grown).empty()) {
                groups.back() = std::move(grown);
                continue;
            }
        }
        groups.push_back({p});
    }
    std::vector<int> group_of(static_cast<std::size_t>(s.n0())), colors;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int p : groups[g]) group_of[static_cast<std::size_t>(p)] = static_cast<int>(g);
        const auto below = lower_bounds(groups[g]);
        colors.push_back(below[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(below.size()) - 1))]);
    }
    std::vector<int> topo;
    for (int i = 0; i < s.n1(); ++i) topo.push_back(group_of[static_cast<std::size_t>(s.patch(i))]);
    return Segment(s.omega(), topo, colors);
}

// Cone in Seg(Ω|n): quotients of the apex and quotients of those, with every
// available edge kept with probability 0.7.
inline SegCone random_chromology_cone(Rng& rng, const PreorderPtr& omega, int n) {
    const Segment apex = random_segment(rng, omega, n);
    std::vector<Segment> nodes;
    const int first = uniform(rng, 1, 3);
    for (int k = 0; k < first; ++k) nodes.push_back(random_quotient(rng, apex));
    const int second = uniform(rng, 0, 2);
    for (int k = 0; k < second; ++k) nodes.push_back(random_quotient(rng, nodes[static_cast<std::size_t>(uniform(rng, 0, first - 1))]));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < static_cast<int>(nodes.size()); ++u)
        for (int v = 0; v < static_cast<int>(nodes.size()); ++v)
            if (u != v && quasi_homologous_morphism(nodes[static_cast<std::size_t>(u)], nodes[static_cast<std::size_t>(v)]) && coin(rng, 0.7))
                edges.emplace_back(u, v);
    return make_chromology_cone(apex, nodes, edges);
}

// Up to max_nodes nodes of size 0..max_size with random edges (self-loops and parallel edges allowed).
inline FinDiagram random_diagram(Rng& rng, int max_nodes = 4, int max_size = 6) {
    FinDiagram d;
    const int n = uniform(rng, 1, max_nodes);
    for (int v = 0; v < n; ++v) d.add_node(uniform(rng, coin(rng, 0.1) ? 0 : 1, max_size));
    const int m = uniform(rng, 0, n + 1);
    for (int e = 0; e < m; ++e) {
        const int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
        const int sb = d.sizes[static_cast<std::size_t>(b)];
        if (sb == 0 && d.sizes[static_cast<std::size_t>(a)] > 0) continue;
        std::vector<int> map;
        for (int x = 0; x < d.sizes[static_cast<std::size_t>(a)]; ++x) map.push_back(uniform(rng, 0, sb - 1));
        d.add_edge(a, b, map);
    }
    return d;
}

}  // namespace seqcat::gen
