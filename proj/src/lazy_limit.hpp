#pragma once

// Limits over diagrams where some nodes stand for sets too large to list.
// A lazy node is materialized from the images of its inbound edges out of
// determined nodes, which is exact: its limit component must equal such an image.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "seqcat/finset.hpp"

namespace seqcat::detail {

template <class V>
struct LazyDiagram {
    struct Node {
        bool lazy = false;
        std::vector<V> values;
        // Membership test for lazy nodes; null accepts everything.
        std::function<bool(const V&)> member;
        std::string name;
    };
    struct Edge {
        int src = 0;
        int dst = 0;
        std::function<V(const V&)> map;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
};

template <class V>
struct ResolvedDiagram {
    std::vector<std::vector<V>> values;
    std::vector<bool> dropped;
    // Index-level diagram over all nodes; dropped nodes have size 0 and no edges.
    FinDiagram diagram;
    std::vector<std::string> warnings;

    int index_of(int node, const V& v) const {
        const auto& vals = values[static_cast<std::size_t>(node)];
        for (std::size_t k = 0; k < vals.size(); ++k)
            if (vals[k] == v) return static_cast<int>(k);
        return -1;
    }
};

template <class V>
ResolvedDiagram<V> resolve(const LazyDiagram<V>& d) {
    const std::size_t n = d.nodes.size();
    ResolvedDiagram<V> r;
    r.values.resize(n);
    std::vector<bool> known(n, false);
    for (std::size_t v = 0; v < n; ++v)
        if (!d.nodes[v].lazy) {
            r.values[v] = d.nodes[v].values;
            known[v] = true;
        }
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (known[v]) continue;
            std::vector<V> vals;
            bool fed = false;
            for (const auto& e : d.edges) {
                if (e.dst != static_cast<int>(v) || !known[static_cast<std::size_t>(e.src)]) continue;
                fed = true;
                for (const auto& x : r.values[static_cast<std::size_t>(e.src)]) {
                    V y = e.map(x);
                    if (d.nodes[v].member && !d.nodes[v].member(y)) continue;
                    vals.push_back(std::move(y));
                }
            }
            if (!fed) continue;
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            r.values[v] = std::move(vals);
            known[v] = true;
            grew = true;
        }
    }
    r.dropped.assign(n, false);
    for (std::size_t v = 0; v < n; ++v)
        if (!known[v]) {
            r.dropped[v] = true;
            r.warnings.push_back("node " + d.nodes[v].name + " has no determined inbound edge; dropped as a free factor");
        }
    std::vector<const typename LazyDiagram<V>::Edge*> active;
    for (const auto& e : d.edges) {
        const bool ds = r.dropped[static_cast<std::size_t>(e.src)], dd = r.dropped[static_cast<std::size_t>(e.dst)];
        if (ds && !dd) r.warnings.push_back("edge out of dropped node " + d.nodes[static_cast<std::size_t>(e.src)].name + " ignored");
        if (!ds && !dd) active.push_back(&e);
    }
    // Arc consistency: drop source values whose image is missing in the target.
    std::vector<std::vector<int>> maps(active.size());
    for (bool pruned = true; pruned;) {
        pruned = false;
        std::vector<std::map<V, int>> index(n);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t k = 0; k < r.values[v].size(); ++k) index[v].emplace(r.values[v][k], static_cast<int>(k));
        std::vector<std::vector<bool>> keep(n);
        for (std::size_t v = 0; v < n; ++v) keep[v].assign(r.values[v].size(), true);
        for (std::size_t k = 0; k < active.size(); ++k) {
            const auto& e = *active[k];
            auto& m = maps[k];
            m.clear();
            const auto& src = r.values[static_cast<std::size_t>(e.src)];
            const auto& idx = index[static_cast<std::size_t>(e.dst)];
            for (std::size_t x = 0; x < src.size(); ++x) {
                auto it = idx.find(e.map(src[x]));
                m.push_back(it == idx.end() ? -1 : it->second);
                if (it == idx.end()) keep[static_cast<std::size_t>(e.src)][x] = false;
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (std::all_of(keep[v].begin(), keep[v].end(), [](bool b) { return b; })) continue;
            std::vector<V> kept;
            for (std::size_t x = 0; x < r.values[v].size(); ++x)
                if (keep[v][x]) kept.push_back(std::move(r.values[v][x]));
            r.values[v] = std::move(kept);
            pruned = true;
        }
    }
    for (std::size_t v = 0; v < n; ++v) r.diagram.add_node(static_cast<int>(r.values[v].size()));
    for (std::size_t k = 0; k < active.size(); ++k) r.diagram.add_edge(active[k]->src, active[k]->dst, maps[k]);
    return r;
}

// Connected components of the non-dropped nodes along the diagram's edges.
inline std::vector<std::vector<int>> components(const FinDiagram& d, const std::vector<bool>& dropped) {
    const std::size_t n = d.sizes.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    for (const auto& e : d.edges) {
        const int a = find(e.src), b = find(e.dst);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (std::size_t v = 0; v < n; ++v)
        if (!dropped[v]) groups[find(static_cast<int>(v))].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> out;
    for (auto& [root, nodes] : groups) out.push_back(std::move(nodes));
    return out;
}

// Restriction of a diagram to a node subset, renumbered in subset order.
inline FinDiagram subdiagram(const FinDiagram& d, const std::vector<int>& nodes) {
    std::map<int, int> pos;
    FinDiagram s;
    for (int v : nodes) {
        pos[v] = s.add_node(d.sizes[static_cast<std::size_t>(v)]);
    }
    for (const auto& e : d.edges) {
        auto a = pos.find(e.src), b = pos.find(e.dst);
        if (a != pos.end() && b != pos.end()) s.add_edge(a->second, b->second, e.map);
    }
    return s;
}

}  // namespace seqcat::detail
