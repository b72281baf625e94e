#include "seqcat/finset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace seqcat {

int FinDiagram::add_node(int size) {
    sizes.push_back(size);
    return static_cast<int>(sizes.size()) - 1;
}

void FinDiagram::add_edge(int src, int dst, std::vector<int> map) {
    edges.push_back({src, dst, std::move(map)});
}

void FinDiagram::validate() const {
    const int n = static_cast<int>(sizes.size());
    for (const auto& e : edges) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) throw invalid_input("edge endpoint out of range");
        if (static_cast<int>(e.map.size()) != sizes[static_cast<std::size_t>(e.src)])
            throw invalid_input("edge function is not total");
        for (int v : e.map)
            if (v < 0 || v >= sizes[static_cast<std::size_t>(e.dst)]) throw invalid_input("edge function leaves its target");
    }
}

Function LimitResult::projection(int node, int node_size) const {
    Function f{size(), node_size, {}};
    for (const auto& t : tuples) f.map.push_back(t[static_cast<std::size_t>(node)]);
    return f;
}

int LimitResult::find(const std::vector<int>& tuple) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
    if (it == tuples.end() || *it != tuple) return -1;
    return static_cast<int>(it - tuples.begin());
}

namespace {

bool satisfies(const FinDiagram& d, const std::vector<int>& t) {
    for (const auto& e : d.edges)
        if (e.map[static_cast<std::size_t>(t[static_cast<std::size_t>(e.src)])] != t[static_cast<std::size_t>(e.dst)])
            return false;
    return true;
}

// Product of sizes, saturating at cap + 1.
std::size_t bounded_product(const std::vector<int>& sizes, std::size_t cap) {
    std::size_t p = 1;
    for (int s : sizes) {
        if (s == 0) return 0;
        if (p > (cap + 1) / static_cast<std::size_t>(s)) return cap + 1;
        p *= static_cast<std::size_t>(s);
    }
    return p;
}

LimitResult backtrack(const FinDiagram& d, std::size_t cap) {
    const int n = static_cast<int>(d.sizes.size());
    // Edges become checkable once both endpoints are assigned.
    std::vector<std::vector<const DiagramEdge*>> ready(static_cast<std::size_t>(n));
    for (const auto& e : d.edges) ready[static_cast<std::size_t>(std::max(e.src, e.dst))].push_back(&e);
    LimitResult out;
    std::vector<int> t(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (out.tuples.size() >= cap) throw resource_error("limit has more elements than the cap");
            out.tuples.push_back(t);
            return;
        }
        for (int x = 0; x < d.sizes[static_cast<std::size_t>(k)]; ++x) {
            t[static_cast<std::size_t>(k)] = x;
            bool ok = true;
            for (const auto* e : ready[static_cast<std::size_t>(k)])
                if (e->map[static_cast<std::size_t>(t[static_cast<std::size_t>(e->src)])] != t[static_cast<std::size_t>(e->dst)]) {
                    ok = false;
                    break;
                }
            if (ok) self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

LimitResult limit_by_product(const FinDiagram& d, std::size_t cap) {
    d.validate();
    const std::size_t total = bounded_product(d.sizes, cap);
    if (total > cap) throw resource_error("product of node sizes exceeds the cap");
    LimitResult out;
    const std::size_t n = d.sizes.size();
    std::vector<int> t(n, 0);
    for (std::size_t k = 0; k < total; ++k) {
        if (satisfies(d, t)) out.tuples.push_back(t);
        for (std::size_t i = n; i-- > 0;) {
            if (++t[i] < d.sizes[i]) break;
            t[i] = 0;
        }
    }
    return out;
}

LimitResult limit(const FinDiagram& d, std::size_t cap) {
    d.validate();
    LimitResult out = bounded_product(d.sizes, cap) <= cap ? limit_by_product(d, cap) : backtrack(d, cap);
    for (const auto& t : out.tuples)
        if (!satisfies(d, t)) throw std::logic_error("limit tuple violates an edge equation");
    return out;
}

ColimitResult colimit(const FinDiagram& d) {
    d.validate();
    const std::size_t n = d.sizes.size();
    std::vector<int> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + d.sizes[i];
    std::vector<int> parent(static_cast<std::size_t>(offset[n]));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& e : d.edges)
        for (int x = 0; x < d.sizes[static_cast<std::size_t>(e.src)]; ++x) {
            int a = find(offset[static_cast<std::size_t>(e.src)] + x);
            int b = find(offset[static_cast<std::size_t>(e.dst)] + e.map[static_cast<std::size_t>(x)]);
            // Keep the least member as root.
            if (a < b) parent[static_cast<std::size_t>(b)] = a;
            else if (b < a) parent[static_cast<std::size_t>(a)] = b;
        }
    ColimitResult out;
    std::map<int, int> class_of_root;
    out.injections.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (int x = 0; x < d.sizes[i]; ++x) {
            const int r = find(offset[i] + x);
            auto [it, fresh] = class_of_root.emplace(r, out.classes);
            if (fresh) {
                ++out.classes;
                out.representatives.emplace_back(static_cast<int>(i), x);
            }
            out.injections[i].push_back(it->second);
        }
    return out;
}

void check_cone(const SetCone& c) {
    c.diagram.validate();
    if (c.legs.size() != c.diagram.sizes.size()) throw invalid_input("cone needs one leg per node");
    for (std::size_t i = 0; i < c.legs.size(); ++i) {
        const auto& l = c.legs[i];
        if (l.dom != c.apex || l.cod != c.diagram.sizes[i] || static_cast<int>(l.map.size()) != c.apex)
            throw invalid_input("cone leg has the wrong shape");
    }
    for (const auto& e : c.diagram.edges)
        for (int x = 0; x < c.apex; ++x)
            if (e.map[static_cast<std::size_t>(c.legs[static_cast<std::size_t>(e.src)](x))] !=
                c.legs[static_cast<std::size_t>(e.dst)](x))
                throw invalid_input("cone condition fails");
}

Function limit_adjoint(const SetCone& c, const LimitResult& lim) {
    check_cone(c);
    Function f{c.apex, lim.size(), {}};
    std::vector<int> t(c.legs.size());
    for (int x = 0; x < c.apex; ++x) {
        for (std::size_t i = 0; i < c.legs.size(); ++i) t[i] = c.legs[i](x);
        const int k = lim.find(t);
        if (k < 0) throw std::logic_error("cone tuple missing from the limit");
        f.map.push_back(k);
    }
    return f;
}

Function limit_adjoint(const SetCone& c, std::size_t cap) { return limit_adjoint(c, limit(c.diagram, cap)); }

Classification classify(const Function& f) {
    std::vector<int> hits(static_cast<std::size_t>(f.cod), 0);
    for (int v : f.map) ++hits[static_cast<std::size_t>(v)];
    const bool inj = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
    const bool surj = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
    if (inj && surj) return Classification::bijective;
    if (surj) return Classification::surjective_only;
    if (inj) return Classification::injective_only;
    return Classification::neither;
}

bool is_injective(Classification c) { return c == Classification::bijective || c == Classification::injective_only; }
bool is_surjective(Classification c) { return c == Classification::bijective || c == Classification::surjective_only; }

std::string to_string(Classification c) {
    switch (c) {
        case Classification::bijective: return "bijective";
        case Classification::surjective_only: return "surjective_only";
        case Classification::injective_only: return "injective_only";
        case Classification::neither: return "neither";
    }
    return "neither";
}

Function compose(const Function& g, const Function& f) {
    if (f.cod != g.dom) throw invalid_input("functions are not composable");
    Function h{f.dom, g.cod, {}};
    for (int v : f.map) h.map.push_back(g(v));
    return h;
}

Function identity_function(int n) {
    Function f{n, n, std::vector<int>(static_cast<std::size_t>(n))};
    std::iota(f.map.begin(), f.map.end(), 0);
    return f;
}

}  // namespace seqcat
