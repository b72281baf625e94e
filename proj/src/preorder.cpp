#include "seqcat/preorder.hpp"

#include <algorithm>
#include <set>

#include "seqcat/errors.hpp"

namespace seqcat {

namespace {

std::string compact(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ',' && c != ' ') out.push_back(c);
    return out;
}

}  // namespace

Preorder::Preorder(std::vector<std::string> labels, std::vector<std::vector<bool>> relation)
    : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
        throw invalid_input("preorder labels must be distinct");
    if (relation.size() != n) throw invalid_input("preorder relation must be square");
    rel_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (relation[i].size() != n) throw invalid_input("preorder relation must be square");
        for (std::size_t j = 0; j < n; ++j) rel_[i * n + j] = relation[i][j];
        rel_[i * n + i] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel_[k * n + j]) rel_[i * n + j] = true;
}

int Preorder::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it != labels_.end()) return static_cast<int>(it - labels_.begin());
    const std::string c = compact(label);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (compact(labels_[i]) == c) return static_cast<int>(i);
    throw invalid_input("unknown preorder element: " + label);
}

bool Preorder::contains(const std::string& label) const {
    try {
        index_of(label);
        return true;
    } catch (const invalid_input&) {
        return false;
    }
}

int Preorder::from_components(const std::vector<int>& comps) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i] == comps) return static_cast<int>(i);
    throw invalid_input("no product element with the given components");
}

std::vector<std::vector<bool>> Preorder::relation_table() const {
    const int n = size();
    std::vector<std::vector<bool>> t(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = leq(i, j);
    return t;
}

bool same_preorder(const PreorderPtr& a, const PreorderPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

MonotoneMap::MonotoneMap(PreorderPtr dom, PreorderPtr cod, std::vector<int> mapping)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(mapping)) {
    if (!dom_ || !cod_) throw invalid_input("monotone map needs a domain and codomain");
    if (static_cast<int>(map_.size()) != dom_->size()) throw invalid_input("monotone map is not total");
    for (int v : map_)
        if (v < 0 || v >= cod_->size()) throw invalid_input("monotone map value outside codomain");
}

PreorderPtr make_preorder(std::vector<std::string> labels, std::vector<std::vector<bool>> relation) {
    return std::make_shared<const Preorder>(std::move(labels), std::move(relation));
}

PreorderPtr boolean_preorder() { return chain_preorder(2); }

PreorderPtr chain_preorder(int k) {
    if (k <= 0) throw invalid_input("chain needs at least one element");
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = i; j < k; ++j) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
    return make_preorder(std::move(labels), std::move(rel));
}

std::pair<PreorderPtr, std::vector<MonotoneMap>> product(const std::vector<PreorderPtr>& factors) {
    if (factors.empty()) throw invalid_input("product of an empty factor list");
    std::vector<std::vector<int>> tuples{{}};
    for (const auto& f : factors) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
            for (int x = 0; x < f->size(); ++x) {
                auto u = t;
                u.push_back(x);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }
    std::vector<std::string> labels;
    for (const auto& t : tuples) {
        std::string s = "[";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += factors[i]->label(t[i]);
        }
        labels.push_back(s + "]");
    }
    const std::size_t n = tuples.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool ok = true;
            for (std::size_t i = 0; i < factors.size() && ok; ++i) ok = factors[i]->leq(tuples[a][i], tuples[b][i]);
            rel[a][b] = ok;
        }
    auto p = std::make_shared<Preorder>(std::move(labels), std::move(rel));
    p->factors_ = factors;
    p->comps_ = tuples;
    PreorderPtr pc = p;
    std::vector<MonotoneMap> projections;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<int> m;
        for (const auto& t : tuples) m.push_back(t[i]);
        projections.emplace_back(pc, factors[i], std::move(m));
    }
    return {pc, std::move(projections)};
}

std::pair<PreorderPtr, std::vector<MonotoneMap>> power(const PreorderPtr& factor, int arity) {
    return product(std::vector<PreorderPtr>(static_cast<std::size_t>(arity), factor));
}

std::vector<MonotoneViolation> validate_monotone(const MonotoneMap& m) {
    std::vector<MonotoneViolation> out;
    const auto& d = *m.dom();
    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y)
            if (d.leq(x, y) && !m.cod()->leq(m(x), m(y))) out.push_back({x, y});
    return out;
}

MonotoneMap identity_map(const PreorderPtr& p) {
    std::vector<int> m(static_cast<std::size_t>(p->size()));
    for (int i = 0; i < p->size(); ++i) m[static_cast<std::size_t>(i)] = i;
    return MonotoneMap(p, p, std::move(m));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (!same_preorder(f.cod(), g.dom())) throw invalid_input("monotone maps are not composable");
    std::vector<int> m;
    for (int v : f.mapping()) m.push_back(g(v));
    return MonotoneMap(f.dom(), g.cod(), std::move(m));
}

}  // namespace seqcat
