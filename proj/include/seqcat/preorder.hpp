#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace seqcat {

class Preorder;
class MonotoneMap;
using PreorderPtr = std::shared_ptr<const Preorder>;

// Finite pre-ordered set. Elements are indices 0..size()-1 with opaque labels.
// The relation is stored transitively closed.
class Preorder {
public:
    Preorder(std::vector<std::string> labels, std::vector<std::vector<bool>> relation);

    int size() const { return static_cast<int>(labels_.size()); }
    bool leq(int x, int y) const { return rel_[static_cast<std::size_t>(x * size() + y)]; }
    const std::string& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Accepts the exact label, or a compact form of a tuple label with the
    // separators removed ("[1100]" for "[1,1,0,0]").
    int index_of(const std::string& label) const;
    bool contains(const std::string& label) const;

    // Product structure, present when built by product().
    const std::vector<PreorderPtr>& factors() const { return factors_; }
    const std::vector<int>& components(int x) const { return comps_.at(static_cast<std::size_t>(x)); }
    int from_components(const std::vector<int>& comps) const;

    std::vector<std::vector<bool>> relation_table() const;

    bool operator==(const Preorder& o) const { return labels_ == o.labels_ && rel_ == o.rel_; }

private:
    friend std::pair<PreorderPtr, std::vector<MonotoneMap>> product(const std::vector<PreorderPtr>& factors);

    std::vector<std::string> labels_;
    std::vector<bool> rel_;
    std::vector<PreorderPtr> factors_;
    std::vector<std::vector<int>> comps_;
};

// Compare by identity first, then structurally.
bool same_preorder(const PreorderPtr& a, const PreorderPtr& b);

class MonotoneMap {
public:
    MonotoneMap(PreorderPtr dom, PreorderPtr cod, std::vector<int> mapping);

    const PreorderPtr& dom() const { return dom_; }
    const PreorderPtr& cod() const { return cod_; }
    const std::vector<int>& mapping() const { return map_; }
    int operator()(int x) const { return map_.at(static_cast<std::size_t>(x)); }

private:
    PreorderPtr dom_;
    PreorderPtr cod_;
    std::vector<int> map_;
};

struct MonotoneViolation {
    int x;
    int y;
};

PreorderPtr make_preorder(std::vector<std::string> labels, std::vector<std::vector<bool>> relation);
PreorderPtr boolean_preorder();
PreorderPtr chain_preorder(int k);

std::pair<PreorderPtr, std::vector<MonotoneMap>> product(const std::vector<PreorderPtr>& factors);
std::pair<PreorderPtr, std::vector<MonotoneMap>> power(const PreorderPtr& factor, int arity);

// Pairs x⪯y in dom whose images are not related. Empty means monotone.
std::vector<MonotoneViolation> validate_monotone(const MonotoneMap& m);

MonotoneMap identity_map(const PreorderPtr& p);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

}  // namespace seqcat
