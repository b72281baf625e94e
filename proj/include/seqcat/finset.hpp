#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqcat/errors.hpp"

namespace seqcat {

// Finite sets are represented by their size; element k is the k-th element in
// canonical (construction) order. Labels are optional and used for display.
struct FinSetObj {
    int size = 0;
    std::vector<std::string> labels;
};

struct Function {
    int dom = 0;
    int cod = 0;
    std::vector<int> map;

    int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
    bool operator==(const Function& o) const = default;
};

struct DiagramEdge {
    int src = 0;
    int dst = 0;
    std::vector<int> map;
};

struct FinDiagram {
    std::vector<int> sizes;
    std::vector<DiagramEdge> edges;

    int add_node(int size);
    void add_edge(int src, int dst, std::vector<int> map);
    // Checks every edge function is total into its target.
    void validate() const;
};

struct LimitResult {
    // Tuples in lexicographic order, one component per node.
    std::vector<std::vector<int>> tuples;

    int size() const { return static_cast<int>(tuples.size()); }
    Function projection(int node, int node_size) const;
    // Index of a tuple, or -1.
    int find(const std::vector<int>& tuple) const;
};

struct ColimitResult {
    int classes = 0;
    // injections[node][element] = class id; classes are ordered by least member
    // in disjoint-union order.
    std::vector<std::vector<int>> injections;
    // Least member of each class as (node, element).
    std::vector<std::pair<int, int>> representatives;
};

struct SetCone {
    int apex = 0;
    FinDiagram diagram;
    std::vector<Function> legs;
};

enum class Classification { bijective, surjective_only, injective_only, neither };

LimitResult limit(const FinDiagram& d, std::size_t cap = default_cap);
// Reference implementation: filters the full product. Used as a test oracle.
LimitResult limit_by_product(const FinDiagram& d, std::size_t cap = default_cap);
ColimitResult colimit(const FinDiagram& d);

// Throws invalid_input when the cone condition fails.
void check_cone(const SetCone& c);
Function limit_adjoint(const SetCone& c, const LimitResult& lim);
Function limit_adjoint(const SetCone& c, std::size_t cap = default_cap);

Classification classify(const Function& f);
bool is_injective(Classification c);
bool is_surjective(Classification c);
std::string to_string(Classification c);

Function compose(const Function& g, const Function& f);
Function identity_function(int n);

}  // namespace seqcat
