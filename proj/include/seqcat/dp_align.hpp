#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seqcat/errors.hpp"

namespace seqcat {

enum class AlignMode { global, local, semiglobal };

AlignMode parse_align_mode(const std::string& s);
std::string to_string(AlignMode m);

// Rows follow the second sequence, columns the first; both with a leading ε.
struct ScoreTable {
    std::string s1;
    std::string s2;
    AlignMode mode = AlignMode::global;
    std::vector<std::vector<int>> cells;

    int corner() const { return cells.back().back(); }
};

// Rows use gap_char ('e') for ε.
struct PairwiseAlignment {
    std::string top;
    std::string bottom;
    int length() const { return static_cast<int>(top.size()); }

    bool operator==(const PairwiseAlignment& o) const = default;
    bool operator<(const PairwiseAlignment& o) const;
};

// Semi-global zeroes the first row only unless zero_first_column is set.
ScoreTable build_table(const std::string& s1, const std::string& s2, AlignMode mode = AlignMode::global,
                       bool zero_first_column = false);

// match_diagonal: a match cell only allows the diagonal move.
// all_optimal: every move consistent with the cell value, so equal letters may slide past a gap.
enum class TracebackRule { match_diagonal, all_optimal };

// Optimal tracebacks, deduplicated and sorted by (length, top, bottom).
std::vector<PairwiseAlignment> traceback_all(const ScoreTable& t, std::size_t cap = default_cap,
                                             TracebackRule rule = TracebackRule::match_diagonal);

struct PairAlignments {
    std::string first;
    std::string second;
    std::vector<PairwiseAlignment> alignments;

    // Alignments keyed by padded length.
    std::map<int, std::vector<PairwiseAlignment>> by_length() const;
};

using NamedSequences = std::vector<std::pair<std::string, std::string>>;

// Every unordered pair in input order (i < j).
std::vector<PairAlignments> align_all_pairs(const NamedSequences& individuals, AlignMode mode = AlignMode::global,
                                           TracebackRule rule = TracebackRule::match_diagonal);

// Unit-cost edit distance by plain recursion with memoization, used as an oracle.
int levenshtein(const std::string& a, const std::string& b);

}  // namespace seqcat
