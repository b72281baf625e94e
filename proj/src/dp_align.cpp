#include "seqcat/dp_align.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "seqcat/environment.hpp"

namespace seqcat {

AlignMode parse_align_mode(const std::string& s) {
    if (s == "global") return AlignMode::global;
    if (s == "local") return AlignMode::local;
    if (s == "semiglobal") return AlignMode::semiglobal;
    throw invalid_input("unknown alignment mode: " + s);
}

std::string to_string(AlignMode m) {
    switch (m) {
        case AlignMode::global: return "global";
        case AlignMode::local: return "local";
        case AlignMode::semiglobal: return "semiglobal";
    }
    return "global";
}

bool PairwiseAlignment::operator<(const PairwiseAlignment& o) const {
    if (top.size() != o.top.size()) return top.size() < o.top.size();
    if (top != o.top) return top < o.top;
    return bottom < o.bottom;
}

namespace {

void check_sequence(const std::string& s) {
    for (char c : s) {
        if (c == gap_char || static_cast<unsigned char>(c) >= 0x80)
            throw invalid_input("epsilon present in input sequence: " + s);
    }
}

struct Borders {
    int row_step;
    int col_step;
};

Borders borders(const ScoreTable& t, bool zero_first_column) {
    switch (t.mode) {
        case AlignMode::global: return {1, 1};
        case AlignMode::local: return {0, 0};
        case AlignMode::semiglobal: return {0, zero_first_column ? 0 : 1};
    }
    return {1, 1};
}

}  // namespace

ScoreTable build_table(const std::string& s1, const std::string& s2, AlignMode mode, bool zero_first_column) {
    check_sequence(s1);
    check_sequence(s2);
    ScoreTable t{s1, s2, mode, {}};
    const auto [row_step, col_step] = borders(t, zero_first_column);
    const std::size_t R = s2.size(), C = s1.size();
    t.cells.assign(R + 1, std::vector<int>(C + 1, 0));
    for (std::size_t c = 1; c <= C; ++c) t.cells[0][c] = t.cells[0][c - 1] + row_step;
    for (std::size_t r = 1; r <= R; ++r) t.cells[r][0] = t.cells[r - 1][0] + col_step;
    for (std::size_t r = 1; r <= R; ++r)
        for (std::size_t c = 1; c <= C; ++c) {
            const int p = t.cells[r - 1][c - 1], q = t.cells[r - 1][c], l = t.cells[r][c - 1];
            t.cells[r][c] = s1[c - 1] == s2[r - 1] ? p : std::min({p, q, l}) + 1;
        }
    return t;
}

std::vector<PairwiseAlignment> traceback_all(const ScoreTable& t, std::size_t cap, TracebackRule rule) {
    const std::size_t R = t.s2.size(), C = t.s1.size();
    std::set<PairwiseAlignment> found;
    std::string top, bottom;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == 0 && c == 0) {
            PairwiseAlignment a{std::string(top.rbegin(), top.rend()), std::string(bottom.rbegin(), bottom.rend())};
            found.insert(std::move(a));
            if (found.size() > cap) throw resource_error("traceback produced more alignments than the cap");
            return;
        }
        const int v = t.cells[r][c];
        auto step = [&](char tc, char bc, std::size_t nr, std::size_t nc) {
            top.push_back(tc);
            bottom.push_back(bc);
            rec(nr, nc);
            top.pop_back();
            bottom.pop_back();
        };
        if (r > 0 && c > 0) {
            const char a = t.s1[c - 1], b = t.s2[r - 1];
            const int p = t.cells[r - 1][c - 1], q = t.cells[r - 1][c], l = t.cells[r][c - 1];
            if (a == b && rule == TracebackRule::match_diagonal) {
                step(a, b, r - 1, c - 1);
                return;
            }
            if (v == p + (a == b ? 0 : 1)) step(a, b, r - 1, c - 1);
            if (v == q + 1) step(gap_char, b, r - 1, c);
            if (v == l + 1) step(a, gap_char, r, c - 1);
            return;
        }
        if (r == 0) step(t.s1[c - 1], gap_char, 0, c - 1);
        else step(gap_char, t.s2[r - 1], r - 1, 0);
    };
    rec(R, C);
    return {found.begin(), found.end()};
}

std::map<int, std::vector<PairwiseAlignment>> PairAlignments::by_length() const {
    std::map<int, std::vector<PairwiseAlignment>> out;
    for (const auto& a : alignments) out[a.length()].push_back(a);
    return out;
}

std::vector<PairAlignments> align_all_pairs(const NamedSequences& individuals, AlignMode mode, TracebackRule rule) {
    if (individuals.size() < 2) return {};
    std::vector<PairAlignments> out;
    for (std::size_t i = 0; i < individuals.size(); ++i)
        for (std::size_t j = i + 1; j < individuals.size(); ++j)
            out.push_back({individuals[i].first, individuals[j].first,
                           traceback_all(build_table(individuals[i].second, individuals[j].second, mode), default_cap, rule)});
    return out;
}

int levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::vector<int>> memo(a.size() + 1, std::vector<int>(b.size() + 1, -1));
    std::function<int(std::size_t, std::size_t)> d = [&](std::size_t i, std::size_t j) -> int {
        if (i == 0) return static_cast<int>(j);
        if (j == 0) return static_cast<int>(i);
        int& m = memo[i][j];
        if (m >= 0) return m;
        const int sub = d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
        m = std::min({sub, d(i - 1, j) + 1, d(i, j - 1) + 1});
        return m;
    };
    return d(a.size(), b.size());
}

}  // namespace seqcat
