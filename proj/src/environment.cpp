#include "seqcat/environment.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace seqcat {

int PointedAlphabet::index_of(const std::string& label) const {
    auto it = std::find(symbols.begin(), symbols.end(), label);
    if (it == symbols.end()) throw invalid_input("unknown symbol: " + label);
    return static_cast<int>(it - symbols.begin());
}

int PointedAlphabet::from_char(char c) const {
    if (c == gap_char) return basepoint;
    return index_of(std::string(1, c));
}

std::string PointedAlphabet::render(int symbol, bool unicode) const {
    if (symbol == basepoint) return unicode ? "ε" : std::string(1, gap_char);
    return symbols.at(static_cast<std::size_t>(symbol));
}

PointedAlphabet make_alphabet(std::vector<std::string> symbols, const std::string& basepoint) {
    if (std::set<std::string>(symbols.begin(), symbols.end()).size() != symbols.size())
        throw invalid_input("alphabet symbols must be distinct");
    PointedAlphabet a{std::move(symbols), 0};
    a.basepoint = a.index_of(basepoint);
    return a;
}

PointedAlphabet dna_alphabet() { return make_alphabet({"A", "C", "G", "T", "eps"}, "eps"); }

bool Word::operator<(const Word& o) const {
    if (!(segment == o.segment)) return segment < o.segment;
    if (level != o.level) return level < o.level;
    return letters < o.letters;
}

Word word_image(const PointedIndexMap& p, const Segment& dst, const Word& w, int basepoint) {
    Word out{dst, p.dom.level, {}};
    out.letters.reserve(p.mapping.size());
    for (int i : p.mapping)
        out.letters.push_back(i == star ? basepoint : w.letters[static_cast<std::size_t>(p.cod.rank(i))]);
    return out;
}

Word word_image(const SegmentMorphism& m, const Word& w, int b, const PointedAlphabet& a) {
    if (!(w.segment == m.src) || w.level != b) throw invalid_input("word does not live on the morphism's source");
    return word_image(truncate_morphism(m, b), m.dst, w, a.basepoint);
}

Word word_from_row(const PointedAlphabet& a, const Segment& s, int level, const std::string& row) {
    const auto tr = truncate(s, level);
    // Decode "ε" (two bytes in UTF-8) to gap_char first.
    std::string plain;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row.compare(k, 2, "ε") == 0) {
            plain.push_back(gap_char);
            ++k;
        } else {
            plain.push_back(row[k]);
        }
    }
    Word w{s, level, {}};
    if (static_cast<int>(plain.size()) == tr.size()) {
        for (char c : plain) w.letters.push_back(a.from_char(c));
    } else if (static_cast<int>(plain.size()) == s.n1()) {
        for (int i : tr.indices) w.letters.push_back(a.from_char(plain[static_cast<std::size_t>(i)]));
    } else {
        throw invalid_input("row length does not match the segment: " + row);
    }
    return w;
}

std::string render_row(const PointedAlphabet& a, const Word& w, bool unicode) {
    std::string out;
    for (int l : w.letters) out += a.render(l, unicode);
    return out;
}

std::string render_word(const PointedAlphabet& a, const Word& w, bool unicode) {
    const auto tr = truncate(w.segment, w.level);
    std::string out;
    int k = 0;
    for (int p = 0; p < w.segment.n0(); ++p) {
        std::string inner;
        for (int i = 0; i < w.segment.n1(); ++i)
            if (w.segment.patch(i) == p && tr.contains(i)) inner += a.render(w.letters[static_cast<std::size_t>(k++)], unicode);
        if (!inner.empty()) out += "(" + inner + ")";
    }
    return out;
}

WordEnumerator::WordEnumerator(const Segment& s, int b, const PointedAlphabet& a)
    : seg_(s), level_(b), alphabet_size_(a.size()) {
    cur_.assign(static_cast<std::size_t>(truncate(s, b).size()), 0);
    done_ = alphabet_size_ == 0 && !cur_.empty();
}

std::optional<Word> WordEnumerator::next() {
    if (done_) return std::nullopt;
    Word w{seg_, level_, cur_};
    std::size_t i = cur_.size();
    for (;;) {
        if (i == 0) {
            done_ = true;
            break;
        }
        --i;
        if (++cur_[i] < alphabet_size_) break;
        cur_[i] = 0;
    }
    return w;
}

std::size_t WordEnumerator::count() const {
    std::size_t c = 1;
    for (std::size_t k = 0; k < cur_.size(); ++k) {
        if (c > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(std::max(alphabet_size_, 1)))
            return std::numeric_limits<std::size_t>::max();
        c *= static_cast<std::size_t>(alphabet_size_);
    }
    return c;
}

std::vector<Word> enumerate_words(const Segment& s, int b, const PointedAlphabet& a, std::size_t cap) {
    WordEnumerator e(s, b, a);
    if (e.count() > cap) throw resource_error("word set exceeds the cap");
    std::vector<Word> out;
    while (auto w = e.next()) out.push_back(std::move(*w));
    return out;
}

int AlignmentSpec::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw invalid_input("unknown index: " + name);
    return static_cast<int>(it - names.begin());
}

AlignmentSpec make_alignment_spec(std::vector<std::string> names, std::vector<MonotoneMap> maps) {
    if (names.size() != maps.size() || names.empty()) throw invalid_input("one map per index is required");
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        throw invalid_input("index names must be distinct");
    for (const auto& m : maps)
        if (!same_preorder(m.dom(), maps.front().dom())) throw invalid_input("spec maps must share a domain");
    return {std::move(names), std::move(maps)};
}

AlignmentSpec product_spec(const PreorderPtr& factor, std::vector<std::string> names) {
    auto [omega, projections] = power(factor, static_cast<int>(names.size()));
    return make_alignment_spec(std::move(names), std::move(projections));
}

bool AlignedTuple::operator<(const AlignedTuple& o) const {
    const std::size_t n = std::min(components.size(), o.components.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (components[i].letters != o.components[i].letters) return components[i].letters < o.components[i].letters;
    }
    return components.size() < o.components.size();
}

AlignedTuple make_aligned_tuple(const AlignmentSpec& spec, const PointedAlphabet& a, const Segment& s, int level,
                                const std::vector<std::string>& rows) {
    if (static_cast<int>(rows.size()) != spec.size()) throw invalid_input("one row per index is required");
    AlignedTuple x{s, level, {}};
    for (int i = 0; i < spec.size(); ++i) {
        const auto& f = spec.maps[static_cast<std::size_t>(i)];
        x.components.push_back(word_from_row(a, push_colors(f, s), f(level), rows[static_cast<std::size_t>(i)]));
    }
    return x;
}

bool is_aligned_tuple_of(const AlignmentSpec& spec, const AlignedTuple& x, const Segment& s, int level) {
    if (!(x.segment == s) || x.level != level || static_cast<int>(x.components.size()) != spec.size()) return false;
    for (int i = 0; i < spec.size(); ++i) {
        const auto& f = spec.maps[static_cast<std::size_t>(i)];
        const auto& w = x.components[static_cast<std::size_t>(i)];
        const Segment pushed = push_colors(f, s);
        if (!(w.segment == pushed) || w.level != f(level)) return false;
        if (static_cast<int>(w.letters.size()) != truncate(pushed, f(level)).size()) return false;
    }
    return true;
}

AlignedTuple aligned_image(const AlignmentSpec& spec, const PointedAlphabet& a, const SegmentMorphism& m,
                           const AlignedTuple& x) {
    if (!(x.segment == m.src)) throw invalid_input("tuple does not live on the morphism's source");
    AlignedTuple out{m.dst, x.level, {}};
    for (int i = 0; i < spec.size(); ++i) {
        const auto& f = spec.maps[static_cast<std::size_t>(i)];
        out.components.push_back(
            word_image(push_colors_morphism(f, m), x.components[static_cast<std::size_t>(i)], f(x.level), a));
    }
    return out;
}

const Word& project(const AlignedTuple& x, int i) {
    if (i < 0 || i >= static_cast<int>(x.components.size())) throw invalid_input("unknown index");
    return x.components[static_cast<std::size_t>(i)];
}

std::string render_tuple(const AlignmentSpec& spec, const PointedAlphabet& a, const AlignedTuple& x, bool unicode) {
    std::string out;
    for (int i = 0; i < spec.size(); ++i) {
        if (i) out += " / ";
        const auto& w = x.components[static_cast<std::size_t>(i)];
        out += w.letters.empty() ? "_" : render_row(a, w, unicode);
    }
    return out;
}

}  // namespace seqcat
