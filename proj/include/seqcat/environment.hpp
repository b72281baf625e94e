#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seqcat/errors.hpp"
#include "seqcat/truncation.hpp"

namespace seqcat {

// Character used for ε in plain-text rows.
inline constexpr char gap_char = 'e';

struct PointedAlphabet {
    std::vector<std::string> symbols;
    int basepoint = 0;

    int size() const { return static_cast<int>(symbols.size()); }
    int index_of(const std::string& label) const;
    // Symbol for a row character; gap_char and "ε" map to the basepoint.
    int from_char(char c) const;
    std::string render(int symbol, bool unicode) const;
    bool operator==(const PointedAlphabet& o) const = default;
};

// Validates distinct symbols and a basepoint among them.
PointedAlphabet make_alphabet(std::vector<std::string> symbols, const std::string& basepoint);
PointedAlphabet dna_alphabet();

// Letters are stored on Tr_level(segment), in increasing position order.
struct Word {
    Segment segment;
    int level = 0;
    std::vector<int> letters;

    bool operator==(const Word& o) const { return letters == o.letters && level == o.level && segment == o.segment; }
    bool operator<(const Word& o) const;
};

Word word_image(const SegmentMorphism& m, const Word& w, int b, const PointedAlphabet& a);
// Same, with the pointed map precomputed.
Word word_image(const PointedIndexMap& p, const Segment& dst, const Word& w, int basepoint);

// Reads letters for Tr_level(segment). The row may list every position of the
// segment (letters at non-truncated positions are ignored) or only the
// truncated positions.
Word word_from_row(const PointedAlphabet& a, const Segment& s, int level, const std::string& row);
// Truncated letters only, no brackets.
std::string render_row(const PointedAlphabet& a, const Word& w, bool unicode = false);
// Patch-bracketed form; non-truncated positions omitted.
std::string render_word(const PointedAlphabet& a, const Word& w, bool unicode = false);

// Lexicographic enumeration of all words over Tr_b(s).
class WordEnumerator {
public:
    WordEnumerator(const Segment& s, int b, const PointedAlphabet& a);
    std::optional<Word> next();
    // |alphabet|^|Tr|, saturating at SIZE_MAX.
    std::size_t count() const;

private:
    Segment seg_;
    int level_;
    int alphabet_size_;
    std::vector<int> cur_;
    bool done_ = false;
};

std::vector<Word> enumerate_words(const Segment& s, int b, const PointedAlphabet& a, std::size_t cap = default_cap);

struct AlignmentSpec {
    std::vector<std::string> names;
    std::vector<MonotoneMap> maps;

    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;
    const PreorderPtr& omega() const { return maps.front().dom(); }
};

AlignmentSpec make_alignment_spec(std::vector<std::string> names, std::vector<MonotoneMap> maps);
// Ω^k with the k projections, one per name.
AlignmentSpec product_spec(const PreorderPtr& factor, std::vector<std::string> names);

struct AlignedTuple {
    Segment segment;
    int level = 0;
    std::vector<Word> components;

    bool operator==(const AlignedTuple& o) const { return components == o.components; }
    bool operator<(const AlignedTuple& o) const;
};

AlignedTuple make_aligned_tuple(const AlignmentSpec& spec, const PointedAlphabet& a, const Segment& s, int level,
                                const std::vector<std::string>& rows);
// Checks segment, levels and truncation shapes of every component.
bool is_aligned_tuple_of(const AlignmentSpec& spec, const AlignedTuple& x, const Segment& s, int level);
AlignedTuple aligned_image(const AlignmentSpec& spec, const PointedAlphabet& a, const SegmentMorphism& m,
                           const AlignedTuple& x);
const Word& project(const AlignedTuple& x, int i);
std::string render_tuple(const AlignmentSpec& spec, const PointedAlphabet& a, const AlignedTuple& x,
                         bool unicode = false);

}  // namespace seqcat
