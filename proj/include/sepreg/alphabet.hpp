#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace sepreg {

// A word is a sequence of symbol glyphs. The empty string is the empty word.
using Word = std::string;

// Symbols are printable glyphs drawn from [a-z0-9]. Within an alphabet each
// symbol also has a dense id, which is its index in the sorted glyph list;
// id order therefore coincides with glyph order and is the tie-break order
// used everywhere (shortest words, enumeration, search).
struct Symbol {
    int id;
    char glyph;
};

bool is_valid_glyph(char c);

// An ordered set of symbols. Immutable once built.
class Alphabet {
public:
    Alphabet() = default;

    // Deduplicates and sorts; throws std::invalid_argument on a bad glyph.
    static Alphabet from_glyphs(std::string_view glyphs);

    int size() const { return static_cast<int>(glyphs_.size()); }
    bool empty() const { return glyphs_.empty(); }
    char glyph(int id) const { return glyphs_.at(static_cast<std::size_t>(id)); }
    Symbol symbol(int id) const { return Symbol{id, glyph(id)}; }

    std::optional<int> id_of(char glyph) const;
    bool contains(char glyph) const { return id_of(glyph).has_value(); }

    // Sorted glyph string; doubles as the canonical text form.
    const std::string& glyphs() const { return glyphs_; }

    Alphabet unions(const Alphabet& other) const;
    bool is_subset_of(const Alphabet& other) const;

    auto operator<=>(const Alphabet&) const = default;

private:
    std::string glyphs_;
};

// Word order helpers. Subsequence means scattered (not necessarily
// contiguous) embedding.
bool is_subsequence(const Word& small, const Word& big);
bool is_suffix(const Word& small, const Word& big);
bool is_prefix(const Word& small, const Word& big);
Word reversed(const Word& w);

// Length-then-lexicographic comparison, the canonical enumeration order.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace sepreg
