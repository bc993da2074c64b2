#include "sepreg/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepreg {

bool is_valid_glyph(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

Alphabet Alphabet::from_glyphs(std::string_view glyphs) {
    Alphabet a;
    a.glyphs_.assign(glyphs.begin(), glyphs.end());
    std::sort(a.glyphs_.begin(), a.glyphs_.end());
    a.glyphs_.erase(std::unique(a.glyphs_.begin(), a.glyphs_.end()), a.glyphs_.end());
    for (char c : a.glyphs_) {
        if (!is_valid_glyph(c)) {
            throw std::invalid_argument(std::string("invalid symbol glyph '") + c + "'");
        }
    }
    return a;
}

std::optional<int> Alphabet::id_of(char glyph) const {
    auto it = std::lower_bound(glyphs_.begin(), glyphs_.end(), glyph);
    if (it == glyphs_.end() || *it != glyph) return std::nullopt;
    return static_cast<int>(it - glyphs_.begin());
}

Alphabet Alphabet::unions(const Alphabet& other) const {
    return from_glyphs(glyphs_ + other.glyphs_);
}

bool Alphabet::is_subset_of(const Alphabet& other) const {
    return std::includes(other.glyphs_.begin(), other.glyphs_.end(),
                         glyphs_.begin(), glyphs_.end());
}

bool is_subsequence(const Word& small, const Word& big) {
    std::size_t i = 0;
    for (char c : big) {
        if (i < small.size() && small[i] == c) ++i;
    }
    return i == small.size();
}

bool is_suffix(const Word& small, const Word& big) {
    if (small.size() > big.size()) return false;
    return std::equal(small.rbegin(), small.rend(), big.rbegin());
}

bool is_prefix(const Word& small, const Word& big) {
    if (small.size() > big.size()) return false;
    return std::equal(small.begin(), small.end(), big.begin());
}

Word reversed(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace sepreg
