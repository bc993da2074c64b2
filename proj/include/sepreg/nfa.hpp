#pragma once

#include <compare>
#include <vector>

#include "sepreg/alphabet.hpp"

namespace sepreg {

struct Transition {
    int from;
    char glyph;
    int to;

    auto operator<=>(const Transition&) const = default;
};

// Nondeterministic finite automaton without epsilon transitions. Multiple
// initial states are allowed (reversal stays closed under this shape).
// Transitions are kept sorted and duplicate-free, so structural equality is
// language-preserving canonical per construction order.
class Nfa {
public:
    // Validates indices and glyphs; sorts and deduplicates transitions and
    // state sets. `initial` must be non-empty, `accepting` may be empty.
    // Throws std::invalid_argument on any malformed piece.
    Nfa(int state_count, Alphabet alphabet, std::vector<Transition> transitions,
        std::vector<int> initial, std::vector<int> accepting);

    int state_count() const { return state_count_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const std::vector<int>& initial() const { return initial_; }
    const std::vector<int>& accepting() const { return accepting_; }

    bool is_accepting(int state) const;
    bool is_initial(int state) const;

    // Outgoing transitions of one state, sorted by (glyph, target).
    const std::vector<Transition>& out(int state) const {
        return out_.at(static_cast<std::size_t>(state));
    }

    // Successor states of `from` on `glyph`, sorted. Glyphs outside the
    // alphabet are legal and yield no successors.
    std::vector<int> step(int from, char glyph) const;

    // Image of a sorted state set under one glyph, sorted.
    std::vector<int> step_set(const std::vector<int>& from, char glyph) const;

    bool operator==(const Nfa& other) const = default;

private:
    int state_count_ = 0;
    Alphabet alphabet_;
    std::vector<Transition> transitions_;
    std::vector<int> initial_;
    std::vector<int> accepting_;
    std::vector<std::vector<Transition>> out_;
};

// Subset simulation of `w` from the initial states.
bool member(const Nfa& a, const Word& w);

}  // namespace sepreg
