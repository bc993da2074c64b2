#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sepreg/nfa.hpp"

namespace sepreg {

// Brute-force machinery that restates the definitions directly: level-wise
// profile tests, bounded zigzag search and the finite layer construction.
// Deliberately independent of the deciders so the two can check each other.

// The subsequences of one word up to length n. Words with equal profiles
// cannot be told apart by any union of level-n pieces, so profiles are the
// fingerprints the level test runs on.
struct SubseqProfile {
    int n = 0;
    std::vector<Word> subseqs;  // shortlex sorted; downward closed, holds ""

    bool operator==(const SubseqProfile&) const = default;
};

// Exact set of subsequences of w of length <= n. n must be >= 0.
SubseqProfile subseq_profile(const Word& w, int n);

struct SimonLevelResult {
    bool separable_at_n = false;
    // Profiles realized by K, present exactly when separable: the union of
    // their cells contains K and misses L.
    std::optional<std::vector<SubseqProfile>> witness;
};

// Level-n test: separable by a boolean combination of level-n pieces iff no
// profile is realized by both languages. Walks (state, profile) pairs
// breadth-first; the profile depends only on the word read, so plain states
// are enough. Throws CapExceededError once the two walks together touch
// more than pair_cap distinct pairs.
SimonLevelResult simon_level_sep(const Nfa& k, const Nfa& l, int n,
                                 std::size_t pair_cap = 200000);

struct PtOracleResult {
    enum class Kind { Conclusive, NecessaryConditionHolds, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::optional<bool> separable;  // set only when Conclusive
    // Conclusive: least separating level. NecessaryConditionHolds: the
    // max_level that was exhausted. Inconclusive: last level that finished
    // before the cap hit, absent when none did.
    std::optional<int> level;
};

// Runs the level test for n = 0..max_level. Success at some level is
// conclusive; failure everywhere only means the necessary condition for
// non-separability held up to max_level. Cap overruns degrade to
// Inconclusive.
PtOracleResult pt_oracle(const Nfa& k, const Nfa& l, int max_level,
                         std::size_t pair_cap = 200000);

// An alternating chain: words[i] lies in the language named by sides[i],
// consecutive sides differ and each word embeds into the next.
struct ZigzagCertificate {
    enum class Side { K, L };
    std::vector<Word> words;
    std::vector<Side> sides;
};

// Longest zigzag of length <= max_len over words of length <= max_word_len
// (both bounds >= 1). Layered breadth-first search: the first layer holds
// the subsequence-minimal words of each language, and a word's successors
// are the minimal words of closure(w) intersected with the side the
// alternation forces next. Restricting to minimal words loses no length,
// since any chain element can be lowered onto a minimal one below it
// without detaching the rest of the chain. Absent iff neither language has
// a word within the length bound.
std::optional<ZigzagCertificate> bounded_zigzag_search(const Nfa& k, const Nfa& l,
                                                       int max_len, int max_word_len);

// Re-checks a chain against the definition with member() and embedding
// tests only.
bool validate_zigzag(const Nfa& k, const Nfa& l, const ZigzagCertificate& cert);

// One upward-closed language given as a finite union of word closures,
// tagged with the input side its words came from.
struct Layer {
    enum class Side { K, L, Neither };
    Side side = Side::Neither;
    std::vector<Word> atoms;  // language = union of closure(w), shortlex sorted

    bool operator==(const Layer&) const = default;
};

struct LayerSeparation {
    std::vector<Layer> layers;
};

// Peels two finite disjoint word sets: each round removes from one side the
// words lying below no word of the other side and emits their closures as
// one layer, K first then L, until both sets drain. Throws
// OverlappingInputsError when the sets share a word.
LayerSeparation layer_separation_finite(const std::vector<Word>& k_words,
                                        const std::vector<Word>& l_words);

// Checks the two layer-separation conditions with automata: every layer
// minus its predecessors meets at most one input language, and at least one
// input is fully covered by the union. Throws CapExceededError when a
// complementation blows past det_cap subset states.
bool verify_layer_separation(const Nfa& k, const Nfa& l, const LayerSeparation& layers,
                             std::size_t det_cap = 4096);

}  // namespace sepreg
