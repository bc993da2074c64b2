#pragma once

#include <optional>
#include <vector>

#include "sepreg/nfa.hpp"
#include "sepreg/verdict.hpp"

namespace sepreg {

// Complete DFA for the upward subsequence closure of one word: state i means
// "the longest prefix of w embedded so far has length i".
Nfa greedy_embedding_dfa(const Word& w, const Alphabet& ambient);

struct SubseqOptions {
    std::optional<int> depth_cap;   // single: overrides the intrinsic bound
    bool want_witness = true;
    std::size_t enum_cap = 20000;   // word-enumeration budget for witnesses
    Deadline deadline;
};

// Separates K from L by one upward-closed union: separable iff the upward
// subsequence closure of K misses L. Asymmetric.
Verdict decide_subseq_union(const Nfa& k, const Nfa& l, const SubseqOptions& opts = {});

// Separates K from L by the closure of a single word: depth-first search
// over candidate words, pruned by K-containment (antitone in the word).
// Children are tested before their parent, so the reported witness is a
// longest one, ties toward smaller glyphs. Worst case exponential; the
// intrinsic depth bound is |shortest word of K|.
Verdict decide_subseq_single(const Nfa& k, const Nfa& l, const SubseqOptions& opts = {});

// Subsequence-minimal accepted words. Minimal words are shorter than the
// state count (cycle removal yields a strictly smaller subsequence), so the
// enumeration is complete unless the word-count budget runs out.
std::vector<Word> minimal_accepted_words(const Nfa& a, int max_len, std::size_t enum_cap,
                                         bool* complete);

// Independent re-checks of emitted witnesses.
bool validate_subseq_single_witness(const Nfa& k, const Nfa& l, const Word& witness);
std::optional<bool> validate_subseq_union_witness(const Nfa& k, const Nfa& l,
                                                  const SubseqClosureWitness& witness,
                                                  std::size_t det_cap = 4096);

}  // namespace sepreg
