#pragma once

#include <optional>
#include <vector>

#include "sepreg/nfa.hpp"
#include "sepreg/verdict.hpp"

namespace sepreg {

// Longest word that is a suffix of every accepted word, computed as the
// longest common prefix of the reversed automaton by stepping the state set
// while exactly one next symbol is possible. Throws EmptyLanguageError on an
// empty language.
Word lcs(const Nfa& k);

struct SuffixOptions {
    std::size_t det_cap = 4096;    // subset-state budget (empty-K path, validators)
    std::size_t enum_cap = 20000;  // witness word-listing budget
    bool want_witness = true;
    Deadline deadline;
};

// Separator shape sigma* w for one word w. For nonempty K the only candidate
// worth checking is the longest common suffix of K. For empty K the decider
// searches for any word that is not a suffix of an L-word, via bounded
// determinization of the suffix language of L; a blown budget means
// inconclusive, never a wrong answer.
Verdict decide_suffix_single(const Nfa& k, const Nfa& l, const SuffixOptions& opts = {});

// Separator shape: finite union of sigma* w languages. Separable iff no
// K-word is a suffix of an L-word and the common-suffix lengths of the two
// languages are bounded (the prefix-intersection of the reversals is
// finite).
Verdict decide_suffix_union(const Nfa& k, const Nfa& l, const SuffixOptions& opts = {});

// Separator shape: boolean combination of sigma* w languages. Separable iff
// the languages are disjoint and their common-suffix lengths are bounded.
// The witness lists exact-word cells below the separating length and whole
// suffix classes at it.
Verdict decide_suffix_bc(const Nfa& k, const Nfa& l, const SuffixOptions& opts = {});

// Prefix-order twin: runs the matching suffix decider on the reversed
// automata and mirrors witness and certificate words back. `family` must be
// one of the Prefix* tags.
Verdict decide_prefix(Family family, const Nfa& k, const Nfa& l, const SuffixOptions& opts = {});

// Independent re-checks. `family` selects suffix or prefix reading; words of
// prefix witnesses are expected in original (unreversed) form. nullopt means
// the determinization budget was too small to finish the containment check.
std::optional<bool> validate_suffix_word_witness(Family family, const Nfa& k, const Nfa& l,
                                                 const Word& witness, std::size_t det_cap = 4096);
std::optional<bool> validate_suffix_union_witness(Family family, const Nfa& k, const Nfa& l,
                                                  const SuffixUnionWitness& witness,
                                                  std::size_t det_cap = 4096);
std::optional<bool> validate_suffix_cells_witness(Family family, const Nfa& k, const Nfa& l,
                                                  const SuffixCellsWitness& witness,
                                                  std::size_t det_cap = 4096);
bool validate_suffix_single_certificate(Family family, const Nfa& k, const Nfa& l,
                                        const OrderedPairEvidence& ev);
bool validate_unbounded_evidence(Family family, const Nfa& k, const Nfa& l,
                                 const UnboundedSuffixEvidence& ev);

}  // namespace sepreg
