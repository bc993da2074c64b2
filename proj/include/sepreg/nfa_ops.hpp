#pragma once

#include <optional>
#include <vector>

#include "sepreg/nfa.hpp"

namespace sepreg {

// Strongly connected components of the transition graph (labels ignored for
// connectivity, recorded per component). Components are numbered so that
// `topo_order` lists them sources-first.
struct SccDecomposition {
    std::vector<int> component_of;                   // state -> component id
    std::vector<std::vector<char>> component_alphabet;  // sorted glyphs of internal edges
    std::vector<int> topo_order;                     // component ids, sources first
};

SccDecomposition sccs(const Nfa& a);

// Product automaton over the union alphabet; only pairs reachable from
// initial x initial are materialized.
Nfa intersect(const Nfa& a, const Nfa& b);

// Mirror language: transitions flipped, initial and accepting swapped.
Nfa reverse(const Nfa& a);

// Same states and transitions; accepting becomes the set of states that can
// still reach an original accepting state, so the language is the set of
// extendable prefixes. prefixes of the empty language are empty.
Nfa prefixes(const Nfa& a);

// Upward closure under the subsequence order over `ambient`: every state
// gains a self-loop on every ambient symbol. Requires alphabet(a) within
// ambient.
Nfa upward_subseq_closure(const Nfa& a, const Alphabet& ambient);

// Upward closure under the suffix order over `ambient`: every initial state
// gains a self-loop on every ambient symbol.
Nfa upward_suffix_closure(const Nfa& a, const Alphabet& ambient);

bool is_empty(const Nfa& a);

// True when the language is infinite: some trimmed state lies on a cycle.
bool is_infinite(const Nfa& a);

// Shortest accepted word, ties broken toward smaller glyphs; nullopt when
// the language is empty.
std::optional<Word> shortest_word(const Nfa& a);

// Same transitions minus those labelled outside `allowed`; states unchanged.
Nfa restrict(const Nfa& a, const Alphabet& allowed);

// Subset construction over the automaton's own alphabet, complete with an
// explicit sink. Returns nullopt when more than `state_cap` subset states
// appear.
std::optional<Nfa> determinize_bounded(const Nfa& a, std::size_t state_cap);

// All accepted words of length <= max_len in shortlex order.
std::vector<Word> enumerate_words(const Nfa& a, int max_len);

// Path automaton for one word (deterministic, not complete).
Nfa word_nfa(const Word& w, const Alphabet& alphabet);

// Trie automaton for a finite set of words.
Nfa finite_language_nfa(const std::vector<Word>& words, const Alphabet& alphabet);

// Accepting-set complement. Only meaningful on a deterministic complete
// automaton, e.g. the output of determinize_bounded.
Nfa flip_accepting(const Nfa& a);

// Single initial state and at most one successor per (state, glyph).
bool is_deterministic(const Nfa& a);

// States reachable from the initial set (any labels).
std::vector<bool> reachable_states(const Nfa& a);

// States from which some accepting state is reachable.
std::vector<bool> coreachable_states(const Nfa& a);

// Shortest word leading from `from` into `targets` inside a's transition
// graph, smaller glyphs preferred; nullopt when unreachable. A single NFA
// path is always a valid run, so the word is realized by the automaton.
std::optional<Word> shortest_path_word(const Nfa& a, const std::vector<int>& from,
                                       const std::vector<bool>& targets);

// Longest accepted word length, or nullopt when the language is empty.
// Precondition: is_infinite(a) is false.
std::optional<int> longest_word_length(const Nfa& a);

}  // namespace sepreg
