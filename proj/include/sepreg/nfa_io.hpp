#pragma once

#include <iosfwd>
#include <string>

#include "sepreg/nfa.hpp"

namespace sepreg {

// Text format, versioned as sepreg-nfa v1:
//
//   # sepreg-nfa v1
//   alphabet ab
//   states 3
//   initial 0
//   accepting 2
//   0 a 1
//   1 b 2
//
// '#' starts a comment line. alphabet, states and initial are mandatory and
// must precede the transition triples; accepting may be omitted or empty.
// Throws AutomatonFormatError with a 1-based line number.
Nfa parse_automaton_text(const std::string& text);
Nfa parse_automaton_file(const std::string& path);

std::string write_automaton_text(const Nfa& a);
void write_automaton_file(const Nfa& a, const std::string& path);

}  // namespace sepreg
