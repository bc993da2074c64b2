#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "sepreg/nfa.hpp"

namespace sepreg {

// Regular expression syntax:
//   atoms       a-z 0-9    one symbol
//               @          empty word
//               #          empty language (whole expression only)
//   postfix     r*         Kleene star (binds tightest)
//   juxtapose   r s        concatenation
//   infix       r + s      union (binds loosest)
//   (r)         grouping; whitespace is ignored
struct RegexAst {
    enum class Kind { Empty, Epsilon, Symbol, Union, Concat, Star };

    Kind kind;
    char glyph = 0;  // Symbol only
    std::unique_ptr<RegexAst> left;
    std::unique_ptr<RegexAst> right;  // Union, Concat
};

// Throws RegexSyntaxError (with byte offset) or NestedEmptyError.
std::unique_ptr<RegexAst> parse_regex(std::string_view text);

// Fully parenthesized canonical form, for diagnostics and tests.
std::string regex_to_string(const RegexAst& ast);

// Sorted set of symbol glyphs occurring in the expression.
Alphabet regex_alphabet(const RegexAst& ast);

// Compositional construction; the result has no epsilon transitions and may
// have several initial states. The automaton's alphabet is exactly the
// expression's unless a larger `ambient` is supplied.
Nfa regex_to_nfa(const RegexAst& ast);
Nfa regex_to_nfa(const RegexAst& ast, const Alphabet& ambient);

// parse + build in one step.
Nfa compile_regex(std::string_view text);

}  // namespace sepreg
