#pragma once

#include <stdexcept>
#include <string>

namespace sepreg {

// Regex text could not be parsed. `offset` is the byte position of the
// offending character in the input string.
class RegexSyntaxError : public std::runtime_error {
public:
    RegexSyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// The empty-language atom is only legal as a whole expression; it was found
// nested inside a larger regex.
class NestedEmptyError : public RegexSyntaxError {
public:
    explicit NestedEmptyError(std::size_t offset)
        : RegexSyntaxError("empty-language atom '#' may only appear as the whole expression",
                           offset) {}
};

// Automaton file could not be parsed. `line` is 1-based.
class AutomatonFormatError : public std::runtime_error {
public:
    AutomatonFormatError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An operation that requires a non-empty language was handed an empty one.
class EmptyLanguageError : public std::invalid_argument {
public:
    explicit EmptyLanguageError(const std::string& what) : std::invalid_argument(what) {}
};

// Layer separation is undefined when the two input sets share a word.
class OverlappingInputsError : public std::invalid_argument {
public:
    explicit OverlappingInputsError(const std::string& what) : std::invalid_argument(what) {}
};

// An exploration budget ran out before the computation finished. Means
// "unknown at this budget", not "wrong input"; callers are expected to
// catch it and degrade to an inconclusive answer.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sepreg
