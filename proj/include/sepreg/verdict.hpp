#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sepreg/nfa.hpp"

namespace sepreg {

enum class Family {
    Pt,
    SubseqSingle,
    SubseqUnion,
    SuffixSingle,
    SuffixUnion,
    SuffixBc,
    PrefixSingle,
    PrefixUnion,
    PrefixBc,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Cooperative deadline passed into the potentially long-running searches.
// Expiry turns the verdict inconclusive, never into a wrong answer.
class Deadline {
public:
    Deadline() = default;
    static Deadline after_ms(long long ms) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return d;
    }
    bool expired() const {
        return at_ && std::chrono::steady_clock::now() >= *at_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

struct DecideStats {
    double elapsed_ms = 0.0;
    std::size_t vertices = 0;  // search nodes explored, family-specific meaning
    bool caps_hit = false;
};

// --- witnesses (present only when separable) ---

// One word w; the separator is the upward closure of w in the family's order.
struct SingleWordWitness {
    Word word;
};

// Separator = upward subsequence closure of K, as an automaton; the minimal
// words give its finite union form when the enumeration completed.
struct SubseqClosureWitness {
    Nfa separator;
    std::vector<Word> minimal_words;
    bool minimal_words_complete = true;
};

// Separator = union of suffix languages of the listed words.
struct SuffixUnionWitness {
    std::vector<Word> words;
    bool complete = true;
};

// Boolean-combination separator: exact-word cells for short words plus
// whole suffix classes at the separating length.
struct SuffixCellsWitness {
    int separating_length = 0;
    std::vector<Word> exact_words;
    std::vector<Word> suffix_classes;
    bool complete = true;
};

// Level-n subsequence profiles realized by K; their union of cells is a
// piecewise-testable separator.
struct ProfileWitness {
    int level = 0;
    std::vector<std::vector<Word>> profiles;
};

using Witness = std::variant<SingleWordWitness, SubseqClosureWitness, SuffixUnionWitness,
                             SuffixCellsWitness, ProfileWitness>;

// --- certificates (present only when not separable) ---

struct PairVertex {
    int state_a = 0;
    int state_b = 0;

    auto operator<=>(const PairVertex&) const = default;
};

struct SynchStep {
    enum class Kind { Symbol, Cycle };
    Kind kind = Kind::Symbol;
    char glyph = 0;                // Symbol
    std::vector<char> sigma0;      // Cycle: saturated alphabet of `via`
    PairVertex via;                // Cycle

    bool operator==(const SynchStep&) const = default;
};

// Path in the synchronization graph from an initial pair to an accepting
// pair; vertices has one more element than steps.
struct SynchPath {
    std::vector<PairVertex> vertices;
    std::vector<SynchStep> steps;
};

// Two concrete words related by the family's order. For Subsequence, Prefix
// and Equal, lower is accepted by K and upper by L; the Suffix relation is
// also used with lower = the longest common suffix of K, which need not be
// a K-word itself (see the suffix-single decider).
struct OrderedPairEvidence {
    enum class Relation { Subsequence, Suffix, Prefix, Equal };
    Relation relation = Relation::Subsequence;
    Word lower;
    Word upper;
};

// stem·cycle^i·tail is a common suffix (reversed) of K- and L-words for
// every i, so common suffix lengths are unbounded.
struct UnboundedSuffixEvidence {
    Word stem;
    Word cycle;
    Word tail;
};

using Certificate = std::variant<SynchPath, OrderedPairEvidence, UnboundedSuffixEvidence>;

// Re-checks the pair against the automata: lower accepted by K, upper by L,
// and the claimed order relation holds between the two words.
bool validate_ordered_pair(const Nfa& k, const Nfa& l, const OrderedPairEvidence& ev);

struct Verdict {
    Family family = Family::Pt;
    std::optional<bool> separable;  // nullopt = inconclusive
    std::optional<Witness> witness;
    std::optional<Certificate> certificate;
    DecideStats stats;
};

}  // namespace sepreg
