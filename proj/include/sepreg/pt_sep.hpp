#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepreg/nfa.hpp"
#include "sepreg/verdict.hpp"

namespace sepreg {

// One-step synchronizations through a middle vertex: every source can route
// to `via` and `via` can route to every target, all inside restrict(.,
// sigma0) of the respective automaton. Expands to source x target edges.
struct CycleEdgeGroup {
    PairVertex via;
    std::vector<char> sigma0;  // nonempty saturated alphabet of via
    std::vector<PairVertex> sources;
    std::vector<PairVertex> targets;
};

struct SynchGraph {
    std::vector<PairVertex> vertices;  // reachable-state pairs, sorted
    std::vector<std::tuple<PairVertex, char, PairVertex>> symbol_edges;
    std::vector<CycleEdgeGroup> cycle_groups;
    std::map<PairVertex, std::vector<char>> saturated_alphabet;  // nonempty only
};

// Largest alphabet for which the pair carries cycles of exactly that
// alphabet in both automata; empty set when the shrinking fixpoint dies out.
std::vector<char> saturated_cycle_alphabet(const Nfa& a, const Nfa& b, PairVertex v);

// Pair reachability inside restrict(a, sigma0) x restrict(b, sigma0). The
// two route words are independent, so the relation factorizes per automaton.
class SigmaRoutes {
public:
    SigmaRoutes(const Nfa& a, const Nfa& b, const std::vector<char>& sigma0);

    // q reachable from p (empty route allowed, so reflexive).
    bool related(PairVertex p, PairVertex q) const;

private:
    std::vector<std::vector<bool>> reach_a_;
    std::vector<std::vector<bool>> reach_b_;
};

SynchGraph build_synch_graph(const Nfa& a, const Nfa& b);

// Separable by a piecewise-testable language iff no accepting pair is
// reachable in the synchronization graph from an initial pair. Symmetric in
// the two inputs. Witness construction is left to the oracles module.
Verdict decide_pt(const Nfa& a, const Nfa& b);

// Graphviz rendering; deterministic ordering.
std::string synch_to_dot(const SynchGraph& g, const Nfa& a, const Nfa& b);

// Re-validates a certificate edge by edge against the definitions.
bool validate_synch_path(const Nfa& a, const Nfa& b, const SynchPath& path);

}  // namespace sepreg
