#include "sepreg/pt_sep.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <sstream>

#include "sepreg/nfa_ops.hpp"

namespace sepreg {

namespace {

std::vector<char> component_alphabet_of(const SccDecomposition& d, int state) {
    return d.component_alphabet[static_cast<std::size_t>(
        d.component_of[static_cast<std::size_t>(state)])];
}

std::vector<char> intersect_glyphs(const std::vector<char>& x, const std::vector<char>& y) {
    std::vector<char> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

// SCC decompositions of both automata restricted to one sub-alphabet,
// shared across all pair vertices that shrink to the same alphabet.
class SccCache {
public:
    SccCache(const Nfa& a, const Nfa& b) : a_(a), b_(b) {}

    const std::pair<SccDecomposition, SccDecomposition>& get(const std::string& sigma) {
        auto it = memo_.find(sigma);
        if (it == memo_.end()) {
            Alphabet allowed = Alphabet::from_glyphs(sigma);
            it = memo_
                     .emplace(sigma, std::make_pair(sccs(restrict(a_, allowed)),
                                                    sccs(restrict(b_, allowed))))
                     .first;
        }
        return it->second;
    }

private:
    const Nfa& a_;
    const Nfa& b_;
    std::map<std::string, std::pair<SccDecomposition, SccDecomposition>> memo_;
};

std::vector<char> saturated_with_cache(SccCache& cache, const std::string& ambient,
                                       PairVertex v) {
    std::string sigma = ambient;
    while (true) {
        const auto& [da, db] = cache.get(sigma);
        std::vector<char> alph_a = component_alphabet_of(da, v.state_a);
        std::vector<char> alph_b = component_alphabet_of(db, v.state_b);
        if (alph_a == alph_b) return alph_a;
        std::vector<char> meet = intersect_glyphs(alph_a, alph_b);
        sigma.assign(meet.begin(), meet.end());
    }
}

std::vector<std::vector<bool>> all_pairs_reach(const Nfa& a) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(a.state_count()));
    for (const Transition& t : a.transitions()) {
        adj[static_cast<std::size_t>(t.from)].push_back(t.to);
    }
    std::vector<std::vector<bool>> reach(
        static_cast<std::size_t>(a.state_count()),
        std::vector<bool>(static_cast<std::size_t>(a.state_count()), false));
    for (int s = 0; s < a.state_count(); ++s) {
        auto& row = reach[static_cast<std::size_t>(s)];
        std::vector<int> queue{s};
        row[static_cast<std::size_t>(s)] = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (int next : adj[static_cast<std::size_t>(queue[i])]) {
                if (!row[static_cast<std::size_t>(next)]) {
                    row[static_cast<std::size_t>(next)] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    return reach;
}

std::string union_glyphs(const Nfa& a, const Nfa& b) {
    return a.alphabet().unions(b.alphabet()).glyphs();
}

}  // namespace

std::vector<char> saturated_cycle_alphabet(const Nfa& a, const Nfa& b, PairVertex v) {
    SccCache cache(a, b);
    return saturated_with_cache(cache, union_glyphs(a, b), v);
}

SigmaRoutes::SigmaRoutes(const Nfa& a, const Nfa& b, const std::vector<char>& sigma0) {
    Alphabet allowed = Alphabet::from_glyphs(std::string(sigma0.begin(), sigma0.end()));
    reach_a_ = all_pairs_reach(restrict(a, allowed));
    reach_b_ = all_pairs_reach(restrict(b, allowed));
}

bool SigmaRoutes::related(PairVertex p, PairVertex q) const {
    return reach_a_[static_cast<std::size_t>(p.state_a)][static_cast<std::size_t>(q.state_a)] &&
           reach_b_[static_cast<std::size_t>(p.state_b)][static_cast<std::size_t>(q.state_b)];
}

namespace {

// Shared scaffolding for graph construction and the decision procedure:
// pair universe restricted to per-automaton reachable states, saturated
// alphabets memoized per sub-alphabet, route relations grouped by Σ₀.
struct SynchContext {
    const Nfa& a;
    const Nfa& b;
    std::string ambient;
    std::vector<int> states_a;  // reachable states of a, sorted
    std::vector<int> states_b;
    SccCache cache;
    std::map<std::string, std::vector<PairVertex>> vias_by_sigma;  // nonempty Σ₀ only
    std::map<PairVertex, std::vector<char>> saturated;             // nonempty only
    std::map<std::string, SigmaRoutes> routes;

    SynchContext(const Nfa& a_in, const Nfa& b_in)
        : a(a_in), b(b_in), ambient(union_glyphs(a_in, b_in)), cache(a_in, b_in) {
        std::vector<bool> ra = reachable_states(a);
        std::vector<bool> rb = reachable_states(b);
        for (int q = 0; q < a.state_count(); ++q) {
            if (ra[static_cast<std::size_t>(q)]) states_a.push_back(q);
        }
        for (int q = 0; q < b.state_count(); ++q) {
            if (rb[static_cast<std::size_t>(q)]) states_b.push_back(q);
        }
        for (int qa : states_a) {
            for (int qb : states_b) {
                PairVertex v{qa, qb};
                std::vector<char> sat = saturated_with_cache(cache, ambient, v);
                if (!sat.empty()) {
                    std::string key(sat.begin(), sat.end());
                    vias_by_sigma[key].push_back(v);
                    saturated.emplace(v, std::move(sat));
                }
            }
        }
        for (const auto& [sigma, vias] : vias_by_sigma) {
            (void)vias;
            routes.emplace(sigma,
                           SigmaRoutes(a, b, std::vector<char>(sigma.begin(), sigma.end())));
        }
    }

    bool accepting(PairVertex v) const {
        return a.is_accepting(v.state_a) && b.is_accepting(v.state_b);
    }
};

}  // namespace

SynchGraph build_synch_graph(const Nfa& a, const Nfa& b) {
    SynchContext ctx(a, b);
    SynchGraph g;
    for (int qa : ctx.states_a) {
        for (int qb : ctx.states_b) g.vertices.push_back({qa, qb});
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    for (PairVertex v : g.vertices) {
        for (char glyph : ctx.ambient) {
            for (int ta : a.step(v.state_a, glyph)) {
                for (int tb : b.step(v.state_b, glyph)) {
                    g.symbol_edges.emplace_back(v, glyph, PairVertex{ta, tb});
                }
            }
        }
    }
    g.saturated_alphabet = ctx.saturated;
    for (const auto& [sigma, vias] : ctx.vias_by_sigma) {
        const SigmaRoutes& routes = ctx.routes.at(sigma);
        for (PairVertex via : vias) {
            CycleEdgeGroup group;
            group.via = via;
            group.sigma0.assign(sigma.begin(), sigma.end());
            for (PairVertex v : g.vertices) {
                if (routes.related(v, via)) group.sources.push_back(v);
                if (routes.related(via, v)) group.targets.push_back(v);
            }
            g.cycle_groups.push_back(std::move(group));
        }
    }
    std::sort(g.cycle_groups.begin(), g.cycle_groups.end(),
              [](const CycleEdgeGroup& x, const CycleEdgeGroup& y) { return x.via < y.via; });
    return g;
}

Verdict decide_pt(const Nfa& a, const Nfa& b) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict verdict;
    verdict.family = Family::Pt;

    SynchContext ctx(a, b);
    const int nb = b.state_count();
    auto index = [nb](PairVertex v) {
        return static_cast<std::size_t>(v.state_a) * static_cast<std::size_t>(nb) +
               static_cast<std::size_t>(v.state_b);
    };
    std::vector<bool> seen(static_cast<std::size_t>(a.state_count()) *
                               static_cast<std::size_t>(nb),
                           false);
    std::map<PairVertex, std::pair<PairVertex, SynchStep>> pred;
    std::deque<PairVertex> queue;
    auto push = [&](PairVertex v, PairVertex from, SynchStep step, bool is_start) {
        if (seen[index(v)]) return;
        seen[index(v)] = true;
        if (!is_start) pred.emplace(v, std::make_pair(from, std::move(step)));
        queue.push_back(v);
    };
    for (int qa : a.initial()) {
        for (int qb : b.initial()) push({qa, qb}, {}, {}, true);
    }
    std::map<PairVertex, bool> triggered;
    std::optional<PairVertex> goal;
    while (!queue.empty() && !goal) {
        PairVertex v = queue.front();
        queue.pop_front();
        ++verdict.stats.vertices;
        if (ctx.accepting(v)) {
            goal = v;
            break;
        }
        for (char glyph : ctx.ambient) {
            for (int ta : a.step(v.state_a, glyph)) {
                for (int tb : b.step(v.state_b, glyph)) {
                    SynchStep step;
                    step.kind = SynchStep::Kind::Symbol;
                    step.glyph = glyph;
                    push({ta, tb}, v, std::move(step), false);
                }
            }
        }
        for (const auto& [sigma, vias] : ctx.vias_by_sigma) {
            const SigmaRoutes& routes = ctx.routes.at(sigma);
            for (PairVertex via : vias) {
                if (triggered[via]) continue;
                if (!routes.related(v, via)) continue;
                triggered[via] = true;
                for (int ta : ctx.states_a) {
                    for (int tb : ctx.states_b) {
                        PairVertex t{ta, tb};
                        if (!routes.related(via, t)) continue;
                        SynchStep step;
                        step.kind = SynchStep::Kind::Cycle;
                        step.sigma0.assign(sigma.begin(), sigma.end());
                        step.via = via;
                        push(t, v, std::move(step), false);
                    }
                }
            }
        }
    }

    if (goal) {
        verdict.separable = false;
        SynchPath path;
        PairVertex at = *goal;
        path.vertices.push_back(at);
        while (true) {
            auto it = pred.find(at);
            if (it == pred.end()) break;
            path.steps.push_back(it->second.second);
            at = it->second.first;
            path.vertices.push_back(at);
        }
        std::reverse(path.vertices.begin(), path.vertices.end());
        std::reverse(path.steps.begin(), path.steps.end());
        verdict.certificate = std::move(path);
    } else {
        verdict.separable = true;
    }
    verdict.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return verdict;
}

std::string synch_to_dot(const SynchGraph& g, const Nfa& a, const Nfa& b) {
    std::ostringstream out;
    auto name = [](PairVertex v) {
        return "\"" + std::to_string(v.state_a) + "," + std::to_string(v.state_b) + "\"";
    };
    out << "digraph synch {\n  rankdir=LR;\n";
    for (PairVertex v : g.vertices) {
        bool initial = a.is_initial(v.state_a) && b.is_initial(v.state_b);
        bool accepting = a.is_accepting(v.state_a) && b.is_accepting(v.state_b);
        out << "  " << name(v) << " [shape=" << (accepting ? "doublecircle" : "circle");
        if (initial) out << ", penwidth=2";
        out << "];\n";
    }
    for (const auto& [from, glyph, to] : g.symbol_edges) {
        out << "  " << name(from) << " -> " << name(to) << " [label=\"" << glyph << "\"];\n";
    }
    for (const CycleEdgeGroup& group : g.cycle_groups) {
        std::string sigma(group.sigma0.begin(), group.sigma0.end());
        std::string label;
        label += "Σ0={";
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (i) label += ",";
            label += sigma[i];
        }
        label += "} via (" + std::to_string(group.via.state_a) + "," +
                 std::to_string(group.via.state_b) + ")";
        for (PairVertex s : group.sources) {
            for (PairVertex t : group.targets) {
                out << "  " << name(s) << " -> " << name(t) << " [label=\"" << label
                    << "\", style=dashed];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

bool validate_synch_path(const Nfa& a, const Nfa& b, const SynchPath& path) {
    if (path.vertices.empty()) return false;
    if (path.steps.size() + 1 != path.vertices.size()) return false;
    PairVertex first = path.vertices.front();
    if (!a.is_initial(first.state_a) || !b.is_initial(first.state_b)) return false;
    PairVertex last = path.vertices.back();
    if (!a.is_accepting(last.state_a) || !b.is_accepting(last.state_b)) return false;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        PairVertex from = path.vertices[i];
        PairVertex to = path.vertices[i + 1];
        const SynchStep& step = path.steps[i];
        if (step.kind == SynchStep::Kind::Symbol) {
            auto has = [&](const Nfa& m, int f, int t) {
                std::vector<int> image = m.step(f, step.glyph);
                return std::binary_search(image.begin(), image.end(), t);
            };
            if (!has(a, from.state_a, to.state_a) || !has(b, from.state_b, to.state_b)) {
                return false;
            }
        } else {
            if (step.sigma0.empty()) return false;
            if (saturated_cycle_alphabet(a, b, step.via) != step.sigma0) return false;
            SigmaRoutes routes(a, b, step.sigma0);
            if (!routes.related(from, step.via) || !routes.related(step.via, to)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace sepreg
