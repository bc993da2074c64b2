#include "sepreg/nfa_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace sepreg {

namespace {

// Iterative Tarjan over a plain successor graph. Components are emitted in
// completion order, which is reverse topological order.
struct ComponentSplit {
    std::vector<int> component_of;
    int component_count = 0;
};

ComponentSplit tarjan(int n, const std::vector<std::vector<int>>& adj) {
    ComponentSplit r;
    r.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int state;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] =
            next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = adj[static_cast<std::size_t>(f.state)];
            if (f.child < succ.size()) {
                int next = succ[f.child++];
                if (index[static_cast<std::size_t>(next)] == -1) {
                    index[static_cast<std::size_t>(next)] =
                        lowlink[static_cast<std::size_t>(next)] = next_index++;
                    stack.push_back(next);
                    on_stack[static_cast<std::size_t>(next)] = true;
                    frames.push_back({next, 0});
                } else if (on_stack[static_cast<std::size_t>(next)]) {
                    lowlink[static_cast<std::size_t>(f.state)] =
                        std::min(lowlink[static_cast<std::size_t>(f.state)],
                                 index[static_cast<std::size_t>(next)]);
                }
            } else {
                if (lowlink[static_cast<std::size_t>(f.state)] ==
                    index[static_cast<std::size_t>(f.state)]) {
                    int comp = r.component_count++;
                    while (true) {
                        int q = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(q)] = false;
                        r.component_of[static_cast<std::size_t>(q)] = comp;
                        if (q == f.state) break;
                    }
                }
                int done = f.state;
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().state;
                    lowlink[static_cast<std::size_t>(parent)] =
                        std::min(lowlink[static_cast<std::size_t>(parent)],
                                 lowlink[static_cast<std::size_t>(done)]);
                }
            }
        }
    }
    return r;
}

std::vector<std::vector<int>> successor_graph(const Nfa& a) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(a.state_count()));
    for (const Transition& t : a.transitions()) {
        adj[static_cast<std::size_t>(t.from)].push_back(t.to);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

std::vector<bool> graph_reach(int n, const std::vector<std::vector<int>>& adj,
                              const std::vector<int>& seeds) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> queue;
    for (int q : seeds) {
        if (!seen[static_cast<std::size_t>(q)]) {
            seen[static_cast<std::size_t>(q)] = true;
            queue.push_back(q);
        }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int next : adj[static_cast<std::size_t>(queue[i])]) {
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = true;
                queue.push_back(next);
            }
        }
    }
    return seen;
}

}  // namespace

SccDecomposition sccs(const Nfa& a) {
    ComponentSplit split = tarjan(a.state_count(), successor_graph(a));
    SccDecomposition d;
    // Tarjan numbers components in reverse topological order; renumber so
    // component 0 comes first in topological order.
    int count = split.component_count;
    d.component_of.resize(static_cast<std::size_t>(a.state_count()));
    for (int q = 0; q < a.state_count(); ++q) {
        d.component_of[static_cast<std::size_t>(q)] =
            count - 1 - split.component_of[static_cast<std::size_t>(q)];
    }
    d.component_alphabet.assign(static_cast<std::size_t>(count), {});
    for (const Transition& t : a.transitions()) {
        int cf = d.component_of[static_cast<std::size_t>(t.from)];
        int ct = d.component_of[static_cast<std::size_t>(t.to)];
        if (cf == ct) d.component_alphabet[static_cast<std::size_t>(cf)].push_back(t.glyph);
    }
    for (auto& glyphs : d.component_alphabet) {
        std::sort(glyphs.begin(), glyphs.end());
        glyphs.erase(std::unique(glyphs.begin(), glyphs.end()), glyphs.end());
    }
    d.topo_order.resize(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) d.topo_order[static_cast<std::size_t>(c)] = c;
    return d;
}

Nfa intersect(const Nfa& a, const Nfa& b) {
    Alphabet alphabet = a.alphabet().unions(b.alphabet());
    std::map<std::pair<int, int>, int> id_of;
    std::vector<std::pair<int, int>> pairs;
    std::deque<std::pair<int, int>> queue;
    auto materialize = [&](std::pair<int, int> p) {
        auto [it, fresh] = id_of.emplace(p, static_cast<int>(pairs.size()));
        if (fresh) {
            pairs.push_back(p);
            queue.push_back(p);
        }
        return it->second;
    };
    for (int qa : a.initial()) {
        for (int qb : b.initial()) materialize({qa, qb});
    }
    std::vector<Transition> transitions;
    while (!queue.empty()) {
        auto [qa, qb] = queue.front();
        queue.pop_front();
        int from = id_of.at({qa, qb});
        for (const Transition& ta : a.out(qa)) {
            for (const Transition& tb : b.out(qb)) {
                if (ta.glyph != tb.glyph) continue;
                int to = materialize({ta.to, tb.to});
                transitions.push_back({from, ta.glyph, to});
            }
        }
    }
    std::vector<int> initial;
    for (int qa : a.initial()) {
        for (int qb : b.initial()) initial.push_back(id_of.at({qa, qb}));
    }
    std::vector<int> accepting;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (a.is_accepting(pairs[i].first) && b.is_accepting(pairs[i].second)) {
            accepting.push_back(static_cast<int>(i));
        }
    }
    return Nfa(static_cast<int>(pairs.size()), alphabet, std::move(transitions),
               std::move(initial), std::move(accepting));
}

Nfa reverse(const Nfa& a) {
    std::vector<Transition> flipped;
    flipped.reserve(a.transitions().size());
    for (const Transition& t : a.transitions()) {
        flipped.push_back({t.to, t.glyph, t.from});
    }
    std::vector<int> initial = a.accepting();
    if (initial.empty()) {
        // Reversal of an automaton with no accepting states keeps the empty
        // language; any initial state works, but one is mandatory.
        initial.push_back(0);
        return Nfa(a.state_count(), a.alphabet(), std::move(flipped), std::move(initial), {});
    }
    return Nfa(a.state_count(), a.alphabet(), std::move(flipped), std::move(initial),
               a.initial());
}

Nfa prefixes(const Nfa& a) {
    std::vector<bool> co = coreachable_states(a);
    std::vector<int> accepting;
    for (int q = 0; q < a.state_count(); ++q) {
        if (co[static_cast<std::size_t>(q)]) accepting.push_back(q);
    }
    return Nfa(a.state_count(), a.alphabet(), a.transitions(), a.initial(),
               std::move(accepting));
}

namespace {

Nfa with_self_loops(const Nfa& a, const Alphabet& ambient, const std::vector<int>& states) {
    if (!a.alphabet().is_subset_of(ambient)) {
        throw std::invalid_argument("closure ambient alphabet must contain the automaton's");
    }
    std::vector<Transition> transitions = a.transitions();
    for (int q : states) {
        for (char g : ambient.glyphs()) transitions.push_back({q, g, q});
    }
    return Nfa(a.state_count(), ambient, std::move(transitions), a.initial(), a.accepting());
}

}  // namespace

Nfa upward_subseq_closure(const Nfa& a, const Alphabet& ambient) {
    std::vector<int> all(static_cast<std::size_t>(a.state_count()));
    for (int q = 0; q < a.state_count(); ++q) all[static_cast<std::size_t>(q)] = q;
    return with_self_loops(a, ambient, all);
}

Nfa upward_suffix_closure(const Nfa& a, const Alphabet& ambient) {
    return with_self_loops(a, ambient, a.initial());
}

bool is_empty(const Nfa& a) {
    std::vector<bool> reach = reachable_states(a);
    for (int q : a.accepting()) {
        if (reach[static_cast<std::size_t>(q)]) return false;
    }
    return true;
}

bool is_infinite(const Nfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> co = coreachable_states(a);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(a.state_count()));
    for (const Transition& t : a.transitions()) {
        if (reach[static_cast<std::size_t>(t.from)] && co[static_cast<std::size_t>(t.from)] &&
            reach[static_cast<std::size_t>(t.to)] && co[static_cast<std::size_t>(t.to)]) {
            adj[static_cast<std::size_t>(t.from)].push_back(t.to);
        }
    }
    ComponentSplit split = tarjan(a.state_count(), adj);
    std::vector<bool> nontrivial(static_cast<std::size_t>(split.component_count), false);
    std::vector<int> size(static_cast<std::size_t>(split.component_count), 0);
    for (int q = 0; q < a.state_count(); ++q) {
        ++size[static_cast<std::size_t>(split.component_of[static_cast<std::size_t>(q)])];
    }
    for (int q = 0; q < a.state_count(); ++q) {
        int c = split.component_of[static_cast<std::size_t>(q)];
        for (int next : adj[static_cast<std::size_t>(q)]) {
            if (split.component_of[static_cast<std::size_t>(next)] == c &&
                (size[static_cast<std::size_t>(c)] > 1 || next == q)) {
                nontrivial[static_cast<std::size_t>(c)] = true;
            }
        }
    }
    for (bool b : nontrivial) {
        if (b) return true;
    }
    return false;
}

std::optional<Word> shortest_word(const Nfa& a) {
    std::vector<bool> targets(static_cast<std::size_t>(a.state_count()), false);
    for (int q : a.accepting()) targets[static_cast<std::size_t>(q)] = true;
    return shortest_path_word(a, a.initial(), targets);
}

Nfa restrict(const Nfa& a, const Alphabet& allowed) {
    std::vector<Transition> kept;
    for (const Transition& t : a.transitions()) {
        if (allowed.contains(t.glyph)) kept.push_back(t);
    }
    return Nfa(a.state_count(), a.alphabet(), std::move(kept), a.initial(), a.accepting());
}

std::optional<Nfa> determinize_bounded(const Nfa& a, std::size_t state_cap) {
    std::map<std::vector<int>, int> id_of;
    std::vector<std::vector<int>> subsets;
    std::deque<int> queue;
    auto materialize = [&](std::vector<int> subset) -> std::optional<int> {
        auto [it, fresh] = id_of.emplace(subset, static_cast<int>(subsets.size()));
        if (fresh) {
            if (subsets.size() + 1 > state_cap) return std::nullopt;
            subsets.push_back(std::move(subset));
            queue.push_back(it->second);
        }
        return it->second;
    };
    if (!materialize(a.initial())) return std::nullopt;
    std::vector<Transition> transitions;
    while (!queue.empty()) {
        int from = queue.front();
        queue.pop_front();
        for (char g : a.alphabet().glyphs()) {
            std::vector<int> image = a.step_set(subsets[static_cast<std::size_t>(from)], g);
            std::optional<int> to = materialize(std::move(image));
            if (!to) return std::nullopt;
            transitions.push_back({from, g, *to});
        }
    }
    std::vector<int> accepting;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (int q : subsets[i]) {
            if (a.is_accepting(q)) {
                accepting.push_back(static_cast<int>(i));
                break;
            }
        }
    }
    return Nfa(static_cast<int>(subsets.size()), a.alphabet(), std::move(transitions), {0},
               std::move(accepting));
}

std::vector<Word> enumerate_words(const Nfa& a, int max_len) {
    std::vector<Word> result;
    struct Node {
        Word word;
        std::vector<int> states;
    };
    std::vector<Node> level{{Word{}, a.initial()}};
    for (int len = 0; len <= max_len && !level.empty(); ++len) {
        for (const Node& node : level) {
            for (int q : node.states) {
                if (a.is_accepting(q)) {
                    result.push_back(node.word);
                    break;
                }
            }
        }
        if (len == max_len) break;
        std::vector<Node> next;
        for (const Node& node : level) {
            for (char g : a.alphabet().glyphs()) {
                std::vector<int> image = a.step_set(node.states, g);
                if (image.empty()) continue;
                next.push_back({node.word + g, std::move(image)});
            }
        }
        level = std::move(next);
    }
    return result;
}

Nfa word_nfa(const Word& w, const Alphabet& alphabet) {
    std::vector<Transition> transitions;
    for (std::size_t i = 0; i < w.size(); ++i) {
        transitions.push_back({static_cast<int>(i), w[i], static_cast<int>(i) + 1});
    }
    return Nfa(static_cast<int>(w.size()) + 1, alphabet, std::move(transitions), {0},
               {static_cast<int>(w.size())});
}

Nfa finite_language_nfa(const std::vector<Word>& words, const Alphabet& alphabet) {
    std::vector<std::map<char, int>> children(1);
    std::vector<int> accepting;
    for (const Word& w : words) {
        int node = 0;
        for (char c : w) {
            auto it = children[static_cast<std::size_t>(node)].find(c);
            if (it == children[static_cast<std::size_t>(node)].end()) {
                int fresh = static_cast<int>(children.size());
                children[static_cast<std::size_t>(node)].emplace(c, fresh);
                children.emplace_back();
                node = fresh;
            } else {
                node = it->second;
            }
        }
        accepting.push_back(node);
    }
    std::vector<Transition> transitions;
    for (std::size_t from = 0; from < children.size(); ++from) {
        for (auto [glyph, to] : children[from]) {
            transitions.push_back({static_cast<int>(from), glyph, to});
        }
    }
    return Nfa(static_cast<int>(children.size()), alphabet, std::move(transitions), {0},
               std::move(accepting));
}

Nfa flip_accepting(const Nfa& a) {
    std::vector<int> accepting;
    for (int q = 0; q < a.state_count(); ++q) {
        if (!a.is_accepting(q)) accepting.push_back(q);
    }
    return Nfa(a.state_count(), a.alphabet(), a.transitions(), a.initial(),
               std::move(accepting));
}

bool is_deterministic(const Nfa& a) {
    if (a.initial().size() != 1) return false;
    for (int q = 0; q < a.state_count(); ++q) {
        const auto& out = a.out(q);
        for (std::size_t i = 1; i < out.size(); ++i) {
            if (out[i].glyph == out[i - 1].glyph) return false;
        }
    }
    return true;
}

std::vector<bool> reachable_states(const Nfa& a) {
    std::vector<bool> seen = graph_reach(a.state_count(), successor_graph(a), a.initial());
    return seen;
}

std::vector<bool> coreachable_states(const Nfa& a) {
    std::vector<std::vector<int>> back(static_cast<std::size_t>(a.state_count()));
    for (const Transition& t : a.transitions()) {
        back[static_cast<std::size_t>(t.to)].push_back(t.from);
    }
    return graph_reach(a.state_count(), back, a.accepting());
}

std::optional<Word> shortest_path_word(const Nfa& a, const std::vector<int>& from,
                                       const std::vector<bool>& targets) {
    const int n = a.state_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int q : from) {
        if (dist[static_cast<std::size_t>(q)] == -1) {
            dist[static_cast<std::size_t>(q)] = 0;
            queue.push_back(q);
        }
    }
    int best = -1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int q = queue[i];
        if (targets[static_cast<std::size_t>(q)]) {
            best = dist[static_cast<std::size_t>(q)];
            break;
        }
        for (const Transition& t : a.out(q)) {
            if (dist[static_cast<std::size_t>(t.to)] == -1) {
                dist[static_cast<std::size_t>(t.to)] = dist[static_cast<std::size_t>(q)] + 1;
                queue.push_back(t.to);
            }
        }
    }
    if (best == -1) return std::nullopt;

    // Backward layers: can_reach[j] holds states with a length-j path into
    // the target set. Walking forward through them while always taking the
    // smallest viable glyph yields the shortlex-least witness.
    std::vector<std::vector<bool>> can_reach(static_cast<std::size_t>(best) + 1,
                                             std::vector<bool>(static_cast<std::size_t>(n)));
    can_reach[0] = targets;
    std::vector<std::vector<Transition>> in(static_cast<std::size_t>(n));
    for (const Transition& t : a.transitions()) {
        in[static_cast<std::size_t>(t.to)].push_back(t);
    }
    for (int j = 1; j <= best; ++j) {
        for (int q = 0; q < n; ++q) {
            if (!can_reach[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(q)]) {
                continue;
            }
            for (const Transition& t : in[static_cast<std::size_t>(q)]) {
                can_reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(t.from)] = true;
            }
        }
    }
    std::vector<int> current;
    for (int q : from) {
        if (can_reach[static_cast<std::size_t>(best)][static_cast<std::size_t>(q)]) {
            current.push_back(q);
        }
    }
    Word word;
    for (int step = 1; step <= best; ++step) {
        for (char g : a.alphabet().glyphs()) {
            std::vector<int> image = a.step_set(current, g);
            std::vector<int> viable;
            for (int q : image) {
                if (can_reach[static_cast<std::size_t>(best - step)]
                             [static_cast<std::size_t>(q)]) {
                    viable.push_back(q);
                }
            }
            if (!viable.empty()) {
                word.push_back(g);
                current = std::move(viable);
                break;
            }
        }
    }
    return word;
}

std::optional<int> longest_word_length(const Nfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> co = coreachable_states(a);
    std::vector<bool> alive(static_cast<std::size_t>(a.state_count()));
    for (int q = 0; q < a.state_count(); ++q) {
        alive[static_cast<std::size_t>(q)] =
            reach[static_cast<std::size_t>(q)] && co[static_cast<std::size_t>(q)];
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(a.state_count()));
    for (const Transition& t : a.transitions()) {
        if (alive[static_cast<std::size_t>(t.from)] && alive[static_cast<std::size_t>(t.to)]) {
            adj[static_cast<std::size_t>(t.from)].push_back(t.to);
        }
    }
    ComponentSplit split = tarjan(a.state_count(), adj);
    for (int q = 0; q < a.state_count(); ++q) {
        for (int next : adj[static_cast<std::size_t>(q)]) {
            if (split.component_of[static_cast<std::size_t>(next)] ==
                split.component_of[static_cast<std::size_t>(q)]) {
                throw std::logic_error("longest_word_length needs a finite language");
            }
        }
    }
    // Tarjan component ids are reverse topological, so walking states by
    // descending component id processes sources first.
    std::vector<int> order(static_cast<std::size_t>(a.state_count()));
    for (int q = 0; q < a.state_count(); ++q) order[static_cast<std::size_t>(q)] = q;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return split.component_of[static_cast<std::size_t>(x)] >
               split.component_of[static_cast<std::size_t>(y)];
    });
    std::vector<int> longest(static_cast<std::size_t>(a.state_count()), -1);
    for (int q : a.initial()) {
        if (alive[static_cast<std::size_t>(q)]) longest[static_cast<std::size_t>(q)] = 0;
    }
    for (int q : order) {
        if (longest[static_cast<std::size_t>(q)] == -1) continue;
        for (int next : adj[static_cast<std::size_t>(q)]) {
            longest[static_cast<std::size_t>(next)] =
                std::max(longest[static_cast<std::size_t>(next)],
                         longest[static_cast<std::size_t>(q)] + 1);
        }
    }
    std::optional<int> best;
    for (int q : a.accepting()) {
        if (alive[static_cast<std::size_t>(q)] && longest[static_cast<std::size_t>(q)] >= 0) {
            best = std::max(best.value_or(-1), longest[static_cast<std::size_t>(q)]);
        }
    }
    return best;
}

}  // namespace sepreg
