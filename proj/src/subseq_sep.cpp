#include "sepreg/subseq_sep.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "sepreg/nfa_ops.hpp"

namespace sepreg {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// All subsequences of one word: state i = "i letters of u consumed", jumps
// allowed. Every state accepting, so the language is the downward closure.
Nfa word_downward_nfa(const Word& u, const Alphabet& ambient) {
    int n = static_cast<int>(u.size());
    std::vector<Transition> trans;
    std::vector<int> all(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) trans.push_back({i, u[static_cast<std::size_t>(j)], j + 1});
    }
    return Nfa(n + 1, ambient, std::move(trans), {0}, all);
}

bool contains_language(const Nfa& k, const Nfa& complete_dfa) {
    // K within L(complete_dfa); requires a complete DFA so accepting-flip
    // is complementation.
    return is_empty(intersect(k, flip_accepting(complete_dfa)));
}

struct SingleSearch {
    const Nfa& k;
    const Nfa& l;
    const Alphabet& ambient;
    bool k_empty;
    int bound;
    const Deadline& deadline;
    std::size_t visited = 0;
    bool deadline_hit = false;
    std::optional<Word> found;
};

// Postorder DFS, letters in alphabet order: children are tested before
// their parent, so the first hit is a longest witness (the separator is as
// specific as possible), ties broken toward smaller glyphs.
bool single_dfs(SingleSearch& s, Word& w) {
    if (s.deadline.expired()) {
        s.deadline_hit = true;
        return true;
    }
    ++s.visited;
    Nfa greedy = greedy_embedding_dfa(w, s.ambient);
    if (!s.k_empty && !contains_language(s.k, greedy)) return false;  // prune: K not under w
    if (static_cast<int>(w.size()) < s.bound) {
        for (int i = 0; i < s.ambient.size(); ++i) {
            w.push_back(s.ambient.glyph(i));
            if (single_dfs(s, w)) return true;
            w.pop_back();
        }
    }
    if (is_empty(intersect(greedy, s.l))) {
        s.found = w;
        return true;
    }
    return false;
}

}  // namespace

Nfa greedy_embedding_dfa(const Word& w, const Alphabet& ambient) {
    for (char c : w) {
        if (!ambient.contains(c)) {
            throw std::invalid_argument("greedy_embedding_dfa: word glyph outside ambient");
        }
    }
    int n = static_cast<int>(w.size());
    std::vector<Transition> trans;
    for (int i = 0; i <= n; ++i) {
        for (int g = 0; g < ambient.size(); ++g) {
            char glyph = ambient.glyph(g);
            int to = (i < n && glyph == w[static_cast<std::size_t>(i)]) ? i + 1 : i;
            trans.push_back({i, glyph, to});
        }
    }
    return Nfa(n + 1, ambient, std::move(trans), {0}, {n});
}

std::vector<Word> minimal_accepted_words(const Nfa& a, int max_len, std::size_t enum_cap,
                                         bool* complete) {
    bool exhausted = true;
    std::vector<Word> mins;
    struct Node {
        Word w;
        std::vector<int> states;
    };
    std::deque<Node> queue;
    queue.push_back({Word{}, a.initial()});
    std::size_t dequeued = 0;
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (++dequeued > enum_cap) {
            exhausted = false;
            break;
        }
        // A word above an already-found minimal word cannot be minimal, and
        // neither can any extension of it.
        bool covered = std::any_of(mins.begin(), mins.end(), [&](const Word& m) {
            return is_subsequence(m, node.w);
        });
        if (covered) continue;
        bool accepted = std::any_of(node.states.begin(), node.states.end(),
                                    [&](int s) { return a.is_accepting(s); });
        if (accepted) {
            mins.push_back(node.w);
            continue;
        }
        if (node.states.empty()) continue;  // dead prefix
        if (static_cast<int>(node.w.size()) >= max_len) continue;
        for (int g = 0; g < a.alphabet().size(); ++g) {
            char glyph = a.alphabet().glyph(g);
            queue.push_back({node.w + glyph, a.step_set(node.states, glyph)});
        }
    }
    if (complete) *complete = exhausted;
    return mins;
}

Verdict decide_subseq_union(const Nfa& k, const Nfa& l, const SubseqOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.family = Family::SubseqUnion;
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    Nfa closure = upward_subseq_closure(k, ambient);
    Nfa product = intersect(closure, l);
    v.stats.vertices = static_cast<std::size_t>(product.state_count());
    bool sep = is_empty(product);
    v.separable = sep;
    if (sep) {
        if (opts.want_witness) {
            bool complete = true;
            auto mins = minimal_accepted_words(k, k.state_count() - 1, opts.enum_cap, &complete);
            if (!complete) v.stats.caps_hit = true;
            v.witness = SubseqClosureWitness{closure, std::move(mins), complete};
        }
    } else {
        // Concrete overlap: an L-word above some K-word.
        Word upper = *shortest_word(product);
        Word lower = *shortest_word(intersect(k, word_downward_nfa(upper, ambient)));
        v.certificate = OrderedPairEvidence{OrderedPairEvidence::Relation::Subsequence,
                                            std::move(lower), std::move(upper)};
    }
    v.stats.elapsed_ms = ms_since(t0);
    return v;
}

Verdict decide_subseq_single(const Nfa& k, const Nfa& l, const SubseqOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.family = Family::SubseqSingle;
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    bool k_empty = is_empty(k);
    // A witness must embed into every K-word, so its length is at most the
    // shortest one. With no K-word to bound it, fall back to |Q_L| and treat
    // an exhausted search as inconclusive.
    int bound;
    bool exhaustive;
    if (k_empty) {
        bound = opts.depth_cap ? *opts.depth_cap : l.state_count();
        exhaustive = false;
    } else {
        bound = static_cast<int>(shortest_word(k)->size());
        exhaustive = true;
        if (opts.depth_cap && *opts.depth_cap < bound) {
            bound = *opts.depth_cap;
            exhaustive = false;
        }
    }
    SingleSearch search{k, l, ambient, k_empty, bound, opts.deadline, 0, false, std::nullopt};
    Word w;
    single_dfs(search, w);
    v.stats.vertices = search.visited;
    if (search.found) {
        v.separable = true;
        if (opts.want_witness) v.witness = SingleWordWitness{*search.found};
    } else if (search.deadline_hit || !exhaustive) {
        v.separable = std::nullopt;
        v.stats.caps_hit = true;
    } else {
        v.separable = false;
    }
    v.stats.elapsed_ms = ms_since(t0);
    return v;
}

bool validate_subseq_single_witness(const Nfa& k, const Nfa& l, const Word& witness) {
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    for (char c : witness) {
        if (!ambient.contains(c)) return false;
    }
    Nfa greedy = greedy_embedding_dfa(witness, ambient);
    if (!is_empty(k) && !contains_language(k, greedy)) return false;
    return is_empty(intersect(greedy, l));
}

std::optional<bool> validate_subseq_union_witness(const Nfa& k, const Nfa& l,
                                                  const SubseqClosureWitness& witness,
                                                  std::size_t det_cap) {
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    if (!is_empty(intersect(witness.separator, l))) return false;
    for (std::size_t i = 0; i < witness.minimal_words.size(); ++i) {
        const Word& w = witness.minimal_words[i];
        if (!member(k, w)) return false;
        // The single-word closures must individually avoid L; pairwise
        // incomparability is what makes the list minimal.
        if (!is_empty(intersect(greedy_embedding_dfa(w, ambient), l))) return false;
        for (std::size_t j = 0; j < witness.minimal_words.size(); ++j) {
            if (i != j && is_subsequence(witness.minimal_words[i], witness.minimal_words[j])) {
                return false;
            }
        }
    }
    auto det = determinize_bounded(witness.separator, det_cap);
    if (!det) return std::nullopt;
    if (!is_empty(intersect(k, flip_accepting(*det)))) return false;
    return true;
}

}  // namespace sepreg
