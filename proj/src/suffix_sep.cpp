#include "sepreg/suffix_sep.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "sepreg/errors.hpp"
#include "sepreg/nfa_ops.hpp"

namespace sepreg {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Nfa widen(const Nfa& a, const Alphabet& ambient) {
    return Nfa(a.state_count(), ambient, a.transitions(), a.initial(), a.accepting());
}

// sigma* w over the ambient alphabet.
Nfa sigma_star_word(const Word& w, const Alphabet& ambient) {
    return upward_suffix_closure(word_nfa(w, ambient), ambient);
}

// All suffixes of accepted words.
Nfa suffixes_language(const Nfa& a) { return reverse(prefixes(reverse(a))); }

Nfa union_nfa(const std::vector<Nfa>& parts, const Alphabet& ambient) {
    if (parts.empty()) return Nfa(1, ambient, {}, {0}, {});
    int total = 0;
    std::vector<Transition> trans;
    std::vector<int> initial;
    std::vector<int> accepting;
    for (const Nfa& part : parts) {
        for (const Transition& t : part.transitions()) {
            trans.push_back({t.from + total, t.glyph, t.to + total});
        }
        for (int s : part.initial()) initial.push_back(s + total);
        for (int s : part.accepting()) accepting.push_back(s + total);
        total += part.state_count();
    }
    return Nfa(total, ambient, std::move(trans), std::move(initial), std::move(accepting));
}

// Shortlex enumeration of accepted words up to max_len, with a budget on
// visited word-trie nodes; `complete` reports whether it sufficed.
std::vector<Word> capped_words(const Nfa& a, int max_len, std::size_t cap, bool& complete) {
    complete = true;
    std::vector<Word> found;
    if (max_len < 0) return found;
    struct Node {
        Word w;
        std::vector<int> states;
    };
    std::deque<Node> queue;
    queue.push_back({Word{}, a.initial()});
    std::size_t visited = 0;
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (++visited > cap) {
            complete = false;
            break;
        }
        if (node.states.empty()) continue;
        bool accepted = std::any_of(node.states.begin(), node.states.end(),
                                    [&](int s) { return a.is_accepting(s); });
        if (accepted) found.push_back(node.w);
        if (static_cast<int>(node.w.size()) >= max_len) continue;
        for (int g = 0; g < a.alphabet().size(); ++g) {
            char glyph = a.alphabet().glyph(g);
            queue.push_back({node.w + glyph, a.step_set(node.states, glyph)});
        }
    }
    return found;
}

// Pumpable path through the (infinite) common-prefix automaton: stem leads
// to a cycle state, cycle returns to it, tail reaches acceptance.
UnboundedSuffixEvidence lasso_evidence(const Nfa& a) {
    int n = a.state_count();
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> co = coreachable_states(a);
    SccDecomposition dec = sccs(a);
    std::vector<int> comp_size(dec.topo_order.size(), 0);
    for (int s = 0; s < n; ++s) ++comp_size[static_cast<std::size_t>(dec.component_of[static_cast<std::size_t>(s)])];
    std::vector<bool> self_loop(static_cast<std::size_t>(n), false);
    for (const Transition& t : a.transitions()) {
        if (t.from == t.to) self_loop[static_cast<std::size_t>(t.from)] = true;
    }
    int chosen = -1;
    for (int s = 0; s < n && chosen < 0; ++s) {
        if (!reach[static_cast<std::size_t>(s)] || !co[static_cast<std::size_t>(s)]) continue;
        int comp = dec.component_of[static_cast<std::size_t>(s)];
        if (comp_size[static_cast<std::size_t>(comp)] > 1 || self_loop[static_cast<std::size_t>(s)]) chosen = s;
    }
    // Caller guarantees is_infinite(a), so a trimmed cycle state exists.
    std::vector<bool> target(static_cast<std::size_t>(n), false);
    target[static_cast<std::size_t>(chosen)] = true;
    Word stem = *shortest_path_word(a, a.initial(), target);
    Word cycle;
    for (const Transition& t : a.out(chosen)) {
        auto back = shortest_path_word(a, {t.to}, target);
        if (back) {
            cycle = Word(1, t.glyph) + *back;
            break;
        }
    }
    std::vector<bool> acc_mask(static_cast<std::size_t>(n), false);
    for (int s : a.accepting()) acc_mask[static_cast<std::size_t>(s)] = true;
    Word tail = *shortest_path_word(a, {chosen}, acc_mask);
    return UnboundedSuffixEvidence{std::move(stem), std::move(cycle), std::move(tail)};
}

// Common-prefix automaton of the reversals: its words, reversed, are
// exactly the common suffixes of K- and L-words.
Nfa common_suffix_rev_nfa(const Nfa& k, const Nfa& l) {
    return intersect(prefixes(reverse(k)), prefixes(reverse(l)));
}

bool is_prefix_family(Family f) {
    return f == Family::PrefixSingle || f == Family::PrefixUnion || f == Family::PrefixBc;
}

bool word_in(const Word& w, const Alphabet& ambient) {
    return std::all_of(w.begin(), w.end(), [&](char c) { return ambient.contains(c); });
}

void sort_shortlex(std::vector<Word>& words) {
    std::sort(words.begin(), words.end(), shortlex_less);
}

}  // namespace

Word lcs(const Nfa& k) {
    if (is_empty(k)) throw EmptyLanguageError("lcs: language is empty");
    Nfa rev = reverse(k);
    std::vector<bool> useful = coreachable_states(rev);
    std::vector<int> current;
    for (int s : rev.initial()) {
        if (useful[static_cast<std::size_t>(s)]) current.push_back(s);
    }
    Word prefix;
    for (;;) {
        bool ends = std::any_of(current.begin(), current.end(),
                                [&](int s) { return rev.is_accepting(s); });
        if (ends) break;
        char next = 0;
        int options = 0;
        std::vector<int> stepped;
        for (int g = 0; g < rev.alphabet().size() && options < 2; ++g) {
            char glyph = rev.alphabet().glyph(g);
            std::vector<int> image;
            for (int s : rev.step_set(current, glyph)) {
                if (useful[static_cast<std::size_t>(s)]) image.push_back(s);
            }
            if (!image.empty()) {
                ++options;
                next = glyph;
                stepped = std::move(image);
            }
        }
        if (options != 1) break;
        prefix.push_back(next);
        current = std::move(stepped);
    }
    return reversed(prefix);
}

Verdict decide_suffix_single(const Nfa& k, const Nfa& l, const SuffixOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.family = Family::SuffixSingle;
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    if (is_empty(k)) {
        // Any word that is a suffix of no L-word separates; hunt for one in
        // the determinized suffix language of L.
        auto det = determinize_bounded(suffixes_language(widen(l, ambient)), opts.det_cap);
        if (!det) {
            v.separable = std::nullopt;
            v.stats.caps_hit = true;
        } else {
            v.stats.vertices = static_cast<std::size_t>(det->state_count());
            auto w = shortest_word(flip_accepting(*det));
            if (w) {
                v.separable = true;
                if (opts.want_witness) v.witness = SingleWordWitness{*w};
            } else {
                v.separable = false;  // every word is an L-suffix
            }
        }
        v.stats.elapsed_ms = ms_since(t0);
        return v;
    }
    Word s = lcs(k);
    Nfa product = intersect(sigma_star_word(s, ambient), l);
    v.stats.vertices = static_cast<std::size_t>(product.state_count());
    if (is_empty(product)) {
        v.separable = true;
        if (opts.want_witness) v.witness = SingleWordWitness{s};
    } else {
        v.separable = false;
        // An L-word extending the longest common suffix of K defeats every
        // candidate separator.
        Word upper = *shortest_word(product);
        v.certificate =
            OrderedPairEvidence{OrderedPairEvidence::Relation::Suffix, std::move(s), std::move(upper)};
    }
    v.stats.elapsed_ms = ms_since(t0);
    return v;
}

Verdict decide_suffix_union(const Nfa& k, const Nfa& l, const SuffixOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.family = Family::SuffixUnion;
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    Nfa cross = intersect(upward_suffix_closure(widen(k, ambient), ambient), l);
    Nfa common = common_suffix_rev_nfa(k, l);
    v.stats.vertices =
        static_cast<std::size_t>(cross.state_count()) + static_cast<std::size_t>(common.state_count());
    bool no_suffix_pair = is_empty(cross);
    bool bounded = !is_infinite(common);
    if (no_suffix_pair && bounded) {
        v.separable = true;
        if (opts.want_witness) {
            int kstar = is_empty(common) ? 0 : *longest_word_length(common) + 1;
            // All words up to the separating length whose whole suffix class
            // misses L; their union contains K.
            bool complete = true;
            std::vector<Word> m;
            std::vector<Word> level{Word{}};
            std::size_t tested = 0;
            for (int len = 0; len <= kstar && complete; ++len) {
                if (len > 0) {
                    std::vector<Word> next;
                    for (const Word& w : level) {
                        for (int g = 0; g < ambient.size(); ++g) next.push_back(w + ambient.glyph(g));
                    }
                    level = std::move(next);
                }
                for (const Word& w : level) {
                    if (++tested > opts.enum_cap || opts.deadline.expired()) {
                        complete = false;
                        break;
                    }
                    if (is_empty(intersect(sigma_star_word(w, ambient), l))) m.push_back(w);
                }
            }
            if (!complete) v.stats.caps_hit = true;
            v.witness = SuffixUnionWitness{std::move(m), complete};
        }
    } else if (!no_suffix_pair) {
        v.separable = false;
        Word upper = *shortest_word(cross);
        std::vector<Word> sufs;
        for (std::size_t i = 0; i <= upper.size(); ++i) sufs.push_back(upper.substr(i));
        Word lower = *shortest_word(intersect(k, finite_language_nfa(sufs, ambient)));
        v.certificate = OrderedPairEvidence{OrderedPairEvidence::Relation::Suffix,
                                            std::move(lower), std::move(upper)};
    } else {
        v.separable = false;
        v.certificate = lasso_evidence(common);
    }
    v.stats.elapsed_ms = ms_since(t0);
    return v;
}

Verdict decide_suffix_bc(const Nfa& k, const Nfa& l, const SuffixOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.family = Family::SuffixBc;
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    Nfa overlap = intersect(k, l);
    if (!is_empty(overlap)) {
        // A shared word has every one of its suffixes in common, so no
        // finite suffix combination can tell the languages apart.
        v.separable = false;
        Word w = *shortest_word(overlap);
        v.certificate = OrderedPairEvidence{OrderedPairEvidence::Relation::Equal, w, w};
        v.stats.elapsed_ms = ms_since(t0);
        return v;
    }
    Nfa common = common_suffix_rev_nfa(k, l);
    v.stats.vertices = static_cast<std::size_t>(common.state_count());
    if (is_infinite(common)) {
        v.separable = false;
        v.certificate = lasso_evidence(common);
        v.stats.elapsed_ms = ms_since(t0);
        return v;
    }
    v.separable = true;
    if (opts.want_witness) {
        int kstar = is_empty(common) ? 0 : *longest_word_length(common) + 1;
        bool exact_complete = true;
        std::vector<Word> exact =
            capped_words(widen(k, ambient), kstar - 1, opts.enum_cap, exact_complete);
        bool class_complete = true;
        std::vector<Word> classes;
        for (Word& w :
             capped_words(suffixes_language(widen(k, ambient)), kstar, opts.enum_cap, class_complete)) {
            if (static_cast<int>(w.size()) == kstar) classes.push_back(std::move(w));
        }
        bool complete = exact_complete && class_complete;
        if (!complete) v.stats.caps_hit = true;
        v.witness = SuffixCellsWitness{kstar, std::move(exact), std::move(classes), complete};
    }
    v.stats.elapsed_ms = ms_since(t0);
    return v;
}

Verdict decide_prefix(Family family, const Nfa& k, const Nfa& l, const SuffixOptions& opts) {
    Nfa rk = reverse(k);
    Nfa rl = reverse(l);
    Verdict v;
    switch (family) {
        case Family::PrefixSingle:
            v = decide_suffix_single(rk, rl, opts);
            break;
        case Family::PrefixUnion:
            v = decide_suffix_union(rk, rl, opts);
            break;
        case Family::PrefixBc:
            v = decide_suffix_bc(rk, rl, opts);
            break;
        default:
            throw std::invalid_argument("decide_prefix: family must be a prefix variant");
    }
    v.family = family;
    if (v.witness) {
        if (auto* single = std::get_if<SingleWordWitness>(&*v.witness)) {
            single->word = reversed(single->word);
        } else if (auto* uni = std::get_if<SuffixUnionWitness>(&*v.witness)) {
            for (Word& w : uni->words) w = reversed(w);
            sort_shortlex(uni->words);
        } else if (auto* cells = std::get_if<SuffixCellsWitness>(&*v.witness)) {
            for (Word& w : cells->exact_words) w = reversed(w);
            for (Word& w : cells->suffix_classes) w = reversed(w);
            sort_shortlex(cells->exact_words);
            sort_shortlex(cells->suffix_classes);
        }
    }
    if (v.certificate) {
        if (auto* pair = std::get_if<OrderedPairEvidence>(&*v.certificate)) {
            pair->lower = reversed(pair->lower);
            pair->upper = reversed(pair->upper);
            if (pair->relation == OrderedPairEvidence::Relation::Suffix) {
                pair->relation = OrderedPairEvidence::Relation::Prefix;
            }
        }
        // UnboundedSuffixEvidence stays in terms of the common-prefix
        // automaton of the original languages; no mirroring needed.
    }
    return v;
}

std::optional<bool> validate_suffix_word_witness(Family family, const Nfa& k, const Nfa& l,
                                                 const Word& witness, std::size_t det_cap) {
    bool p = is_prefix_family(family);
    Nfa kk = p ? reverse(k) : k;
    Nfa ll = p ? reverse(l) : l;
    Word w = p ? reversed(witness) : witness;
    Alphabet ambient = kk.alphabet().unions(ll.alphabet());
    if (!word_in(w, ambient)) return false;
    Nfa sep = sigma_star_word(w, ambient);
    if (!is_empty(intersect(sep, ll))) return false;
    auto det = determinize_bounded(sep, det_cap);
    if (!det) return std::nullopt;
    return is_empty(intersect(kk, flip_accepting(*det)));
}

std::optional<bool> validate_suffix_union_witness(Family family, const Nfa& k, const Nfa& l,
                                                  const SuffixUnionWitness& witness,
                                                  std::size_t det_cap) {
    bool p = is_prefix_family(family);
    Nfa kk = p ? reverse(k) : k;
    Nfa ll = p ? reverse(l) : l;
    Alphabet ambient = kk.alphabet().unions(ll.alphabet());
    std::vector<Nfa> parts;
    for (const Word& word : witness.words) {
        Word w = p ? reversed(word) : word;
        if (!word_in(w, ambient)) return false;
        Nfa sep = sigma_star_word(w, ambient);
        if (!is_empty(intersect(sep, ll))) return false;
        parts.push_back(std::move(sep));
    }
    if (!witness.complete) return true;  // coverage unknowable from a cut list
    if (parts.empty()) return is_empty(kk);
    auto det = determinize_bounded(union_nfa(parts, ambient), det_cap);
    if (!det) return std::nullopt;
    return is_empty(intersect(kk, flip_accepting(*det)));
}

std::optional<bool> validate_suffix_cells_witness(Family family, const Nfa& k, const Nfa& l,
                                                  const SuffixCellsWitness& witness,
                                                  std::size_t det_cap) {
    bool p = is_prefix_family(family);
    Nfa kk = p ? reverse(k) : k;
    Nfa ll = p ? reverse(l) : l;
    Alphabet ambient = kk.alphabet().unions(ll.alphabet());
    if (witness.separating_length < 0) return false;
    std::vector<Word> exact;
    for (const Word& word : witness.exact_words) {
        Word w = p ? reversed(word) : word;
        if (static_cast<int>(w.size()) >= witness.separating_length) return false;
        if (!member(kk, w) || member(ll, w)) return false;
        exact.push_back(std::move(w));
    }
    std::vector<Nfa> parts;
    for (const Word& word : witness.suffix_classes) {
        Word w = p ? reversed(word) : word;
        if (static_cast<int>(w.size()) != witness.separating_length) return false;
        if (!word_in(w, ambient)) return false;
        Nfa cls = sigma_star_word(w, ambient);
        if (!is_empty(intersect(cls, ll))) return false;   // class leaks into L
        if (is_empty(intersect(cls, kk))) return false;    // class not realized by K
        parts.push_back(std::move(cls));
    }
    if (!witness.complete) return true;
    parts.push_back(finite_language_nfa(exact, ambient));
    auto det = determinize_bounded(union_nfa(parts, ambient), det_cap);
    if (!det) return std::nullopt;
    return is_empty(intersect(kk, flip_accepting(*det)));
}

bool validate_suffix_single_certificate(Family family, const Nfa& k, const Nfa& l,
                                        const OrderedPairEvidence& ev) {
    bool p = is_prefix_family(family);
    auto expected =
        p ? OrderedPairEvidence::Relation::Prefix : OrderedPairEvidence::Relation::Suffix;
    if (ev.relation != expected) return false;
    Nfa kk = p ? reverse(k) : k;
    Nfa ll = p ? reverse(l) : l;
    Word lo = p ? reversed(ev.lower) : ev.lower;
    Word up = p ? reversed(ev.upper) : ev.upper;
    if (is_empty(kk)) return false;
    return lo == lcs(kk) && member(ll, up) && is_suffix(lo, up);
}

bool validate_unbounded_evidence(Family family, const Nfa& k, const Nfa& l,
                                 const UnboundedSuffixEvidence& ev) {
    bool p = is_prefix_family(family);
    Nfa kk = p ? reverse(k) : k;
    Nfa ll = p ? reverse(l) : l;
    Alphabet ambient = kk.alphabet().unions(ll.alphabet());
    if (ev.cycle.empty()) return false;
    if (!word_in(ev.stem, ambient) || !word_in(ev.cycle, ambient) || !word_in(ev.tail, ambient)) {
        return false;
    }
    // Pump a few times: each unrolling must stay a common suffix (of the
    // suffix-world languages), so suffix lengths grow without bound.
    Word u = ev.stem;
    for (int rep = 0; rep < 4; ++rep) {
        Word s = reversed(u + ev.tail);
        if (is_empty(intersect(sigma_star_word(s, ambient), kk))) return false;
        if (is_empty(intersect(sigma_star_word(s, ambient), ll))) return false;
        u += ev.cycle;
    }
    return true;
}

}  // namespace sepreg
