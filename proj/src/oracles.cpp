#include "sepreg/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "sepreg/errors.hpp"
#include "sepreg/nfa_ops.hpp"
#include "sepreg/subseq_sep.hpp"

namespace sepreg {

namespace {

void sort_shortlex(std::vector<Word>& words) {
    std::sort(words.begin(), words.end(), shortlex_less);
}

// Interns canonical (shortlex sorted) profile sets as dense ids so the pair
// walk can store plain ints.
struct ProfilePool {
    std::map<std::vector<Word>, int> ids;
    std::vector<std::vector<Word>> sets;

    int intern(std::vector<Word> s) {
        auto [it, fresh] = ids.emplace(std::move(s), static_cast<int>(sets.size()));
        if (fresh) sets.push_back(it->first);
        return it->second;
    }
};

// Profile after reading one more glyph: every stored subsequence either
// skips the glyph or gains it as a new last symbol.
int extend_profile(ProfilePool& pool, std::map<std::pair<int, char>, int>& cache,
                   int pid, char glyph, int n) {
    auto key = std::make_pair(pid, glyph);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const std::vector<Word>& base = pool.sets[static_cast<std::size_t>(pid)];
    std::set<Word> grown(base.begin(), base.end());
    for (const Word& v : base) {
        if (static_cast<int>(v.size()) < n) grown.insert(v + glyph);
    }
    std::vector<Word> vec(grown.begin(), grown.end());
    sort_shortlex(vec);
    int id = pool.intern(std::move(vec));
    cache.emplace(key, id);
    return id;
}

// Profile ids realized at accepting states. The profile is a function of
// the word alone, so pairing plain states (not subsets) covers every run.
std::set<int> realized_profiles(const Nfa& a, int n, ProfilePool& pool,
                                std::map<std::pair<int, char>, int>& cache,
                                std::size_t pair_cap, std::size_t& pairs_seen) {
    int eps = pool.intern({Word()});
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue;
    auto visit = [&](int state, int pid) {
        if (!seen.emplace(state, pid).second) return;
        if (++pairs_seen > pair_cap) {
            throw CapExceededError("simon_level_sep: profile pair budget exhausted");
        }
        queue.emplace_back(state, pid);
    };
    for (int q : a.initial()) visit(q, eps);
    std::set<int> realized;
    while (!queue.empty()) {
        auto [q, pid] = queue.front();
        queue.pop_front();
        if (a.is_accepting(q)) realized.insert(pid);
        for (const Transition& t : a.out(q)) {
            visit(t.to, extend_profile(pool, cache, pid, t.glyph, n));
        }
    }
    return realized;
}

}  // namespace

SubseqProfile subseq_profile(const Word& w, int n) {
    if (n < 0) throw std::invalid_argument("subseq_profile: level must be >= 0");
    std::set<Word> subs{Word()};
    for (char c : w) {
        std::vector<Word> grown;
        for (const Word& v : subs) {
            if (static_cast<int>(v.size()) < n) grown.push_back(v + c);
        }
        subs.insert(grown.begin(), grown.end());
    }
    SubseqProfile p;
    p.n = n;
    p.subseqs.assign(subs.begin(), subs.end());
    sort_shortlex(p.subseqs);
    return p;
}

SimonLevelResult simon_level_sep(const Nfa& k, const Nfa& l, int n, std::size_t pair_cap) {
    if (n < 0) throw std::invalid_argument("simon_level_sep: level must be >= 0");
    ProfilePool pool;
    std::map<std::pair<int, char>, int> cache;
    std::size_t pairs_seen = 0;
    std::set<int> pk = realized_profiles(k, n, pool, cache, pair_cap, pairs_seen);
    std::set<int> pl = realized_profiles(l, n, pool, cache, pair_cap, pairs_seen);
    std::vector<int> shared;
    std::set_intersection(pk.begin(), pk.end(), pl.begin(), pl.end(),
                          std::back_inserter(shared));
    SimonLevelResult result;
    result.separable_at_n = shared.empty();
    if (result.separable_at_n) {
        std::vector<SubseqProfile> profiles;
        profiles.reserve(pk.size());
        for (int id : pk) {
            profiles.push_back({n, pool.sets[static_cast<std::size_t>(id)]});
        }
        std::sort(profiles.begin(), profiles.end(),
                  [](const SubseqProfile& a, const SubseqProfile& b) {
                      return std::lexicographical_compare(a.subseqs.begin(), a.subseqs.end(),
                                                          b.subseqs.begin(), b.subseqs.end(),
                                                          shortlex_less);
                  });
        result.witness = std::move(profiles);
    }
    return result;
}

PtOracleResult pt_oracle(const Nfa& k, const Nfa& l, int max_level, std::size_t pair_cap) {
    if (max_level < 0) throw std::invalid_argument("pt_oracle: max_level must be >= 0");
    PtOracleResult result;
    std::optional<int> finished;
    for (int n = 0; n <= max_level; ++n) {
        SimonLevelResult level;
        try {
            level = simon_level_sep(k, l, n, pair_cap);
        } catch (const CapExceededError&) {
            result.kind = PtOracleResult::Kind::Inconclusive;
            result.level = finished;
            return result;
        }
        if (level.separable_at_n) {
            result.kind = PtOracleResult::Kind::Conclusive;
            result.separable = true;
            result.level = n;
            return result;
        }
        finished = n;
    }
    result.kind = PtOracleResult::Kind::NecessaryConditionHolds;
    result.level = max_level;
    return result;
}

namespace {

constexpr std::size_t kZigzagEnumCap = 50000;

struct ZigzagSearch {
    const Nfa* k;
    const Nfa* l;
    Nfa both;
    Alphabet ambient;
    int max_word_len;
    std::map<Word, std::vector<Word>> successors;
};

// Minimal words of closure(w) cut with the side the alternation forces
// after w. A word of both languages forces the intersection and is then its
// own sole successor, so overlap chains pump in place up to max_len.
const std::vector<Word>& zigzag_successors(ZigzagSearch& s, const Word& w) {
    auto it = s.successors.find(w);
    if (it != s.successors.end()) return it->second;
    bool in_k = member(*s.k, w);
    bool in_l = member(*s.l, w);
    const Nfa& next_side = in_k && in_l ? s.both : (in_k ? *s.l : *s.k);
    Nfa up = upward_subseq_closure(word_nfa(w, s.ambient), s.ambient);
    bool complete = true;
    std::vector<Word> mins = minimal_accepted_words(intersect(up, next_side), s.max_word_len,
                                                    kZigzagEnumCap, &complete);
    return s.successors.emplace(w, std::move(mins)).first->second;
}

}  // namespace

std::optional<ZigzagCertificate> bounded_zigzag_search(const Nfa& k, const Nfa& l,
                                                       int max_len, int max_word_len) {
    if (max_len < 1 || max_word_len < 1) {
        throw std::invalid_argument("bounded_zigzag_search: bounds must be >= 1");
    }
    ZigzagSearch search{&k, &l, intersect(k, l), k.alphabet().unions(l.alphabet()),
                        max_word_len, {}};

    struct Node {
        Word word;
        int parent;  // index into the previous layer, -1 for seeds
    };
    std::vector<std::vector<Node>> layers(1);
    {
        bool complete = true;
        std::vector<Word> seeds =
            minimal_accepted_words(k, max_word_len, kZigzagEnumCap, &complete);
        std::vector<Word> seed_l =
            minimal_accepted_words(l, max_word_len, kZigzagEnumCap, &complete);
        seeds.insert(seeds.end(), seed_l.begin(), seed_l.end());
        sort_shortlex(seeds);
        std::set<Word> seen;
        for (const Word& w : seeds) {
            if (seen.insert(w).second) layers[0].push_back({w, -1});
        }
    }
    if (layers[0].empty()) return std::nullopt;

    while (static_cast<int>(layers.size()) < max_len) {
        std::vector<Node> next;
        std::set<Word> seen;
        const std::vector<Node>& prev = layers.back();
        for (int i = 0; i < static_cast<int>(prev.size()); ++i) {
            for (const Word& w : zigzag_successors(search, prev[i].word)) {
                if (seen.insert(w).second) next.push_back({w, i});
            }
        }
        if (next.empty()) break;
        layers.push_back(std::move(next));
    }

    const std::vector<Node>& last = layers.back();
    int best = 0;
    for (int i = 1; i < static_cast<int>(last.size()); ++i) {
        if (shortlex_less(last[static_cast<std::size_t>(i)].word,
                          last[static_cast<std::size_t>(best)].word)) {
            best = i;
        }
    }
    ZigzagCertificate cert;
    int idx = best;
    for (int depth = static_cast<int>(layers.size()) - 1; depth >= 0; --depth) {
        const Node& node = layers[static_cast<std::size_t>(depth)][static_cast<std::size_t>(idx)];
        cert.words.push_back(node.word);
        idx = node.parent;
    }
    std::reverse(cert.words.begin(), cert.words.end());
    cert.sides.resize(cert.words.size());
    ZigzagCertificate::Side side =
        member(k, cert.words.front()) ? ZigzagCertificate::Side::K : ZigzagCertificate::Side::L;
    for (auto& tag : cert.sides) {
        tag = side;
        side = side == ZigzagCertificate::Side::K ? ZigzagCertificate::Side::L
                                                  : ZigzagCertificate::Side::K;
    }
    return cert;
}

bool validate_zigzag(const Nfa& k, const Nfa& l, const ZigzagCertificate& cert) {
    if (cert.words.empty() || cert.words.size() != cert.sides.size()) return false;
    for (std::size_t i = 0; i < cert.words.size(); ++i) {
        const Nfa& lang = cert.sides[i] == ZigzagCertificate::Side::K ? k : l;
        if (!member(lang, cert.words[i])) return false;
        if (i > 0) {
            if (cert.sides[i] == cert.sides[i - 1]) return false;
            if (!is_subsequence(cert.words[i - 1], cert.words[i])) return false;
        }
    }
    return true;
}

LayerSeparation layer_separation_finite(const std::vector<Word>& k_words,
                                        const std::vector<Word>& l_words) {
    std::set<Word> ks(k_words.begin(), k_words.end());
    std::set<Word> ls(l_words.begin(), l_words.end());
    for (const Word& w : ks) {
        if (ls.count(w)) {
            throw OverlappingInputsError("layer separation needs disjoint sets; both hold \"" +
                                         w + "\"");
        }
    }
    auto peel = [](const std::set<Word>& xs, const std::set<Word>& ys) {
        std::vector<Word> layer;
        for (const Word& x : xs) {
            bool below = false;
            for (const Word& y : ys) {
                if (is_subsequence(x, y)) {
                    below = true;
                    break;
                }
            }
            if (!below) layer.push_back(x);
        }
        sort_shortlex(layer);
        return layer;
    };
    LayerSeparation out;
    // Every round strips something: a longest remaining word could only lie
    // below an equal-length word on the other side, i.e. an equal word,
    // which disjointness rules out.
    while (!ks.empty() || !ls.empty()) {
        std::vector<Word> from_k = peel(ks, ls);
        std::vector<Word> from_l = peel(ls, ks);
        for (const Word& w : from_k) ks.erase(w);
        for (const Word& w : from_l) ls.erase(w);
        if (!from_k.empty()) out.layers.push_back({Layer::Side::K, std::move(from_k)});
        if (!from_l.empty()) out.layers.push_back({Layer::Side::L, std::move(from_l)});
    }
    return out;
}

namespace {

// Disjoint state union; an empty part list yields the empty language.
Nfa union_nfa(const std::vector<Nfa>& parts, const Alphabet& ambient) {
    if (parts.empty()) return Nfa(1, ambient, {}, {0}, {});
    int states = 0;
    std::vector<Transition> transitions;
    std::vector<int> initial;
    std::vector<int> accepting;
    for (const Nfa& part : parts) {
        for (const Transition& t : part.transitions()) {
            transitions.push_back({t.from + states, t.glyph, t.to + states});
        }
        for (int q : part.initial()) initial.push_back(q + states);
        for (int q : part.accepting()) accepting.push_back(q + states);
        states += part.state_count();
    }
    return Nfa(states, ambient, std::move(transitions), std::move(initial),
               std::move(accepting));
}

Nfa atoms_closure(const std::vector<Word>& atoms, const Alphabet& ambient) {
    std::vector<Nfa> parts;
    parts.reserve(atoms.size());
    for (const Word& w : atoms) {
        parts.push_back(upward_subseq_closure(word_nfa(w, ambient), ambient));
    }
    return union_nfa(parts, ambient);
}

Nfa complement_of(const Nfa& a, std::size_t det_cap) {
    std::optional<Nfa> det = determinize_bounded(a, det_cap);
    if (!det) {
        throw CapExceededError("verify_layer_separation: determinization budget exhausted");
    }
    return flip_accepting(*det);
}

}  // namespace

bool verify_layer_separation(const Nfa& k, const Nfa& l, const LayerSeparation& layers,
                             std::size_t det_cap) {
    std::string atom_glyphs;
    for (const Layer& layer : layers.layers) {
        for (const Word& w : layer.atoms) atom_glyphs += w;
    }
    Alphabet ambient = k.alphabet().unions(l.alphabet());
    if (!atom_glyphs.empty()) ambient = ambient.unions(Alphabet::from_glyphs(atom_glyphs));

    std::vector<Word> earlier_atoms;
    for (const Layer& layer : layers.layers) {
        Nfa current = atoms_closure(layer.atoms, ambient);
        Nfa residual =
            earlier_atoms.empty()
                ? current
                : intersect(current, complement_of(atoms_closure(earlier_atoms, ambient), det_cap));
        bool meets_k = !is_empty(intersect(residual, k));
        bool meets_l = !is_empty(intersect(residual, l));
        if (meets_k && meets_l) return false;
        earlier_atoms.insert(earlier_atoms.end(), layer.atoms.begin(), layer.atoms.end());
    }
    Nfa missing = complement_of(atoms_closure(earlier_atoms, ambient), det_cap);
    bool covers_k = is_empty(intersect(k, missing));
    bool covers_l = is_empty(intersect(l, missing));
    return covers_k || covers_l;
}

}  // namespace sepreg
