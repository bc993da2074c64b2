#pragma once

// Shared helpers for the test suites: deterministic generators and small
// brute-force oracles that restate definitions directly, independent of the
// library's algorithms.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sepreg/alphabet.hpp"
#include "sepreg/nfa.hpp"
#include "sepreg/regex.hpp"

namespace testutil {

using sepreg::Nfa;
using sepreg::RegexAst;
using sepreg::Transition;
using sepreg::Word;

// Every word over `glyphs` of length <= max_len, shortlex order.
inline std::vector<Word> all_words(const std::string& glyphs, int max_len) {
    std::vector<Word> result{""};
    std::vector<Word> level{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (char g : glyphs) next.push_back(w + g);
        }
        result.insert(result.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return result;
}

// Definition-level regex matcher: interval recursion on the parse tree.
inline bool regex_matches(const RegexAst& ast, const Word& w) {
    using Kind = RegexAst::Kind;
    // key: (node, from, to)
    std::map<std::tuple<const RegexAst*, std::size_t, std::size_t>, bool> memo;
    auto match = [&](auto&& self, const RegexAst& node, std::size_t from,
                     std::size_t to) -> bool {
        auto key = std::make_tuple(&node, from, to);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        switch (node.kind) {
            case Kind::Empty:
                ok = false;
                break;
            case Kind::Epsilon:
                ok = from == to;
                break;
            case Kind::Symbol:
                ok = to == from + 1 && w[from] == node.glyph;
                break;
            case Kind::Union:
                ok = self(self, *node.left, from, to) || self(self, *node.right, from, to);
                break;
            case Kind::Concat:
                for (std::size_t mid = from; mid <= to && !ok; ++mid) {
                    ok = self(self, *node.left, from, mid) && self(self, *node.right, mid, to);
                }
                break;
            case Kind::Star:
                if (from == to) {
                    ok = true;
                } else {
                    for (std::size_t mid = from + 1; mid <= to && !ok; ++mid) {
                        ok = self(self, *node.left, from, mid) && self(self, node, mid, to);
                    }
                }
                break;
        }
        memo[key] = ok;
        return ok;
    };
    return match(match, ast, 0, w.size());
}

// Language sample by brute membership, for cross-checking enumeration.
inline std::vector<Word> language_sample(const Nfa& a, const std::string& glyphs,
                                         int max_len) {
    std::vector<Word> result;
    for (const Word& w : all_words(glyphs, max_len)) {
        if (member(a, w)) result.push_back(w);
    }
    return result;
}

// All subsequences of w of length <= n, by direct position-subset reasoning.
inline std::set<Word> brute_subseqs(const Word& w, int n) {
    std::set<Word> current{""};
    for (char c : w) {
        std::set<Word> next = current;
        for (const Word& v : current) {
            if (static_cast<int>(v.size()) < n) next.insert(v + c);
        }
        current = std::move(next);
    }
    return current;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    int below(int n) { return static_cast<int>(gen() % static_cast<unsigned>(n)); }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(gen) < p;
    }
};

inline Nfa random_nfa(Rng& rng, int max_states, const std::string& glyphs,
                      double edge_prob = 0.22) {
    int n = 1 + rng.below(max_states);
    std::vector<Transition> transitions;
    for (int q = 0; q < n; ++q) {
        for (char g : glyphs) {
            for (int t = 0; t < n; ++t) {
                if (rng.chance(edge_prob)) transitions.push_back({q, g, t});
            }
        }
    }
    std::vector<int> initial{0};
    for (int q = 1; q < n; ++q) {
        if (rng.chance(0.15)) initial.push_back(q);
    }
    std::vector<int> accepting;
    for (int q = 0; q < n; ++q) {
        if (rng.chance(0.4)) accepting.push_back(q);
    }
    return Nfa(n, sepreg::Alphabet::from_glyphs(glyphs), std::move(transitions),
               std::move(initial), std::move(accepting));
}

inline std::unique_ptr<RegexAst> random_regex(Rng& rng, const std::string& glyphs,
                                              int budget) {
    auto node = std::make_unique<RegexAst>();
    if (budget <= 1) {
        if (rng.chance(0.15)) {
            node->kind = RegexAst::Kind::Epsilon;
        } else {
            node->kind = RegexAst::Kind::Symbol;
            node->glyph = glyphs[static_cast<std::size_t>(rng.below(
                static_cast<int>(glyphs.size())))];
        }
        return node;
    }
    switch (rng.below(3)) {
        case 0: {
            node->kind = RegexAst::Kind::Union;
            int lhs = 1 + rng.below(budget - 1);
            node->left = random_regex(rng, glyphs, lhs);
            node->right = random_regex(rng, glyphs, budget - lhs);
            break;
        }
        case 1: {
            node->kind = RegexAst::Kind::Concat;
            int lhs = 1 + rng.below(budget - 1);
            node->left = random_regex(rng, glyphs, lhs);
            node->right = random_regex(rng, glyphs, budget - lhs);
            break;
        }
        default:
            node->kind = RegexAst::Kind::Star;
            node->left = random_regex(rng, glyphs, budget - 1);
            break;
    }
    return node;
}

}  // namespace testutil
