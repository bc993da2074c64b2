#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "sepreg/errors.hpp"
#include "sepreg/nfa_ops.hpp"
#include "sepreg/oracles.hpp"
#include "sepreg/pt_sep.hpp"
#include "sepreg/regex.hpp"
#include "testutil.hpp"

using namespace sepreg;

namespace {

// Position-subset restatement of "subsequence", independent of the library's
// incremental construction.
std::set<Word> mask_subseqs(const Word& w, int n) {
    std::set<Word> out;
    int m = static_cast<int>(w.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Word v;
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i)) v += w[static_cast<std::size_t>(i)];
        }
        if (static_cast<int>(v.size()) <= n) out.insert(v);
    }
    return out;
}

bool witness_holds(const std::vector<SubseqProfile>& witness, const SubseqProfile& p) {
    return std::find(witness.begin(), witness.end(), p) != witness.end();
}

}  // namespace

TEST_CASE("subsequence profiles on pinned words") {
    CHECK(subseq_profile("ab", 1).subseqs == std::vector<Word>{"", "a", "b"});
    CHECK(subseq_profile("ab", 2).subseqs == std::vector<Word>{"", "a", "b", "ab"});
    CHECK(subseq_profile("aba", 2).subseqs ==
          std::vector<Word>{"", "a", "b", "aa", "ab", "ba"});
    CHECK(subseq_profile("abc", 0).subseqs == std::vector<Word>{""});
    CHECK(subseq_profile("", 3).subseqs == std::vector<Word>{""});
    CHECK_THROWS_AS(subseq_profile("a", -1), std::invalid_argument);
}

TEST_CASE("profiles agree with position-subset enumeration") {
    std::vector<Word> pool = testutil::all_words("ab", 5);
    testutil::Rng rng(8642);
    for (int i = 0; i < 40; ++i) {
        Word w;
        int len = 6 + rng.below(2);
        for (int j = 0; j < len; ++j) w += "abc"[rng.below(3)];
        pool.push_back(w);
    }
    for (const Word& w : pool) {
        for (int n = 0; n <= 3; ++n) {
            SubseqProfile p = subseq_profile(w, n);
            CHECK(p.n == n);
            std::set<Word> got(p.subseqs.begin(), p.subseqs.end());
            CHECK(got.size() == p.subseqs.size());
            CHECK(got == mask_subseqs(w, n));
            CHECK(got.count(""));
            CHECK(std::is_sorted(p.subseqs.begin(), p.subseqs.end(), shortlex_less));
            for (const Word& v : p.subseqs) {
                for (std::size_t cut = 0; cut < v.size(); ++cut) {
                    Word shorter = v.substr(0, cut) + v.substr(cut + 1);
                    CHECK(got.count(shorter));
                }
            }
        }
    }
}

TEST_CASE("level test on the counting pair") {
    Nfa k = compile_regex("a+aaa");
    Nfa l = compile_regex("aa+aaaa");
    for (int n = 0; n <= 3; ++n) {
        SimonLevelResult r = simon_level_sep(k, l, n);
        CHECK_FALSE(r.separable_at_n);
        CHECK_FALSE(r.witness.has_value());
    }
    SimonLevelResult r4 = simon_level_sep(k, l, 4);
    CHECK(r4.separable_at_n);
    REQUIRE(r4.witness.has_value());
    REQUIRE(r4.witness->size() == 2);
    CHECK((*r4.witness)[0].subseqs == std::vector<Word>{"", "a"});
    CHECK((*r4.witness)[1].subseqs == std::vector<Word>{"", "a", "aa", "aaa"});
}

TEST_CASE("level test on the alternating pump pair") {
    Nfa k = compile_regex("a(abab)*c(acac)*");
    Nfa l = compile_regex("bab(abab)*cac(acac)*");
    for (int n = 0; n <= 2; ++n) {
        CHECK_FALSE(simon_level_sep(k, l, n).separable_at_n);
    }
    SUBCASE("an empty left language is separable at every level") {
        Nfa none = compile_regex("#");
        SimonLevelResult r = simon_level_sep(none, l, 3);
        CHECK(r.separable_at_n);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->empty());
    }
}

TEST_CASE("level witnesses carry exactly the realized left profiles") {
    testutil::Rng rng(90125);
    const std::string glyphs = "ab";
    int separable_seen = 0;
    for (int round = 0; round < 80; ++round) {
        std::set<Word> kw;
        std::set<Word> lw;
        int nk = 1 + rng.below(4);
        int nl = 1 + rng.below(4);
        for (int j = 0; j < nk; ++j) {
            Word w;
            int len = rng.below(5);
            for (int c = 0; c < len; ++c) w += glyphs[static_cast<std::size_t>(rng.below(2))];
            kw.insert(w);
        }
        for (int j = 0; j < nl; ++j) {
            Word w;
            int len = rng.below(5);
            for (int c = 0; c < len; ++c) w += glyphs[static_cast<std::size_t>(rng.below(2))];
            if (!kw.count(w)) lw.insert(w);
        }
        Alphabet alpha = Alphabet::from_glyphs(glyphs);
        Nfa k = finite_language_nfa({kw.begin(), kw.end()}, alpha);
        Nfa l = finite_language_nfa({lw.begin(), lw.end()}, alpha);
        for (int n = 0; n <= 3; ++n) {
            SimonLevelResult r = simon_level_sep(k, l, n);
            if (!r.separable_at_n) continue;
            ++separable_seen;
            // The witness must be the profile set of K, no more and no less,
            // and it must miss every profile of L.
            std::set<std::vector<Word>> witnessed;
            for (const SubseqProfile& p : *r.witness) {
                CHECK(p.n == n);
                witnessed.insert(p.subseqs);
            }
            std::set<std::vector<Word>> direct;
            for (const Word& w : kw) direct.insert(subseq_profile(w, n).subseqs);
            CHECK(witnessed == direct);
            for (const Word& w : lw) {
                CHECK_FALSE(witness_holds(*r.witness, subseq_profile(w, n)));
            }
        }
    }
    CHECK(separable_seen > 30);
}

TEST_CASE("level test is monotone and symmetric") {
    testutil::Rng rng(24601);
    int informative = 0;
    for (int round = 0; round < 60; ++round) {
        Nfa k = regex_to_nfa(*testutil::random_regex(rng, "ab", 5));
        Nfa l = regex_to_nfa(*testutil::random_regex(rng, "ab", 5));
        bool previous = false;
        for (int n = 0; n <= 3; ++n) {
            SimonLevelResult r = simon_level_sep(k, l, n);
            SimonLevelResult mirrored = simon_level_sep(l, k, n);
            CHECK(r.separable_at_n == mirrored.separable_at_n);
            if (previous) CHECK(r.separable_at_n);
            previous = r.separable_at_n;
            if (r.separable_at_n) ++informative;
        }
    }
    CHECK(informative > 20);
}

TEST_CASE("level oracle on named pairs") {
    SUBCASE("counting pair needs level four") {
        PtOracleResult r = pt_oracle(compile_regex("a+aaa"), compile_regex("aa+aaaa"), 4);
        CHECK(r.kind == PtOracleResult::Kind::Conclusive);
        CHECK(r.separable == std::optional<bool>(true));
        CHECK(r.level == std::optional<int>(4));
    }
    SUBCASE("distinct letters split at level one") {
        PtOracleResult r = pt_oracle(compile_regex("a"), compile_regex("b"), 4);
        CHECK(r.kind == PtOracleResult::Kind::Conclusive);
        CHECK(r.level == std::optional<int>(1));
    }
    SUBCASE("alternating pump pair defeats every checked level") {
        PtOracleResult r = pt_oracle(compile_regex("a(abab)*c(acac)*"),
                                     compile_regex("bab(abab)*cac(acac)*"), 3);
        CHECK(r.kind == PtOracleResult::Kind::NecessaryConditionHolds);
        CHECK_FALSE(r.separable.has_value());
        CHECK(r.level == std::optional<int>(3));
    }
    SUBCASE("two empty languages split at level zero") {
        PtOracleResult r = pt_oracle(compile_regex("#"), compile_regex("#"), 0);
        CHECK(r.kind == PtOracleResult::Kind::Conclusive);
        CHECK(r.separable == std::optional<bool>(true));
        CHECK(r.level == std::optional<int>(0));
    }
    SUBCASE("a starved pair budget is inconclusive") {
        PtOracleResult r = pt_oracle(compile_regex("a(abab)*c(acac)*"),
                                     compile_regex("bab(abab)*cac(acac)*"), 4, 1);
        CHECK(r.kind == PtOracleResult::Kind::Inconclusive);
        CHECK_FALSE(r.separable.has_value());
        CHECK_FALSE(r.level.has_value());
    }
}

TEST_CASE("level oracle never contradicts the synchronization decider") {
    testutil::Rng rng(5150);
    int conclusive = 0;
    for (int round = 0; round < 120; ++round) {
        Nfa a = testutil::random_nfa(rng, 4, "ab");
        Nfa b = testutil::random_nfa(rng, 4, "ab");
        Verdict exact = decide_pt(a, b);
        REQUIRE(exact.separable.has_value());
        PtOracleResult oracle = pt_oracle(a, b, 3);
        if (oracle.kind == PtOracleResult::Kind::Conclusive) {
            ++conclusive;
            CHECK(*exact.separable);
        }
        if (!*exact.separable) {
            CHECK(oracle.kind == PtOracleResult::Kind::NecessaryConditionHolds);
        }
    }
    CHECK(conclusive > 25);
}

TEST_CASE("zigzag search on the alternating pump pair") {
    Nfa k = compile_regex("a(abab)*c(acac)*");
    Nfa l = compile_regex("bab(abab)*cac(acac)*");
    auto cert = bounded_zigzag_search(k, l, 6, 30);
    REQUIRE(cert.has_value());
    CHECK(cert->words.size() == 6);
    CHECK(validate_zigzag(k, l, *cert));
    CHECK(std::find(cert->words.begin(), cert->words.end(), Word("babcac")) !=
          cert->words.end());
    for (std::size_t i = 1; i < cert->words.size(); ++i) {
        CHECK(cert->words[i - 1].size() < cert->words[i].size());
    }
}

TEST_CASE("zigzag search on small named pairs") {
    SUBCASE("counting pair chains through all four words") {
        Nfa k = compile_regex("a+aaa");
        Nfa l = compile_regex("aa+aaaa");
        auto cert = bounded_zigzag_search(k, l, 10, 4);
        REQUIRE(cert.has_value());
        CHECK(cert->words == std::vector<Word>{"a", "aa", "aaa", "aaaa"});
        CHECK(cert->sides ==
              std::vector<ZigzagCertificate::Side>{
                  ZigzagCertificate::Side::K, ZigzagCertificate::Side::L,
                  ZigzagCertificate::Side::K, ZigzagCertificate::Side::L});
        CHECK(validate_zigzag(k, l, *cert));
    }
    SUBCASE("unrelated letters stop at length one") {
        Nfa k = compile_regex("a");
        Nfa l = compile_regex("b");
        auto cert = bounded_zigzag_search(k, l, 8, 8);
        REQUIRE(cert.has_value());
        CHECK(cert->words == std::vector<Word>{"a"});
        CHECK(cert->sides == std::vector<ZigzagCertificate::Side>{ZigzagCertificate::Side::K});
        CHECK(validate_zigzag(k, l, *cert));
    }
    SUBCASE("two empty languages have no chain at all") {
        CHECK_FALSE(bounded_zigzag_search(compile_regex("#"), compile_regex("#"), 4, 4)
                        .has_value());
    }
    SUBCASE("one empty side leaves a lone seed") {
        Nfa k = compile_regex("#");
        Nfa l = compile_regex("a*");
        auto cert = bounded_zigzag_search(k, l, 4, 4);
        REQUIRE(cert.has_value());
        CHECK(cert->words == std::vector<Word>{""});
        CHECK(cert->sides == std::vector<ZigzagCertificate::Side>{ZigzagCertificate::Side::L});
        CHECK(validate_zigzag(k, l, *cert));
    }
    SUBCASE("overlapping languages pump a shared word forever") {
        Nfa k = compile_regex("a*");
        Nfa l = compile_regex("a");
        auto cert = bounded_zigzag_search(k, l, 5, 3);
        REQUIRE(cert.has_value());
        CHECK(cert->words.size() == 5);
        CHECK(validate_zigzag(k, l, *cert));
    }
    SUBCASE("bounds below one are rejected") {
        Nfa k = compile_regex("a");
        CHECK_THROWS_AS(bounded_zigzag_search(k, k, 0, 4), std::invalid_argument);
        CHECK_THROWS_AS(bounded_zigzag_search(k, k, 4, 0), std::invalid_argument);
    }
}

TEST_CASE("zigzag certificates self-validate on random pairs") {
    testutil::Rng rng(1999);
    int produced = 0;
    for (int round = 0; round < 80; ++round) {
        Nfa k = regex_to_nfa(*testutil::random_regex(rng, "ab", 5));
        Nfa l = regex_to_nfa(*testutil::random_regex(rng, "ab", 5));
        auto cert = bounded_zigzag_search(k, l, 5, 8);
        if (!cert) {
            CHECK(is_empty(k));
            CHECK(is_empty(l));
            continue;
        }
        ++produced;
        CHECK(validate_zigzag(k, l, *cert));
        if (cert->words.size() >= 2) {
            ZigzagCertificate broken = *cert;
            broken.sides[1] = broken.sides[0];
            CHECK_FALSE(validate_zigzag(k, l, broken));
        }
    }
    CHECK(produced > 60);
}

TEST_CASE("zigzag validator rejects corrupted chains") {
    Nfa k = compile_regex("a+aaa");
    Nfa l = compile_regex("aa+aaaa");
    using Side = ZigzagCertificate::Side;
    ZigzagCertificate good{{"a", "aa", "aaa"}, {Side::K, Side::L, Side::K}};
    REQUIRE(validate_zigzag(k, l, good));

    ZigzagCertificate empty_chain;
    CHECK_FALSE(validate_zigzag(k, l, empty_chain));

    ZigzagCertificate lopsided = good;
    lopsided.sides.pop_back();
    CHECK_FALSE(validate_zigzag(k, l, lopsided));

    ZigzagCertificate stuck = good;
    stuck.sides[1] = Side::K;
    CHECK_FALSE(validate_zigzag(k, l, stuck));

    ZigzagCertificate alien = good;
    alien.words[1] = "aaaa";  // no longer embeds into "aaa"
    CHECK_FALSE(validate_zigzag(k, l, alien));

    ZigzagCertificate misfiled = good;
    misfiled.words[0] = "aa";  // left side does not hold "aa"
    CHECK_FALSE(validate_zigzag(k, l, misfiled));
}

TEST_CASE("finite layer construction on the ladder pair") {
    LayerSeparation sep = layer_separation_finite({"a", "aaa"}, {"aa", "aaaa"});
    using Side = Layer::Side;
    REQUIRE(sep.layers.size() == 4);
    CHECK(sep.layers[0] == Layer{Side::L, {"aaaa"}});
    CHECK(sep.layers[1] == Layer{Side::K, {"aaa"}});
    CHECK(sep.layers[2] == Layer{Side::L, {"aa"}});
    CHECK(sep.layers[3] == Layer{Side::K, {"a"}});
    CHECK(verify_layer_separation(compile_regex("a+aaa"), compile_regex("aa+aaaa"), sep));
}

TEST_CASE("finite layer construction edge shapes") {
    using Side = Layer::Side;
    SUBCASE("lone language collapses to one layer") {
        LayerSeparation sep = layer_separation_finite({"a"}, {});
        REQUIRE(sep.layers.size() == 1);
        CHECK(sep.layers[0] == Layer{Side::K, {"a"}});
        CHECK(verify_layer_separation(compile_regex("a"), compile_regex("#"), sep));
    }
    SUBCASE("shared words are refused") {
        CHECK_THROWS_AS(layer_separation_finite({"a"}, {"a"}), OverlappingInputsError);
        CHECK_THROWS_AS(layer_separation_finite({"", "ab"}, {"ba", ""}),
                        OverlappingInputsError);
    }
    SUBCASE("two empty inputs make zero layers") {
        CHECK(layer_separation_finite({}, {}).layers.empty());
    }
    SUBCASE("incomparable sides drain in one round") {
        LayerSeparation sep = layer_separation_finite({"ab", "ba"}, {"aa"});
        REQUIRE(sep.layers.size() == 2);
        CHECK(sep.layers[0] == Layer{Side::K, {"ab", "ba"}});
        CHECK(sep.layers[1] == Layer{Side::L, {"aa"}});
        CHECK(verify_layer_separation(compile_regex("ab+ba"), compile_regex("aa"), sep));
    }
    SUBCASE("the empty word sits in the last layer") {
        LayerSeparation sep = layer_separation_finite({""}, {"a"});
        REQUIRE(sep.layers.size() == 2);
        CHECK(sep.layers[0] == Layer{Side::L, {"a"}});
        CHECK(sep.layers[1] == Layer{Side::K, {""}});
        CHECK(verify_layer_separation(compile_regex("@"), compile_regex("a"), sep));
    }
}

TEST_CASE("layer outputs verify on random finite pairs") {
    testutil::Rng rng(140863);
    const std::string glyphs = "ab";
    Alphabet alpha = Alphabet::from_glyphs(glyphs);
    for (int round = 0; round < 60; ++round) {
        std::set<Word> kw;
        std::set<Word> lw;
        int nk = 1 + rng.below(5);
        int nl = rng.below(5);
        for (int j = 0; j < nk; ++j) {
            Word w;
            int len = rng.below(5);
            for (int c = 0; c < len; ++c) w += glyphs[static_cast<std::size_t>(rng.below(2))];
            kw.insert(w);
        }
        for (int j = 0; j < nl; ++j) {
            Word w;
            int len = rng.below(5);
            for (int c = 0; c < len; ++c) w += glyphs[static_cast<std::size_t>(rng.below(2))];
            if (!kw.count(w)) lw.insert(w);
        }
        LayerSeparation sep =
            layer_separation_finite({kw.begin(), kw.end()}, {lw.begin(), lw.end()});
        // Atoms partition the inputs by side.
        std::set<Word> seen_k;
        std::set<Word> seen_l;
        for (const Layer& layer : sep.layers) {
            CHECK(!layer.atoms.empty());
            auto& sink = layer.side == Layer::Side::K ? seen_k : seen_l;
            for (const Word& w : layer.atoms) CHECK(sink.insert(w).second);
        }
        CHECK(seen_k == kw);
        CHECK(seen_l == lw);
        Nfa k = finite_language_nfa({kw.begin(), kw.end()}, alpha);
        Nfa l = finite_language_nfa({lw.begin(), lw.end()}, alpha);
        CHECK(verify_layer_separation(k, l, sep));
    }
}

TEST_CASE("layer verification rejects broken separations") {
    using Side = Layer::Side;
    Nfa k = compile_regex("a+aaa");
    Nfa l = compile_regex("aa+aaaa");
    LayerSeparation good = layer_separation_finite({"a", "aaa"}, {"aa", "aaaa"});
    REQUIRE(verify_layer_separation(k, l, good));

    SUBCASE("one catch-all layer touches both languages") {
        LayerSeparation blanket{{Layer{Side::Neither, {""}}}};
        CHECK_FALSE(verify_layer_separation(compile_regex("a"), compile_regex("b"), blanket));
    }
    SUBCASE("no layers cover nothing") {
        CHECK_FALSE(verify_layer_separation(compile_regex("a"), compile_regex("b"),
                                            LayerSeparation{}));
    }
    SUBCASE("reversing the ladder breaks the first residual") {
        LayerSeparation reversed = good;
        std::reverse(reversed.layers.begin(), reversed.layers.end());
        CHECK_FALSE(verify_layer_separation(k, l, reversed));
    }
    SUBCASE("removing a middle rung leaks both languages into one residual") {
        LayerSeparation gap = good;
        gap.layers.erase(gap.layers.begin() + 2);
        CHECK_FALSE(verify_layer_separation(k, l, gap));
    }
    SUBCASE("a starved determinization budget raises the cap error") {
        CHECK_THROWS_AS(verify_layer_separation(k, l, good, 1), CapExceededError);
    }
}
