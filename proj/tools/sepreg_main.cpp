// sepreg: decide separability of two regular languages, run the brute
// oracles, build finite layer separations and export the synchronization
// graph. Exit codes: 0 verdict produced (separable or not), 2 usage error,
// 3 input parse error, 4 inconclusive because a cap or timeout was hit.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepreg/errors.hpp"
#include "sepreg/nfa.hpp"
#include "sepreg/nfa_io.hpp"
#include "sepreg/nfa_ops.hpp"
#include "sepreg/oracles.hpp"
#include "sepreg/pt_sep.hpp"
#include "sepreg/regex.hpp"
#include "sepreg/subseq_sep.hpp"
#include "sepreg/suffix_sep.hpp"
#include "sepreg/verdict.hpp"

using nlohmann::ordered_json;
using namespace sepreg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCapped = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Budget knobs. Flags override SEPREG_DEFAULT_CAPS, which overrides these
// built-ins.
struct Caps {
    int depth_cap = 0;  // 0 = intrinsic bound (|shortest word of K|)
    int max_level = 4;
    int max_len = 8;
    int max_word_len = 24;
    long long det_cap = 4096;
    long long enum_cap = 20000;
    long long pair_cap = 200000;
    long long timeout_ms = 0;  // 0 = none
};

long long parse_cap_value(const std::string& key, const std::string& text) {
    long long value = 0;
    try {
        std::size_t used = 0;
        value = std::stoll(text, &used);
        if (used != text.size() || text.empty()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw UsageError("SEPREG_DEFAULT_CAPS value for '" + key + "' is not an integer");
    }
    return value;
}

void apply_env_caps(Caps& caps) {
    const char* raw = std::getenv("SEPREG_DEFAULT_CAPS");
    if (!raw) return;
    std::string text(raw);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) {
            if (end == text.size()) break;
            continue;
        }
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw UsageError("SEPREG_DEFAULT_CAPS entry '" + item + "' is not key=value");
        }
        std::string key = item.substr(0, eq);
        long long value = parse_cap_value(key, item.substr(eq + 1));
        bool positive = value > 0;
        if (key == "depth-cap" && positive) caps.depth_cap = static_cast<int>(value);
        else if (key == "max-level" && value >= 0) caps.max_level = static_cast<int>(value);
        else if (key == "max-len" && positive) caps.max_len = static_cast<int>(value);
        else if (key == "max-word-len" && positive) caps.max_word_len = static_cast<int>(value);
        else if (key == "det-cap" && positive) caps.det_cap = value;
        else if (key == "enum-cap" && positive) caps.enum_cap = value;
        else if (key == "pair-cap" && positive) caps.pair_cap = value;
        else if (key == "timeout-ms" && positive) caps.timeout_ms = value;
        else if (key == "depth-cap" || key == "max-len" || key == "max-word-len" ||
                 key == "det-cap" || key == "enum-cap" || key == "pair-cap" ||
                 key == "timeout-ms" || key == "max-level") {
            throw UsageError("SEPREG_DEFAULT_CAPS value for '" + key + "' is out of range");
        } else {
            throw UsageError("SEPREG_DEFAULT_CAPS has unknown key '" + key + "'");
        }
        if (end == text.size()) break;
    }
}

Nfa load_language(const std::string& source) {
    if (source.rfind("re:", 0) == 0) return compile_regex(source.substr(3));
    if (source.rfind("file:", 0) == 0) return parse_automaton_file(source.substr(5));
    throw UsageError("language source must start with 're:' or 'file:', got '" + source + "'");
}

Nfa widen(const Nfa& a, const Alphabet& ambient) {
    if (a.alphabet() == ambient) return a;
    return Nfa(a.state_count(), ambient, a.transitions(), a.initial(), a.accepting());
}

struct LanguagePair {
    Nfa k;
    Nfa l;
};

LanguagePair load_pair(const std::string& k_src, const std::string& l_src,
                       const std::string& alphabet_override) {
    Nfa k = load_language(k_src);
    Nfa l = load_language(l_src);
    if (!alphabet_override.empty()) {
        Alphabet extra = Alphabet::from_glyphs(alphabet_override);
        k = widen(k, k.alphabet().unions(extra));
        l = widen(l, l.alphabet().unions(extra));
    }
    return {std::move(k), std::move(l)};
}

std::string quoted(const Word& w) { return "\"" + w + "\""; }

std::string joined(const std::vector<Word>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ", ";
        out += quoted(words[i]);
    }
    return out;
}

// --- JSON rendering ---

ordered_json witness_json(const Witness& w) {
    ordered_json out;
    if (const auto* single = std::get_if<SingleWordWitness>(&w)) {
        out["kind"] = "single-word";
        out["word"] = single->word;
    } else if (const auto* closure = std::get_if<SubseqClosureWitness>(&w)) {
        out["kind"] = "subseq-closure";
        out["separator_states"] = closure->separator.state_count();
        out["minimal_words"] = closure->minimal_words;
        out["complete"] = closure->minimal_words_complete;
    } else if (const auto* uni = std::get_if<SuffixUnionWitness>(&w)) {
        out["kind"] = "suffix-union";
        out["words"] = uni->words;
        out["complete"] = uni->complete;
    } else if (const auto* cells = std::get_if<SuffixCellsWitness>(&w)) {
        out["kind"] = "suffix-cells";
        out["separating_length"] = cells->separating_length;
        out["exact_words"] = cells->exact_words;
        out["suffix_classes"] = cells->suffix_classes;
        out["complete"] = cells->complete;
    } else if (const auto* profiles = std::get_if<ProfileWitness>(&w)) {
        out["kind"] = "profiles";
        out["level"] = profiles->level;
        out["profiles"] = profiles->profiles;
    }
    return out;
}

std::string relation_name(OrderedPairEvidence::Relation r) {
    switch (r) {
        case OrderedPairEvidence::Relation::Subsequence: return "subsequence";
        case OrderedPairEvidence::Relation::Suffix: return "suffix";
        case OrderedPairEvidence::Relation::Prefix: return "prefix";
        case OrderedPairEvidence::Relation::Equal: return "equal";
    }
    return "?";
}

ordered_json certificate_json(const Certificate& c) {
    ordered_json out;
    if (const auto* path = std::get_if<SynchPath>(&c)) {
        out["kind"] = "synch-path";
        ordered_json vertices = ordered_json::array();
        for (const PairVertex& v : path->vertices) {
            vertices.push_back(ordered_json::array({v.state_a, v.state_b}));
        }
        out["vertices"] = std::move(vertices);
        ordered_json steps = ordered_json::array();
        for (const SynchStep& s : path->steps) {
            ordered_json step;
            if (s.kind == SynchStep::Kind::Symbol) {
                step["kind"] = "symbol";
                step["glyph"] = std::string(1, s.glyph);
            } else {
                step["kind"] = "cycle";
                step["via"] = ordered_json::array({s.via.state_a, s.via.state_b});
                step["alphabet"] = std::string(s.sigma0.begin(), s.sigma0.end());
            }
            steps.push_back(std::move(step));
        }
        out["steps"] = std::move(steps);
    } else if (const auto* pair = std::get_if<OrderedPairEvidence>(&c)) {
        out["kind"] = "ordered-pair";
        out["relation"] = relation_name(pair->relation);
        out["lower"] = pair->lower;
        out["upper"] = pair->upper;
    } else if (const auto* pump = std::get_if<UnboundedSuffixEvidence>(&c)) {
        out["kind"] = "unbounded-suffix";
        out["stem"] = pump->stem;
        out["cycle"] = pump->cycle;
        out["tail"] = pump->tail;
    }
    return out;
}

ordered_json stats_json(const DecideStats& s) {
    ordered_json out;
    out["elapsed_ms"] = s.elapsed_ms;
    out["vertices"] = s.vertices;
    out["caps_hit"] = s.caps_hit;
    return out;
}

// --- text rendering ---

std::string witness_text(const Witness& w) {
    if (const auto* single = std::get_if<SingleWordWitness>(&w)) {
        return "word " + quoted(single->word);
    }
    if (const auto* closure = std::get_if<SubseqClosureWitness>(&w)) {
        return "closure separator with " + std::to_string(closure->separator.state_count()) +
               " states; minimal words: " + joined(closure->minimal_words) +
               (closure->minimal_words_complete ? " (complete)" : " (truncated)");
    }
    if (const auto* uni = std::get_if<SuffixUnionWitness>(&w)) {
        return "suffix cells of: " + joined(uni->words) +
               (uni->complete ? " (complete)" : " (truncated)");
    }
    if (const auto* cells = std::get_if<SuffixCellsWitness>(&w)) {
        return "boolean cells at length " + std::to_string(cells->separating_length) +
               "; exact: " + joined(cells->exact_words) +
               "; classes: " + joined(cells->suffix_classes) +
               (cells->complete ? " (complete)" : " (truncated)");
    }
    if (const auto* profiles = std::get_if<ProfileWitness>(&w)) {
        return std::to_string(profiles->profiles.size()) + " profiles at level " +
               std::to_string(profiles->level);
    }
    return "?";
}

std::string certificate_text(const Certificate& c) {
    if (const auto* path = std::get_if<SynchPath>(&c)) {
        return "synchronization path through " + std::to_string(path->vertices.size()) +
               " state pairs";
    }
    if (const auto* pair = std::get_if<OrderedPairEvidence>(&c)) {
        return quoted(pair->lower) + " below " + quoted(pair->upper) + " in the " +
               relation_name(pair->relation) + " order";
    }
    if (const auto* pump = std::get_if<UnboundedSuffixEvidence>(&c)) {
        return "unbounded common suffixes: stem " + quoted(pump->stem) + ", cycle " +
               quoted(pump->cycle) + ", tail " + quoted(pump->tail);
    }
    return "?";
}

void print_json(const ordered_json& out) { std::cout << out.dump(2) << "\n"; }

int emit_error(bool json_mode, int exit_code, const std::string& code,
               const std::string& message) {
    if (json_mode) {
        ordered_json out;
        out["error"]["code"] = code;
        out["error"]["message"] = message;
        print_json(out);
    } else {
        std::cerr << "error: " << message << "\n";
    }
    return exit_code;
}

// --- subcommands ---

struct CommonArgs {
    std::string k_src;
    std::string l_src;
    std::string alphabet;
    bool json = false;
    bool witness = false;
};

int run_decide(const CommonArgs& args, const std::string& family_text, const Caps& caps) {
    std::optional<Family> family = family_from_name(family_text);
    if (!family) throw UsageError("unknown family '" + family_text + "'");
    LanguagePair in = load_pair(args.k_src, args.l_src, args.alphabet);

    Deadline deadline;
    if (caps.timeout_ms > 0) deadline = Deadline::after_ms(caps.timeout_ms);

    Verdict v;
    switch (*family) {
        case Family::Pt:
            v = decide_pt(in.k, in.l);
            break;
        case Family::SubseqSingle:
        case Family::SubseqUnion: {
            SubseqOptions opts;
            if (caps.depth_cap > 0) opts.depth_cap = caps.depth_cap;
            opts.want_witness = args.witness;
            opts.enum_cap = static_cast<std::size_t>(caps.enum_cap);
            opts.deadline = deadline;
            v = *family == Family::SubseqSingle ? decide_subseq_single(in.k, in.l, opts)
                                                : decide_subseq_union(in.k, in.l, opts);
            break;
        }
        default: {
            SuffixOptions opts;
            opts.det_cap = static_cast<std::size_t>(caps.det_cap);
            opts.enum_cap = static_cast<std::size_t>(caps.enum_cap);
            opts.want_witness = args.witness;
            opts.deadline = deadline;
            if (*family == Family::SuffixSingle) v = decide_suffix_single(in.k, in.l, opts);
            else if (*family == Family::SuffixUnion) v = decide_suffix_union(in.k, in.l, opts);
            else if (*family == Family::SuffixBc) v = decide_suffix_bc(in.k, in.l, opts);
            else v = decide_prefix(*family, in.k, in.l, opts);
            break;
        }
    }

    if (args.json) {
        ordered_json out;
        out["family"] = family_name(v.family);
        out["separable"] = v.separable ? ordered_json(*v.separable) : ordered_json(nullptr);
        out["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
        out["certificate"] =
            v.certificate ? certificate_json(*v.certificate) : ordered_json(nullptr);
        out["stats"] = stats_json(v.stats);
        print_json(out);
    } else {
        std::cout << "family: " << family_name(v.family) << "\n";
        std::cout << "separable: "
                  << (v.separable ? (*v.separable ? "yes" : "no") : "unknown") << "\n";
        if (v.witness) std::cout << "witness: " << witness_text(*v.witness) << "\n";
        if (v.certificate) {
            std::cout << "certificate: " << certificate_text(*v.certificate) << "\n";
        }
        std::cout << "stats: " << v.stats.elapsed_ms << " ms, " << v.stats.vertices
                  << " vertices" << (v.stats.caps_hit ? ", caps hit" : "") << "\n";
    }
    return v.separable ? kExitOk : kExitCapped;
}

int run_oracle(const CommonArgs& args, const Caps& caps) {
    LanguagePair in = load_pair(args.k_src, args.l_src, args.alphabet);
    std::size_t pair_cap = static_cast<std::size_t>(caps.pair_cap);
    PtOracleResult r = pt_oracle(in.k, in.l, caps.max_level, pair_cap);

    const char* kind = r.kind == PtOracleResult::Kind::Conclusive ? "conclusive"
                       : r.kind == PtOracleResult::Kind::NecessaryConditionHolds
                           ? "necessary-condition-holds"
                           : "inconclusive";
    std::optional<std::vector<SubseqProfile>> profiles;
    if (args.witness && r.kind == PtOracleResult::Kind::Conclusive) {
        profiles = simon_level_sep(in.k, in.l, *r.level, pair_cap).witness;
    }

    if (args.json) {
        ordered_json out;
        out["max_level"] = caps.max_level;
        out["kind"] = kind;
        out["separable"] = r.separable ? ordered_json(*r.separable) : ordered_json(nullptr);
        out["level"] = r.level ? ordered_json(*r.level) : ordered_json(nullptr);
        if (profiles) {
            ordered_json list = ordered_json::array();
            for (const SubseqProfile& p : *profiles) list.push_back(p.subseqs);
            out["witness"] = std::move(list);
        } else {
            out["witness"] = nullptr;
        }
        print_json(out);
    } else {
        std::cout << "kind: " << kind << "\n";
        if (r.separable) std::cout << "separable: " << (*r.separable ? "yes" : "no") << "\n";
        if (r.level) std::cout << "level: " << *r.level << "\n";
        if (profiles) std::cout << "witness: " << profiles->size() << " profiles\n";
    }
    return r.kind == PtOracleResult::Kind::Inconclusive ? kExitCapped : kExitOk;
}

int run_zigzag(const CommonArgs& args, const Caps& caps) {
    LanguagePair in = load_pair(args.k_src, args.l_src, args.alphabet);
    auto cert = bounded_zigzag_search(in.k, in.l, caps.max_len, caps.max_word_len);
    if (args.json) {
        ordered_json out;
        out["found"] = cert.has_value();
        out["length"] = cert ? cert->words.size() : 0;
        ordered_json words = ordered_json::array();
        ordered_json sides = ordered_json::array();
        if (cert) {
            for (const Word& w : cert->words) words.push_back(w);
            for (auto side : cert->sides) {
                sides.push_back(side == ZigzagCertificate::Side::K ? "K" : "L");
            }
        }
        out["words"] = std::move(words);
        out["sides"] = std::move(sides);
        print_json(out);
    } else if (!cert) {
        std::cout << "no chain: neither language has a word within the bounds\n";
    } else {
        std::cout << "length: " << cert->words.size() << "\n";
        for (std::size_t i = 0; i < cert->words.size(); ++i) {
            std::cout << (cert->sides[i] == ZigzagCertificate::Side::K ? "K " : "L ")
                      << quoted(cert->words[i]) << "\n";
        }
    }
    return kExitOk;
}

int run_layers(const CommonArgs& args, const Caps& caps) {
    LanguagePair in = load_pair(args.k_src, args.l_src, args.alphabet);
    if (is_infinite(in.k) || is_infinite(in.l)) {
        throw UsageError("layers needs finite languages on both sides");
    }
    auto words_of = [](const Nfa& a) {
        std::optional<int> longest = longest_word_length(a);
        return longest ? enumerate_words(a, *longest) : std::vector<Word>{};
    };
    LayerSeparation sep = layer_separation_finite(words_of(in.k), words_of(in.l));

    std::optional<bool> verified;
    try {
        verified = verify_layer_separation(in.k, in.l, sep,
                                           static_cast<std::size_t>(caps.det_cap));
    } catch (const CapExceededError&) {
        verified = std::nullopt;
    }

    if (args.json) {
        ordered_json out;
        ordered_json layers = ordered_json::array();
        for (const Layer& layer : sep.layers) {
            ordered_json one;
            one["side"] = layer.side == Layer::Side::K   ? "K"
                          : layer.side == Layer::Side::L ? "L"
                                                         : "neither";
            one["atoms"] = layer.atoms;
            layers.push_back(std::move(one));
        }
        out["layers"] = std::move(layers);
        out["verified"] = verified ? ordered_json(*verified) : ordered_json(nullptr);
        print_json(out);
    } else {
        for (std::size_t i = 0; i < sep.layers.size(); ++i) {
            const Layer& layer = sep.layers[i];
            std::cout << "layer " << i + 1 << " ("
                      << (layer.side == Layer::Side::K   ? "K"
                          : layer.side == Layer::Side::L ? "L"
                                                         : "neither")
                      << "): closures of " << joined(layer.atoms) << "\n";
        }
        std::cout << "verified: "
                  << (verified ? (*verified ? "yes" : "no") : "unknown (cap hit)") << "\n";
    }
    return verified ? kExitOk : kExitCapped;
}

int run_synch(const CommonArgs& args, const std::string& dot_path) {
    LanguagePair in = load_pair(args.k_src, args.l_src, args.alphabet);
    SynchGraph graph = build_synch_graph(in.k, in.l);
    std::string dot = synch_to_dot(graph, in.k, in.l);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw IoError("cannot write '" + dot_path + "'");
        out << dot;
    }
    if (args.json) {
        ordered_json out;
        out["vertices"] = graph.vertices.size();
        out["symbol_edges"] = graph.symbol_edges.size();
        out["cycle_groups"] = graph.cycle_groups.size();
        out["dot_path"] = dot_path.empty() ? ordered_json(nullptr) : ordered_json(dot_path);
        print_json(out);
    } else if (dot_path.empty()) {
        std::cout << dot;
    } else {
        std::cout << "wrote " << dot_path << ": " << graph.vertices.size() << " vertices, "
                  << graph.symbol_edges.size() << " symbol edges, "
                  << graph.cycle_groups.size() << " cycle groups\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    bool wants_json = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--json") wants_json = true;
    }

    CLI::App app{"separability of regular languages by order-based families"};
    app.require_subcommand(1);

    CommonArgs args;
    Caps caps;
    std::string family_text;
    std::string dot_path;

    auto add_common = [&](CLI::App* cmd, bool with_witness) {
        cmd->add_option("--K", args.k_src, "left language, re:<regex> or file:<path>")
            ->required();
        cmd->add_option("--L", args.l_src, "right language, re:<regex> or file:<path>")
            ->required();
        cmd->add_option("--alphabet", args.alphabet, "extra ambient glyphs for both sides");
        cmd->add_flag("--json", args.json, "machine-readable report");
        if (with_witness) {
            cmd->add_flag("--witness", args.witness, "construct and print a witness");
        }
    };

    CLI::App* decide = app.add_subcommand("decide", "run one family decider");
    add_common(decide, true);
    decide->add_option("--family", family_text,
                       "pt | subseq-single | subseq-union | suffix-single | suffix-union | "
                       "suffix-bc | prefix-single | prefix-union | prefix-bc")
        ->required();
    decide->add_option("--depth-cap", caps.depth_cap, "single-word search depth override")
        ->check(CLI::PositiveNumber);
    decide->add_option("--timeout-ms", caps.timeout_ms, "cooperative deadline")
        ->check(CLI::PositiveNumber);

    CLI::App* oracle = app.add_subcommand("oracle", "level-wise profile oracle");
    add_common(oracle, true);
    oracle->add_option("--max-level", caps.max_level, "highest profile level to try")
        ->check(CLI::NonNegativeNumber);

    CLI::App* zigzag = app.add_subcommand("zigzag", "longest bounded alternating chain");
    add_common(zigzag, false);
    zigzag->add_option("--max-len", caps.max_len, "chain length bound")
        ->check(CLI::PositiveNumber);
    zigzag->add_option("--max-word-len", caps.max_word_len, "word length bound")
        ->check(CLI::PositiveNumber);

    CLI::App* layers = app.add_subcommand("layers", "layer separation of finite languages");
    add_common(layers, false);

    CLI::App* synch = app.add_subcommand("synch", "synchronization graph export");
    add_common(synch, false);
    synch->add_option("--dot", dot_path, "write Graphviz DOT to this path");

    try {
        apply_env_caps(caps);
        app.parse(argc, argv);
        if (decide->parsed()) return run_decide(args, family_text, caps);
        if (oracle->parsed()) return run_oracle(args, caps);
        if (zigzag->parsed()) return run_zigzag(args, caps);
        if (layers->parsed()) return run_layers(args, caps);
        if (synch->parsed()) return run_synch(args, dot_path);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        if (wants_json) return emit_error(true, kExitUsage, "usage", e.what());
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        return emit_error(wants_json, kExitUsage, "usage", e.what());
    } catch (const RegexSyntaxError& e) {
        return emit_error(wants_json, kExitParse, "parse", e.what());
    } catch (const AutomatonFormatError& e) {
        return emit_error(wants_json, kExitParse, "parse", e.what());
    } catch (const IoError& e) {
        return emit_error(wants_json, kExitParse, "io", e.what());
    } catch (const OverlappingInputsError& e) {
        return emit_error(wants_json, kExitUsage, "usage", e.what());
    } catch (const CapExceededError& e) {
        return emit_error(wants_json, kExitCapped, "cap-exceeded", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error(wants_json, kExitUsage, "usage", e.what());
    } catch (const std::exception& e) {
        return emit_error(wants_json, kExitParse, "internal", e.what());
    }
}
