#include "sepreg/nfa_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "sepreg/errors.hpp"

namespace sepreg {

namespace {

int parse_state_index(const std::string& token, int state_count, int line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw AutomatonFormatError("expected a state index, got '" + token + "'", line);
    }
    if (used != token.size() || value < 0) {
        throw AutomatonFormatError("expected a state index, got '" + token + "'", line);
    }
    if (state_count >= 0 && value >= state_count) {
        throw AutomatonFormatError("state index " + token + " out of range", line);
    }
    return value;
}

}  // namespace

Nfa parse_automaton_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    std::optional<Alphabet> alphabet;
    int state_count = -1;
    std::optional<std::vector<int>> initial;
    std::vector<int> accepting;
    bool saw_accepting = false;
    std::vector<Transition> transitions;

    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream fields(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) {
            if (tok[0] == '#') break;  // comment runs to end of line
            tokens.push_back(tok);
        }
        if (tokens.empty()) continue;

        const std::string& head = tokens[0];
        if (head == "alphabet") {
            if (alphabet) throw AutomatonFormatError("duplicate alphabet directive", line_no);
            if (tokens.size() > 2) {
                throw AutomatonFormatError("alphabet takes one glyph string", line_no);
            }
            try {
                alphabet = Alphabet::from_glyphs(tokens.size() == 2 ? tokens[1] : "");
            } catch (const std::invalid_argument& e) {
                throw AutomatonFormatError(e.what(), line_no);
            }
        } else if (head == "states") {
            if (state_count >= 0) {
                throw AutomatonFormatError("duplicate states directive", line_no);
            }
            if (tokens.size() != 2) {
                throw AutomatonFormatError("states takes one count", line_no);
            }
            state_count = parse_state_index(tokens[1], -1, line_no);
            if (state_count == 0) {
                throw AutomatonFormatError("states count must be positive", line_no);
            }
        } else if (head == "initial" || head == "accepting") {
            if (state_count < 0) {
                throw AutomatonFormatError(head + " requires a prior states directive", line_no);
            }
            std::vector<int> states;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                states.push_back(parse_state_index(tokens[i], state_count, line_no));
            }
            if (head == "initial") {
                if (initial) throw AutomatonFormatError("duplicate initial directive", line_no);
                initial = std::move(states);
            } else {
                if (saw_accepting) {
                    throw AutomatonFormatError("duplicate accepting directive", line_no);
                }
                saw_accepting = true;
                accepting = std::move(states);
            }
        } else {
            if (state_count < 0 || !alphabet) {
                throw AutomatonFormatError(
                    "transitions require prior alphabet and states directives", line_no);
            }
            if (tokens.size() != 3 || tokens[1].size() != 1) {
                throw AutomatonFormatError("expected 'from glyph to'", line_no);
            }
            char glyph = tokens[1][0];
            if (!alphabet->contains(glyph)) {
                throw AutomatonFormatError(std::string("glyph '") + glyph +
                                               "' not in the declared alphabet",
                                           line_no);
            }
            transitions.push_back({parse_state_index(tokens[0], state_count, line_no), glyph,
                                   parse_state_index(tokens[2], state_count, line_no)});
        }
    }

    if (!alphabet) throw AutomatonFormatError("missing alphabet directive", line_no);
    if (state_count < 0) throw AutomatonFormatError("missing states directive", line_no);
    if (!initial) throw AutomatonFormatError("missing initial directive", line_no);
    try {
        return Nfa(state_count, *alphabet, std::move(transitions), std::move(*initial),
                   std::move(accepting));
    } catch (const std::invalid_argument& e) {
        throw AutomatonFormatError(e.what(), line_no);
    }
}

Nfa parse_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AutomatonFormatError("cannot open '" + path + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_automaton_text(buffer.str());
}

std::string write_automaton_text(const Nfa& a) {
    std::ostringstream out;
    out << "# sepreg-nfa v1\n";
    out << "alphabet";
    if (!a.alphabet().empty()) out << ' ' << a.alphabet().glyphs();
    out << "\n";
    out << "states " << a.state_count() << "\n";
    out << "initial";
    for (int q : a.initial()) out << ' ' << q;
    out << "\naccepting";
    for (int q : a.accepting()) out << ' ' << q;
    out << "\n";
    for (const Transition& t : a.transitions()) {
        out << t.from << ' ' << t.glyph << ' ' << t.to << "\n";
    }
    return out.str();
}

void write_automaton_file(const Nfa& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw AutomatonFormatError("cannot open '" + path + "' for writing", 0);
    out << write_automaton_text(a);
}

}  // namespace sepreg
