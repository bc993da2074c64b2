#include "sepreg/regex.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "sepreg/errors.hpp"

namespace sepreg {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<RegexAst> parse() {
        std::unique_ptr<RegexAst> ast = parse_union();
        skip_space();
        if (pos_ != text_.size()) {
            throw RegexSyntaxError("unexpected character", pos_);
        }
        if (ast->kind != RegexAst::Kind::Empty && !empty_offsets_.empty()) {
            throw NestedEmptyError(empty_offsets_.front());
        }
        return ast;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_atom_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return is_valid_glyph(c) || c == '@' || c == '#' || c == '(';
    }

    std::unique_ptr<RegexAst> parse_union() {
        std::unique_ptr<RegexAst> left = parse_concat();
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != '+') break;
            ++pos_;
            auto node = std::make_unique<RegexAst>();
            node->kind = RegexAst::Kind::Union;
            node->left = std::move(left);
            node->right = parse_concat();
            left = std::move(node);
        }
        return left;
    }

    std::unique_ptr<RegexAst> parse_concat() {
        std::unique_ptr<RegexAst> left = parse_starred();
        while (at_atom_start()) {
            auto node = std::make_unique<RegexAst>();
            node->kind = RegexAst::Kind::Concat;
            node->left = std::move(left);
            node->right = parse_starred();
            left = std::move(node);
        }
        return left;
    }

    std::unique_ptr<RegexAst> parse_starred() {
        std::unique_ptr<RegexAst> node = parse_atom();
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != '*') break;
            ++pos_;
            auto star = std::make_unique<RegexAst>();
            star->kind = RegexAst::Kind::Star;
            star->left = std::move(node);
            node = std::move(star);
        }
        return node;
    }

    std::unique_ptr<RegexAst> parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            throw RegexSyntaxError("expected an atom, found end of input", pos_);
        }
        char c = text_[pos_];
        if (is_valid_glyph(c)) {
            ++pos_;
            auto node = std::make_unique<RegexAst>();
            node->kind = RegexAst::Kind::Symbol;
            node->glyph = c;
            return node;
        }
        if (c == '@') {
            ++pos_;
            auto node = std::make_unique<RegexAst>();
            node->kind = RegexAst::Kind::Epsilon;
            return node;
        }
        if (c == '#') {
            empty_offsets_.push_back(pos_);
            ++pos_;
            auto node = std::make_unique<RegexAst>();
            node->kind = RegexAst::Kind::Empty;
            return node;
        }
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            std::unique_ptr<RegexAst> inner = parse_union();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                throw RegexSyntaxError("unbalanced parenthesis", open);
            }
            ++pos_;
            return inner;
        }
        throw RegexSyntaxError("expected an atom", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> empty_offsets_;
};

void collect_glyphs(const RegexAst& ast, std::string& glyphs) {
    switch (ast.kind) {
        case RegexAst::Kind::Symbol:
            glyphs.push_back(ast.glyph);
            break;
        case RegexAst::Kind::Union:
        case RegexAst::Kind::Concat:
            collect_glyphs(*ast.left, glyphs);
            collect_glyphs(*ast.right, glyphs);
            break;
        case RegexAst::Kind::Star:
            collect_glyphs(*ast.left, glyphs);
            break;
        case RegexAst::Kind::Empty:
        case RegexAst::Kind::Epsilon:
            break;
    }
}

// Intermediate automaton piece with local state numbering. The invariant
// "empty word accepted iff some state is both initial and accepting" holds
// for every fragment, which keeps the combinators epsilon-free.
struct Fragment {
    int state_count = 0;
    std::vector<Transition> transitions;
    std::vector<int> initial;
    std::vector<int> accepting;

    bool accepts_epsilon() const {
        for (int q : initial) {
            if (std::find(accepting.begin(), accepting.end(), q) != accepting.end()) {
                return true;
            }
        }
        return false;
    }
};

void append_shifted(Fragment& into, const Fragment& piece, int offset) {
    for (const Transition& t : piece.transitions) {
        into.transitions.push_back({t.from + offset, t.glyph, t.to + offset});
    }
}

Fragment build_fragment(const RegexAst& ast) {
    switch (ast.kind) {
        case RegexAst::Kind::Empty:
            return {1, {}, {0}, {}};
        case RegexAst::Kind::Epsilon:
            return {1, {}, {0}, {0}};
        case RegexAst::Kind::Symbol:
            return {2, {{0, ast.glyph, 1}}, {0}, {1}};
        case RegexAst::Kind::Union: {
            Fragment l = build_fragment(*ast.left);
            Fragment r = build_fragment(*ast.right);
            Fragment out;
            out.state_count = l.state_count + r.state_count;
            out.transitions = l.transitions;
            append_shifted(out, r, l.state_count);
            out.initial = l.initial;
            out.accepting = l.accepting;
            for (int q : r.initial) out.initial.push_back(q + l.state_count);
            for (int q : r.accepting) out.accepting.push_back(q + l.state_count);
            return out;
        }
        case RegexAst::Kind::Concat: {
            Fragment l = build_fragment(*ast.left);
            Fragment r = build_fragment(*ast.right);
            Fragment out;
            out.state_count = l.state_count + r.state_count;
            out.transitions = l.transitions;
            append_shifted(out, r, l.state_count);
            // Entering the right part consumes the symbol that leaves one of
            // its initial states, starting from any left accepting state.
            for (const Transition& t : r.transitions) {
                if (std::find(r.initial.begin(), r.initial.end(), t.from) == r.initial.end()) {
                    continue;
                }
                for (int f : l.accepting) {
                    out.transitions.push_back({f, t.glyph, t.to + l.state_count});
                }
            }
            out.initial = l.initial;
            if (l.accepts_epsilon()) {
                for (int q : r.initial) out.initial.push_back(q + l.state_count);
            }
            for (int q : r.accepting) out.accepting.push_back(q + l.state_count);
            if (r.accepts_epsilon()) {
                for (int q : l.accepting) out.accepting.push_back(q);
            }
            return out;
        }
        case RegexAst::Kind::Star: {
            Fragment c = build_fragment(*ast.left);
            Fragment out;
            // One fresh state provides the empty word without touching the
            // body's acceptance structure.
            out.state_count = c.state_count + 1;
            out.transitions = c.transitions;
            for (const Transition& t : c.transitions) {
                if (std::find(c.initial.begin(), c.initial.end(), t.from) == c.initial.end()) {
                    continue;
                }
                for (int f : c.accepting) {
                    out.transitions.push_back({f, t.glyph, t.to});
                }
            }
            out.initial = c.initial;
            out.initial.push_back(c.state_count);
            out.accepting = c.accepting;
            out.accepting.push_back(c.state_count);
            return out;
        }
    }
    throw std::logic_error("unreachable regex kind");
}

}  // namespace

std::unique_ptr<RegexAst> parse_regex(std::string_view text) {
    return Parser(text).parse();
}

std::string regex_to_string(const RegexAst& ast) {
    switch (ast.kind) {
        case RegexAst::Kind::Empty:
            return "#";
        case RegexAst::Kind::Epsilon:
            return "@";
        case RegexAst::Kind::Symbol:
            return std::string(1, ast.glyph);
        case RegexAst::Kind::Union:
            return "(" + regex_to_string(*ast.left) + "+" + regex_to_string(*ast.right) + ")";
        case RegexAst::Kind::Concat:
            return "(" + regex_to_string(*ast.left) + regex_to_string(*ast.right) + ")";
        case RegexAst::Kind::Star:
            return regex_to_string(*ast.left) + "*";
    }
    throw std::logic_error("unreachable regex kind");
}

Alphabet regex_alphabet(const RegexAst& ast) {
    std::string glyphs;
    collect_glyphs(ast, glyphs);
    return Alphabet::from_glyphs(glyphs);
}

Nfa regex_to_nfa(const RegexAst& ast) {
    return regex_to_nfa(ast, regex_alphabet(ast));
}

Nfa regex_to_nfa(const RegexAst& ast, const Alphabet& ambient) {
    if (!regex_alphabet(ast).is_subset_of(ambient)) {
        throw std::invalid_argument("ambient alphabet must contain the expression's symbols");
    }
    Fragment f = build_fragment(ast);
    return Nfa(f.state_count, ambient, std::move(f.transitions), std::move(f.initial),
               std::move(f.accepting));
}

Nfa compile_regex(std::string_view text) {
    return regex_to_nfa(*parse_regex(text));
}

}  // namespace sepreg
