#include "sepreg/nfa.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepreg {

namespace {

std::vector<int> sorted_state_set(std::vector<int> states, int state_count,
                                  const char* what) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    for (int q : states) {
        if (q < 0 || q >= state_count) {
            throw std::invalid_argument(std::string(what) + " state index out of range");
        }
    }
    return states;
}

}  // namespace

Nfa::Nfa(int state_count, Alphabet alphabet, std::vector<Transition> transitions,
         std::vector<int> initial, std::vector<int> accepting)
    : state_count_(state_count), alphabet_(std::move(alphabet)) {
    if (state_count_ <= 0) {
        throw std::invalid_argument("automaton needs at least one state");
    }
    transitions_ = std::move(transitions);
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
    for (const Transition& t : transitions_) {
        if (t.from < 0 || t.from >= state_count_ || t.to < 0 || t.to >= state_count_) {
            throw std::invalid_argument("transition state index out of range");
        }
        if (!alphabet_.contains(t.glyph)) {
            throw std::invalid_argument(std::string("transition glyph '") + t.glyph +
                                        "' not in alphabet");
        }
    }
    initial_ = sorted_state_set(std::move(initial), state_count_, "initial");
    if (initial_.empty()) {
        throw std::invalid_argument("automaton needs at least one initial state");
    }
    accepting_ = sorted_state_set(std::move(accepting), state_count_, "accepting");

    out_.resize(static_cast<std::size_t>(state_count_));
    for (const Transition& t : transitions_) {
        out_[static_cast<std::size_t>(t.from)].push_back(t);
    }
}

bool Nfa::is_accepting(int state) const {
    return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

bool Nfa::is_initial(int state) const {
    return std::binary_search(initial_.begin(), initial_.end(), state);
}

std::vector<int> Nfa::step(int from, char glyph) const {
    std::vector<int> result;
    for (const Transition& t : out(from)) {
        if (t.glyph == glyph) result.push_back(t.to);
    }
    return result;
}

std::vector<int> Nfa::step_set(const std::vector<int>& from, char glyph) const {
    std::vector<int> result;
    for (int q : from) {
        for (const Transition& t : out(q)) {
            if (t.glyph == glyph) result.push_back(t.to);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool member(const Nfa& a, const Word& w) {
    std::vector<int> current = a.initial();
    for (char c : w) {
        current = a.step_set(current, c);
        if (current.empty()) return false;
    }
    for (int q : current) {
        if (a.is_accepting(q)) return true;
    }
    return false;
}

}  // namespace sepreg
