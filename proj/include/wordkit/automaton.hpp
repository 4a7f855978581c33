#ifndef WORDKIT_AUTOMATON_HPP
#define WORDKIT_AUTOMATON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "wordkit/alphabet.hpp"

namespace wordkit {

using State = std::size_t;

/// Nondeterministic finite automaton with epsilon transitions.  States are
/// dense indices 0..num_states-1; transitions may only reference declared
/// states and symbols.
struct Nfa {
    Alphabet alphabet;
    std::size_t num_states = 0;
    std::vector<std::map<Symbol, std::set<State>>> delta;
    std::vector<std::set<State>> eps;
    std::set<State> start;
    std::set<State> accept;

    explicit Nfa(Alphabet a = Alphabet::binary()) : alphabet(std::move(a)) {}

    State add_state();
    void add_transition(State from, Symbol symbol, State to);
    void add_epsilon(State from, State to);
    bool accepts(const Word& w) const;
};

/// Deterministic finite automaton.  The transition function is total; a
/// dead state, when needed, is explicit.
struct Dfa {
    Alphabet alphabet;
    std::size_t num_states = 0;
    std::vector<std::vector<State>> delta;  // delta[state][symbol]
    State start = 0;
    std::vector<bool> accept;

    explicit Dfa(Alphabet a = Alphabet::binary()) : alphabet(std::move(a)) {}

    bool accepts(const Word& w) const;
};

Nfa nfa_from_dfa(const Dfa& d);

/// Subset construction with epsilon closure.  States are numbered in BFS
/// discovery order (symbols ascending), so the result is reproducible.
Dfa determinize(const Nfa& n);

/// Unique minimal DFA for the same language: unreachable states dropped,
/// equivalent states merged, states renumbered in BFS order from the start.
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);

/// Language concatenation / Kleene star via epsilon transitions.  star()
/// always accepts the empty word.
Nfa concat(const Dfa& a, const Dfa& b);
Nfa star(const Dfa& a);

/// Shortest word accepted by exactly one of the two automata, ties broken
/// lexicographically; nullopt when the languages are equal.
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);

bool equivalent(const Dfa& a, const Dfa& b);

/// True iff L(d) = L(d)*.
bool is_closed(const Dfa& d);

/// Raised when an operation requires a closed language; carries the
/// shortest witness separating L from L*.
class NotClosedError : public std::invalid_argument {
public:
    NotClosedError(Word witness, const Alphabet& alphabet);
    const Word& witness() const { return witness_; }

private:
    Word witness_;
};

/// The smallest generator of a closed language: the minimal DFA of
/// L+ - L+L+ with L+ = L - {epsilon}.  Never accepts the empty word.
/// Throws NotClosedError when L != L*.
Dfa inverse_star(const Dfa& d);

/// Checks (L^-*)* = L for a closed language; always true, kept as a test
/// hook and CLI assertion.  Throws NotClosedError when L != L*.
bool verify_star_root(const Dfa& d);

}  // namespace wordkit

#endif
