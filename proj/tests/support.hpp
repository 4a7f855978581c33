#ifndef WORDKIT_TESTS_SUPPORT_HPP
#define WORDKIT_TESTS_SUPPORT_HPP

// Shared helpers for the test suites: tiny brute-force reference
// implementations, exhaustive word generators, and automaton builders.
// Everything here is deliberately naive -- these are the oracles the fast
// library code is checked against.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "wordkit/automaton.hpp"
#include "wordkit/borders.hpp"
#include "wordkit/palstars.hpp"

namespace wordkit::tests {

inline Word wb(const std::string& text) {
    return Alphabet::binary().parse_word(text);
}

inline std::vector<Word> wbs(std::initializer_list<const char*> texts) {
    std::vector<Word> out;
    for (const char* t : texts) out.push_back(wb(t));
    return out;
}

// Longest border by direct prefix/suffix comparison, O(n^2).
inline std::size_t brute_longest_border(const Word& w) {
    for (std::size_t len = w.size() - 1; len > 0; --len) {
        if (std::equal(w.begin(), w.begin() + len, w.end() - len)) return len;
    }
    return 0;
}

inline bool brute_is_unbordered(const Word& w) {
    return brute_longest_border(w) == 0;
}

// All k-ary words of exactly the given length, in lexicographic order.
inline std::vector<Word> all_words(std::size_t k, std::size_t length) {
    std::vector<Word> out;
    Word w(length, 0);
    for (;;) {
        out.push_back(w);
        std::size_t i = length;
        while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
    }
    return out;
}

// Trie-shaped NFA accepting exactly the given finite language.
inline Nfa nfa_for_words(const Alphabet& a, const std::vector<Word>& words) {
    Nfa n(a);
    const State root = n.add_state();
    n.start.insert(root);
    for (const Word& w : words) {
        State cur = root;
        for (Symbol s : w) {
            auto it = n.delta[cur].find(s);
            if (it != n.delta[cur].end() && !it->second.empty()) {
                cur = *it->second.begin();
            } else {
                State next = n.add_state();
                n.add_transition(cur, s, next);
                cur = next;
            }
        }
        n.accept.insert(cur);
    }
    return n;
}

inline Dfa dfa_for_words(const Alphabet& a, const std::vector<Word>& words) {
    return minimize(determinize(nfa_for_words(a, words)));
}

// Hand-built minimal total DFA for (00+11)* over the binary alphabet:
// state 0 accepts, 1 = saw a lone 0, 2 = saw a lone 1, 3 = dead.
inline Dfa even_pairs_dfa() {
    Dfa d{Alphabet::binary()};
    d.num_states = 4;
    d.start = 0;
    d.accept = {true, false, false, false};
    d.delta = {{1, 2}, {0, 3}, {3, 0}, {3, 3}};
    return d;
}

// All binary words, one accepting state with self-loops.
inline Dfa sigma_star_dfa() {
    Dfa d{Alphabet::binary()};
    d.num_states = 1;
    d.start = 0;
    d.accept = {true};
    d.delta = {{0, 0}};
    return d;
}

// Only the empty word.
inline Dfa epsilon_dfa() {
    Dfa d{Alphabet::binary()};
    d.num_states = 2;
    d.start = 0;
    d.accept = {true, false};
    d.delta = {{1, 1}, {1, 1}};
    return d;
}

// The empty language.
inline Dfa empty_dfa() {
    Dfa d{Alphabet::binary()};
    d.num_states = 1;
    d.start = 0;
    d.accept = {false};
    d.delta = {{0, 0}};
    return d;
}

// Random small binary NFA for property tests.  Shape matches the star-root
// corpus: 3..6 states, sparse transitions, occasional epsilon edges.
inline Nfa random_nfa(std::mt19937& rng) {
    const Alphabet a = Alphabet::binary();
    std::uniform_int_distribution<std::size_t> state_count(3, 6);
    const std::size_t n = state_count(rng);
    Nfa nfa(a);
    for (std::size_t i = 0; i < n; ++i) nfa.add_state();
    std::uniform_int_distribution<State> pick(0, n - 1);
    std::uniform_int_distribution<int> die(0, 3);
    for (State q = 0; q < n; ++q) {
        for (Symbol s = 0; s < 2; ++s) {
            const int targets = die(rng) % 3;  // 0..2 successors
            for (int t = 0; t < targets; ++t) nfa.add_transition(q, s, pick(rng));
        }
        if (die(rng) == 0) nfa.add_epsilon(q, pick(rng));
    }
    nfa.start.insert(pick(rng));
    const std::size_t accepting = 1 + pick(rng) % n;
    for (std::size_t i = 0; i < accepting; ++i) nfa.accept.insert(pick(rng));
    return nfa;
}

}  // namespace wordkit::tests

#endif
