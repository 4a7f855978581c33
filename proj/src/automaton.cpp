#include "wordkit/automaton.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace wordkit {

namespace {

void require_state(std::size_t num_states, State s, const char* what) {
    if (s >= num_states) {
        throw std::invalid_argument(std::string(what) + " references undeclared state " +
                                    std::to_string(s));
    }
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (a != b) {
        throw std::invalid_argument("automata operate over different alphabets");
    }
}

std::set<State> eps_closure(const Nfa& n, std::set<State> states) {
    std::vector<State> pending(states.begin(), states.end());
    while (!pending.empty()) {
        State s = pending.back();
        pending.pop_back();
        for (State t : n.eps[s]) {
            if (states.insert(t).second) pending.push_back(t);
        }
    }
    return states;
}

}  // namespace

State Nfa::add_state() {
    delta.emplace_back();
    eps.emplace_back();
    return num_states++;
}

void Nfa::add_transition(State from, Symbol symbol, State to) {
    require_state(num_states, from, "transition source");
    require_state(num_states, to, "transition target");
    if (symbol >= alphabet.size()) {
        throw std::invalid_argument("transition references undeclared symbol index " +
                                    std::to_string(symbol));
    }
    delta[from][symbol].insert(to);
}

void Nfa::add_epsilon(State from, State to) {
    require_state(num_states, from, "epsilon source");
    require_state(num_states, to, "epsilon target");
    eps[from].insert(to);
}

bool Nfa::accepts(const Word& w) const {
    std::set<State> current = eps_closure(*this, start);
    for (Symbol s : w) {
        std::set<State> next;
        for (State q : current) {
            auto it = delta[q].find(s);
            if (it == delta[q].end()) continue;
            next.insert(it->second.begin(), it->second.end());
        }
        current = eps_closure(*this, std::move(next));
        if (current.empty()) return false;
    }
    for (State q : current) {
        if (accept.count(q)) return true;
    }
    return false;
}

bool Dfa::accepts(const Word& w) const {
    State q = start;
    for (Symbol s : w) q = delta[q][s];
    return accept[q];
}

Nfa nfa_from_dfa(const Dfa& d) {
    Nfa n(d.alphabet);
    for (std::size_t i = 0; i < d.num_states; ++i) n.add_state();
    for (State q = 0; q < d.num_states; ++q) {
        for (Symbol s = 0; s < d.alphabet.size(); ++s) {
            n.add_transition(q, s, d.delta[q][s]);
        }
    }
    n.start.insert(d.start);
    for (State q = 0; q < d.num_states; ++q) {
        if (d.accept[q]) n.accept.insert(q);
    }
    return n;
}

Dfa determinize(const Nfa& n) {
    Dfa d(n.alphabet);
    const std::size_t k = n.alphabet.size();
    std::map<std::set<State>, State> index;
    std::deque<std::set<State>> work;

    auto intern = [&](std::set<State> subset) -> State {
        auto [it, inserted] = index.emplace(std::move(subset), d.num_states);
        if (inserted) {
            d.num_states++;
            d.delta.emplace_back(k, 0);
            bool acc = false;
            for (State q : it->first) {
                if (n.accept.count(q)) {
                    acc = true;
                    break;
                }
            }
            d.accept.push_back(acc);
            work.push_back(it->first);
        }
        return it->second;
    };

    d.start = intern(eps_closure(n, n.start));
    while (!work.empty()) {
        std::set<State> subset = std::move(work.front());
        work.pop_front();
        State from = index.at(subset);
        for (Symbol s = 0; s < k; ++s) {
            std::set<State> next;
            for (State q : subset) {
                auto it = n.delta[q].find(s);
                if (it == n.delta[q].end()) continue;
                next.insert(it->second.begin(), it->second.end());
            }
            d.delta[from][s] = intern(eps_closure(n, std::move(next)));
        }
    }
    return d;
}

namespace {

// BFS over reachable states, symbols ascending; the visit order is the
// canonical numbering used for minimized and serialized automata.
std::vector<State> reachable_in_bfs_order(const Dfa& d) {
    std::vector<State> order;
    std::vector<bool> seen(d.num_states, false);
    std::deque<State> work;
    seen[d.start] = true;
    work.push_back(d.start);
    while (!work.empty()) {
        State q = work.front();
        work.pop_front();
        order.push_back(q);
        for (Symbol s = 0; s < d.alphabet.size(); ++s) {
            State t = d.delta[q][s];
            if (!seen[t]) {
                seen[t] = true;
                work.push_back(t);
            }
        }
    }
    return order;
}

}  // namespace

Dfa minimize(const Dfa& d) {
    const std::size_t k = d.alphabet.size();
    const std::vector<State> reach = reachable_in_bfs_order(d);

    // Dense renumbering of the reachable part.
    std::vector<State> dense(d.num_states, 0);
    for (std::size_t i = 0; i < reach.size(); ++i) dense[reach[i]] = i;
    const std::size_t m = reach.size();

    // Moore partition refinement, starting from the accepting split.
    std::vector<std::size_t> cls(m);
    for (std::size_t i = 0; i < m; ++i) cls[i] = d.accept[reach[i]] ? 1 : 0;
    std::size_t num_classes = 2;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig_index;
        std::vector<std::size_t> next_cls(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::size_t> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[i]);
            for (Symbol s = 0; s < k; ++s) {
                sig.push_back(cls[dense[d.delta[reach[i]][s]]]);
            }
            auto [it, inserted] = sig_index.emplace(std::move(sig), sig_index.size());
            next_cls[i] = it->second;
        }
        if (sig_index.size() == num_classes) {
            cls = std::move(next_cls);
            break;
        }
        num_classes = sig_index.size();
        cls = std::move(next_cls);
    }

    // Quotient automaton, then BFS renumbering for a canonical result.
    Dfa q(d.alphabet);
    q.num_states = num_classes;
    q.delta.assign(num_classes, std::vector<State>(k, 0));
    q.accept.assign(num_classes, false);
    for (std::size_t i = 0; i < m; ++i) {
        q.accept[cls[i]] = d.accept[reach[i]];
        for (Symbol s = 0; s < k; ++s) {
            q.delta[cls[i]][s] = cls[dense[d.delta[reach[i]][s]]];
        }
    }
    q.start = cls[dense[d.start]];

    const std::vector<State> order = reachable_in_bfs_order(q);
    std::vector<State> renum(q.num_states, 0);
    for (std::size_t i = 0; i < order.size(); ++i) renum[order[i]] = i;
    Dfa out(d.alphabet);
    out.num_states = order.size();
    out.delta.assign(order.size(), std::vector<State>(k, 0));
    out.accept.assign(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.accept[i] = q.accept[order[i]];
        for (Symbol s = 0; s < k; ++s) {
            out.delta[i][s] = renum[q.delta[order[i]][s]];
        }
    }
    out.start = 0;
    return out;
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    for (std::size_t i = 0; i < out.num_states; ++i) out.accept[i] = !out.accept[i];
    return out;
}

namespace {

template <typename AcceptRule>
Dfa product(const Dfa& a, const Dfa& b, AcceptRule rule) {
    require_same_alphabet(a.alphabet, b.alphabet);
    const std::size_t k = a.alphabet.size();
    Dfa out(a.alphabet);
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>> work;
    auto intern = [&](std::pair<State, State> p) -> State {
        auto [it, inserted] = index.emplace(p, out.num_states);
        if (inserted) {
            out.num_states++;
            out.delta.emplace_back(k, 0);
            out.accept.push_back(rule(a.accept[p.first], b.accept[p.second]));
            work.push_back(p);
        }
        return it->second;
    };
    out.start = intern({a.start, b.start});
    while (!work.empty()) {
        auto [qa, qb] = work.front();
        work.pop_front();
        State from = index.at({qa, qb});
        for (Symbol s = 0; s < k; ++s) {
            out.delta[from][s] = intern({a.delta[qa][s], b.delta[qb][s]});
        }
    }
    return out;
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa difference(const Dfa& a, const Dfa& b) {
    return intersect(a, complement(b));
}

Nfa concat(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a.alphabet, b.alphabet);
    Nfa n(a.alphabet);
    for (std::size_t i = 0; i < a.num_states + b.num_states; ++i) n.add_state();
    const std::size_t off = a.num_states;
    for (State q = 0; q < a.num_states; ++q) {
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            n.add_transition(q, s, a.delta[q][s]);
        }
    }
    for (State q = 0; q < b.num_states; ++q) {
        for (Symbol s = 0; s < b.alphabet.size(); ++s) {
            n.add_transition(off + q, s, off + b.delta[q][s]);
        }
    }
    n.start.insert(a.start);
    for (State q = 0; q < a.num_states; ++q) {
        if (a.accept[q]) n.add_epsilon(q, off + b.start);
    }
    for (State q = 0; q < b.num_states; ++q) {
        if (b.accept[q]) n.accept.insert(off + q);
    }
    return n;
}

Nfa star(const Dfa& a) {
    Nfa n = nfa_from_dfa(a);
    State fresh = n.add_state();
    n.add_epsilon(fresh, a.start);
    for (State q = 0; q < a.num_states; ++q) {
        if (a.accept[q]) n.add_epsilon(q, a.start);
    }
    n.start = {fresh};
    n.accept.insert(fresh);
    return n;
}

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a.alphabet, b.alphabet);
    const std::size_t k = a.alphabet.size();
    struct Node {
        State qa, qb;
        std::size_t parent;  // index into visited order
        Symbol via;
    };
    std::map<std::pair<State, State>, std::size_t> seen;
    std::vector<Node> nodes;
    std::deque<std::size_t> work;

    auto reconstruct = [&](std::size_t i) {
        Word w;
        while (nodes[i].parent != i) {
            w.push_back(nodes[i].via);
            i = nodes[i].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    nodes.push_back({a.start, b.start, 0, 0});
    seen.emplace(std::make_pair(a.start, b.start), 0);
    work.push_back(0);
    // BFS in symbol order finds the shortest witness, lexicographically
    // least among ties.
    while (!work.empty()) {
        std::size_t i = work.front();
        work.pop_front();
        if (a.accept[nodes[i].qa] != b.accept[nodes[i].qb]) return reconstruct(i);
        for (Symbol s = 0; s < k; ++s) {
            std::pair<State, State> next{a.delta[nodes[i].qa][s], b.delta[nodes[i].qb][s]};
            if (seen.emplace(next, nodes.size()).second) {
                nodes.push_back({next.first, next.second, i, s});
                work.push_back(nodes.size() - 1);
            }
        }
    }
    return std::nullopt;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    return !distinguishing_word(a, b).has_value();
}

bool is_closed(const Dfa& d) {
    return equivalent(d, determinize(star(d)));
}

NotClosedError::NotClosedError(Word witness, const Alphabet& alphabet)
    : std::invalid_argument("language is not closed: witness '" +
                            alphabet.format_word(witness) + "'"),
      witness_(std::move(witness)) {}

namespace {

Dfa epsilon_only(const Alphabet& alphabet) {
    Dfa d(alphabet);
    d.num_states = 2;
    d.delta.assign(2, std::vector<State>(alphabet.size(), 1));
    d.start = 0;
    d.accept = {true, false};
    return d;
}

void require_closed(const Dfa& d) {
    if (auto w = distinguishing_word(d, determinize(star(d)))) {
        throw NotClosedError(std::move(*w), d.alphabet);
    }
}

}  // namespace

Dfa inverse_star(const Dfa& d) {
    require_closed(d);
    const Dfa nonempty_part = minimize(difference(d, epsilon_only(d.alphabet)));
    const Dfa squared = minimize(determinize(concat(nonempty_part, nonempty_part)));
    return minimize(difference(nonempty_part, squared));
}

bool verify_star_root(const Dfa& d) {
    const Dfa root = inverse_star(d);  // checks closedness
    return equivalent(determinize(star(root)), d);
}

}  // namespace wordkit
