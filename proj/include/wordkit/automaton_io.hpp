#ifndef WORDKIT_AUTOMATON_IO_HPP
#define WORDKIT_AUTOMATON_IO_HPP

#include <string>

#include <json.hpp>

#include "wordkit/automaton.hpp"

namespace wordkit {

/// Automaton file format: a JSON object with fields
///   alphabet:    array of symbol strings
///   states:      array of state names
///   start:       one name (DFA) or an array of names (NFA)
///   accept:      array of names
///   transitions: array of {from, symbol, to}; symbol "" denotes an
///                epsilon transition and is allowed in NFA files only.
/// DFA files may not repeat a (from, symbol) pair.  Both kinds load into
/// an Nfa; missing DFA transitions fall into an implicit dead state once
/// determinized.
Nfa parse_automaton(const nlohmann::json& j);
Nfa load_automaton(const std::string& path);

/// Serializes a DFA with canonical state names q0, q1, ... assigned in BFS
/// order from the start state (symbols ascending); unreachable states are
/// dropped.  Output is byte-stable for a given automaton.
nlohmann::ordered_json dfa_to_json(const Dfa& d);
void save_dfa(const Dfa& d, const std::string& path);

}  // namespace wordkit

#endif
