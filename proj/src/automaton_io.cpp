#include "wordkit/automaton_io.hpp"

#include <deque>
#include <fstream>
#include <map>
#include <stdexcept>

namespace wordkit {

namespace {

using nlohmann::json;

[[noreturn]] void bad_format(const std::string& message) {
    throw std::runtime_error("invalid automaton file: " + message);
}

std::vector<std::string> string_array(const json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_array()) {
        bad_format(std::string("missing array field '") + field + "'");
    }
    std::vector<std::string> out;
    for (const auto& item : j.at(field)) {
        if (!item.is_string()) {
            bad_format(std::string("field '") + field + "' must contain strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

Nfa parse_automaton(const json& j) {
    if (!j.is_object()) bad_format("top level must be an object");

    Alphabet alphabet(string_array(j, "alphabet"));

    const std::vector<std::string> state_names = string_array(j, "states");
    std::map<std::string, State> state_index;
    for (std::size_t i = 0; i < state_names.size(); ++i) {
        if (!state_index.emplace(state_names[i], i).second) {
            bad_format("duplicate state name '" + state_names[i] + "'");
        }
    }
    auto lookup_state = [&](const std::string& name, const char* where) -> State {
        auto it = state_index.find(name);
        if (it == state_index.end()) {
            bad_format(std::string(where) + " references undeclared state '" + name + "'");
        }
        return it->second;
    };

    Nfa n(alphabet);
    for (std::size_t i = 0; i < state_names.size(); ++i) n.add_state();

    if (!j.contains("start")) bad_format("missing field 'start'");
    const bool dfa_style = j.at("start").is_string();
    if (dfa_style) {
        n.start.insert(lookup_state(j.at("start").get<std::string>(), "start"));
    } else if (j.at("start").is_array()) {
        for (const auto& item : j.at("start")) {
            if (!item.is_string()) bad_format("field 'start' must contain strings");
            n.start.insert(lookup_state(item.get<std::string>(), "start"));
        }
    } else {
        bad_format("field 'start' must be a state name (DFA) or an array of names (NFA)");
    }

    for (const std::string& name : string_array(j, "accept")) {
        n.accept.insert(lookup_state(name, "accept"));
    }

    if (!j.contains("transitions") || !j.at("transitions").is_array()) {
        bad_format("missing array field 'transitions'");
    }
    std::set<std::pair<State, Symbol>> dfa_edges;
    for (const auto& t : j.at("transitions")) {
        if (!t.is_object() || !t.contains("from") || !t.contains("symbol") || !t.contains("to") ||
            !t.at("from").is_string() || !t.at("symbol").is_string() || !t.at("to").is_string()) {
            bad_format("each transition must be {from, symbol, to} with string values");
        }
        State from = lookup_state(t.at("from").get<std::string>(), "transition");
        State to = lookup_state(t.at("to").get<std::string>(), "transition");
        const std::string symbol = t.at("symbol").get<std::string>();
        if (symbol.empty()) {
            if (dfa_style) bad_format("epsilon transitions are not allowed in a DFA file");
            n.add_epsilon(from, to);
            continue;
        }
        auto s = alphabet.index_of(symbol);
        if (!s) bad_format("transition references undeclared symbol '" + symbol + "'");
        if (dfa_style && !dfa_edges.emplace(from, *s).second) {
            bad_format("DFA file repeats transition for state '" +
                       t.at("from").get<std::string>() + "' on symbol '" + symbol + "'");
        }
        n.add_transition(from, *s, to);
    }
    return n;
}

Nfa load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open automaton file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("cannot parse automaton file " + path + ": " + e.what());
    }
    return parse_automaton(j);
}

nlohmann::ordered_json dfa_to_json(const Dfa& d) {
    // BFS renumbering from the start state; unreachable states carry no
    // language and are dropped.
    std::vector<State> order;
    std::vector<State> renum(d.num_states, d.num_states);
    std::deque<State> work;
    renum[d.start] = 0;
    order.push_back(d.start);
    work.push_back(d.start);
    while (!work.empty()) {
        State q = work.front();
        work.pop_front();
        for (Symbol s = 0; s < d.alphabet.size(); ++s) {
            State t = d.delta[q][s];
            if (renum[t] == d.num_states) {
                renum[t] = order.size();
                order.push_back(t);
                work.push_back(t);
            }
        }
    }

    auto name_of = [](State q) { return "q" + std::to_string(q); };
    nlohmann::ordered_json j;
    j["alphabet"] = d.alphabet.names();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) names.push_back(name_of(i));
    j["states"] = names;
    j["start"] = name_of(0);
    std::vector<std::string> accept;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (d.accept[order[i]]) accept.push_back(name_of(i));
    }
    j["accept"] = accept;
    nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Symbol s = 0; s < d.alphabet.size(); ++s) {
            nlohmann::ordered_json t;
            t["from"] = name_of(i);
            t["symbol"] = d.alphabet.name(s);
            t["to"] = name_of(renum[d.delta[order[i]][s]]);
            transitions.push_back(t);
        }
    }
    j["transitions"] = transitions;
    return j;
}

void save_dfa(const Dfa& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write automaton file: " + path);
    }
    out << dfa_to_json(d).dump(2) << "\n";
}

}  // namespace wordkit
