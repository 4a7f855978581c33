#include "wordkit/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordkit {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw std::invalid_argument("alphabet must declare at least one symbol");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const std::string& s = symbols_[i];
        if (s.empty()) {
            throw std::invalid_argument("alphabet symbols must be nonempty");
        }
        if (!index_.emplace(s, static_cast<Symbol>(i)).second) {
            throw std::invalid_argument("alphabet symbols must be distinct: '" + s + "'");
        }
        if (s.size() != 1) single_char_ = false;
    }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

Alphabet Alphabet::from_spec(std::string_view spec) {
    std::vector<std::string> symbols;
    if (spec.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            std::size_t comma = spec.find(',', pos);
            if (comma == std::string_view::npos) comma = spec.size();
            symbols.emplace_back(spec.substr(pos, comma - pos));
            pos = comma + 1;
        }
    } else {
        for (char c : spec) symbols.emplace_back(1, c);
    }
    return Alphabet(std::move(symbols));
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Word Alphabet::parse_word(std::string_view text) const {
    Word w;
    if (single_char_) {
        w.reserve(text.size());
        for (char c : text) {
            auto s = index_of(std::string_view(&c, 1));
            if (!s) {
                throw std::invalid_argument("symbol '" + std::string(1, c) +
                                            "' is not in the alphabet");
            }
            w.push_back(*s);
        }
        return w;
    }
    if (text.empty()) return w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        auto s = index_of(tok);
        if (!s) {
            throw std::invalid_argument("symbol '" + std::string(tok) +
                                        "' is not in the alphabet");
        }
        w.push_back(*s);
        pos = comma + 1;
    }
    return w;
}

std::string Alphabet::format_word(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_char_ && i > 0) out += ',';
        out += name(w[i]);
    }
    return out;
}

}  // namespace wordkit
