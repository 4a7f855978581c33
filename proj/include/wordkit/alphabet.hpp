#ifndef WORDKIT_ALPHABET_HPP
#define WORDKIT_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordkit {

using Symbol = std::uint32_t;

/// A word is a finite sequence of alphabet-symbol indices.  Text parsing
/// and formatting happen only at CLI/file boundaries, via Alphabet.
using Word = std::vector<Symbol>;

/// Ordered finite alphabet of distinct symbols.  The ordering is total and
/// fixed; enumeration and lexicographic comparisons follow it.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    static Alphabet binary();

    /// Builds an alphabet from a CLI spec string: "01" declares the
    /// single-character symbols 0 and 1; a spec containing commas
    /// ("aa,bb,c") declares comma-separated multi-character symbols.
    static Alphabet from_spec(std::string_view spec);

    std::size_t size() const { return symbols_.size(); }
    const std::string& name(Symbol s) const { return symbols_.at(s); }
    const std::vector<std::string>& names() const { return symbols_; }
    std::optional<Symbol> index_of(std::string_view name) const;

    /// True when every symbol is a single character, so words read as
    /// plain character strings.
    bool single_char() const { return single_char_; }

    /// Parses a word; single-char alphabets read one symbol per character,
    /// others expect comma-separated symbol names.  Unknown symbols throw.
    Word parse_word(std::string_view text) const;
    std::string format_word(const Word& w) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Symbol> index_;
    bool single_char_ = true;
};

}  // namespace wordkit

#endif
