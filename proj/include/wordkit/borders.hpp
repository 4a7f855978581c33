#ifndef WORDKIT_BORDERS_HPP
#define WORDKIT_BORDERS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "wordkit/alphabet.hpp"
#include "wordkit/bigint.hpp"

namespace wordkit {

/// Longest-border table of a word.  longest[i] is the length of the longest
/// border of the prefix of length i + 1, a border being a nonempty proper
/// prefix that is also a suffix.  Always: longest[0] == 0, longest[i] <= i,
/// longest[i+1] <= longest[i] + 1.
struct BorderArray {
    Word word;
    std::vector<std::size_t> longest;
};

/// Failure-function construction, linear in |w|.  Throws on the empty word.
BorderArray border_array(const Word& w);

/// True iff w has no border, i.e. w is not of the form xyx with x nonempty.
/// Throws on the empty word.
bool is_unbordered(const Word& w);

/// Consumer for streamed enumeration; return false to stop early.
using WordSink = std::function<bool(const Word&)>;

/// Streams the unbordered words of the given length over symbols
/// 0..alphabet_size-1 in lexicographic order.  DFS over prefix extensions
/// with an incrementally maintained border array; the last symbol is never
/// allowed to equal the first (a length-1 border).  Throws if length == 0
/// or alphabet_size == 0.
void enumerate_unbordered(std::size_t alphabet_size, std::size_t length, const WordSink& sink);

std::vector<Word> unbordered_words(std::size_t alphabet_size, std::size_t length);

/// Exact counts of unbordered words, values[i] holding the count for
/// length i + 1.  Satisfies: a_1 = k; a_n = k*a_{n-1} - a_{n/2} for even n;
/// a_n = k*a_{n-1} for odd n > 1.
struct CountTable {
    std::size_t alphabet_size = 0;
    std::vector<BigInt> values;

    const BigInt& at(std::size_t length) const;  // 1-based
};

CountTable count_unbordered(std::size_t alphabet_size, std::size_t max_length);

/// a_n / k^n as an exact rational.  Tends to a constant c_k as n grows
/// (about 0.2677868 for k = 2).
BigRational unbordered_density(std::size_t alphabet_size, std::size_t length);

/// Fixed-point decimal rendering of a nonnegative rational, rounded
/// half-up to the given number of fractional digits.
std::string decimal_string(const BigRational& value, unsigned digits);

}  // namespace wordkit

#endif
