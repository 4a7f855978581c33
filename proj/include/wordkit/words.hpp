#ifndef WORDKIT_WORDS_HPP
#define WORDKIT_WORDS_HPP

#include <utility>

#include "wordkit/alphabet.hpp"

namespace wordkit {

Word reversed(const Word& w);

/// Interleaves two equal-length words: result[2i] = x[i], result[2i+1] = y[i].
/// Throws std::invalid_argument on a length mismatch.
Word perfect_shuffle(const Word& x, const Word& y);

/// Inverse of perfect_shuffle: splits an even-length word into its
/// odd-indexed and even-indexed tracks (1-indexed reading).
/// Throws std::invalid_argument on odd length.
std::pair<Word, Word> unshuffle(const Word& w);

/// First component of unshuffle(w): the letters at positions 1, 3, 5, ...
/// (1-indexed) of an even-length word.  Throws on odd length.
Word odd_index_extract(const Word& w);

}  // namespace wordkit

#endif
