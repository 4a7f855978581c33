#ifndef WORDKIT_PALSTARS_HPP
#define WORDKIT_PALSTARS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wordkit/borders.hpp"
#include "wordkit/words.hpp"

namespace wordkit {

/// Membership in PAL: nonempty, even length, equal to its own reverse.
bool is_even_palindrome(const Word& w);

/// All even lengths L with 2 <= L <= |w| whose prefix is an even palindrome,
/// ascending.  Linear-time palindrome-radius sweep.
std::vector<std::size_t> even_palindromic_prefixes(const Word& w);

/// Quadratic reference for even_palindromic_prefixes: checks each even
/// prefix directly.  Kept as the correctness baseline for the sweep.
std::vector<std::size_t> even_palindromic_prefixes_quadratic(const Word& w);

/// The unique factorization of a palstar into prime palstars.  Factors
/// concatenate to word; each factor is a nonempty even palindrome not
/// expressible as a product of two nonempty palstars.
struct PalstarFactorization {
    Word word;
    std::vector<Word> factors;
};

/// Greedy factorization: repeatedly strips the shortest even palindromic
/// prefix of the remainder.  That prefix is necessarily a prime palstar
/// (a composite one would contain a shorter even palindromic prefix), and
/// since no prime palstar is a proper prefix of another it is the unique
/// first factor.  Returns nullopt when w is not a palstar; the empty word
/// factors into the empty list.
std::optional<PalstarFactorization> factor_palstar(const Word& w);

/// Membership in PAL*.  The empty word is a palstar.
bool is_palstar(const Word& w);

/// Prime-palstar test, shuffle route: w is the perfect shuffle of an
/// unbordered word with its reverse.
bool is_prime_palstar(const Word& w);

/// Prime-palstar test, factorization route: w is a palstar whose
/// factorization has exactly one factor.  Must agree with the shuffle
/// route everywhere.
bool is_prime_palstar_by_factorization(const Word& w);
bool is_prime_palstar_by_shuffle(const Word& w);

/// perfect_shuffle(z, reversed(z)) for unbordered z; the result is a prime
/// palstar of length 2|z|.  Throws if z is empty or bordered.
Word prime_palstar_of(const Word& z);

/// The unique unbordered z with w = perfect_shuffle(z, reversed(z)), when
/// w is a prime palstar; nullopt otherwise.
std::optional<Word> unbordered_root_of(const Word& w);

/// Streams the prime palstars of length 2 * half_length, produced as
/// prime_palstar_of over the unbordered words of half_length in
/// lexicographic order.  Note the image order is not itself lexicographic.
void enumerate_prime_palstars(std::size_t alphabet_size, std::size_t half_length,
                              const WordSink& sink);

std::vector<Word> prime_palstars(std::size_t alphabet_size, std::size_t half_length);

/// Independent palstar oracle: dynamic programming over prefixes,
/// reachable[i] = exists j < i with reachable[j] and w[j..i) an even
/// palindrome.  Quadratic; rejects inputs longer than max_length.
bool oracle_is_palstar(const Word& w, std::size_t max_length = 16);

/// For an even-length palindromic palstar, checks that the factor sequence
/// is itself symmetric (factors[i] == factors[m-1-i]); always true, kept as
/// a runtime assertion and test hook.  Throws if w is not an even
/// palindrome or not a palstar.
bool check_symmetric_factorization(const Word& w);

}  // namespace wordkit

#endif
