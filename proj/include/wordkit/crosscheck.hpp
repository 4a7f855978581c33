#ifndef WORDKIT_CROSSCHECK_HPP
#define WORDKIT_CROSSCHECK_HPP

#include <cstddef>
#include <vector>

#include "wordkit/bigint.hpp"
#include "wordkit/palstars.hpp"

namespace wordkit {

/// Result of the brute-force identity check PRIMEPALSTAR = PALSTAR^-*
/// over all binary words of length <= 2 * max_half_length.
struct CrosscheckReport {
    std::size_t max_half_length = 0;
    /// Per half-length n = 1..max: count from the recurrence (a_n) and the
    /// count of enumerated prime palstars of length 2n (b_n).
    std::vector<BigInt> recurrence_counts;
    std::vector<std::size_t> enumerated_counts;
    /// Words where membership in PALSTAR+ - PALSTAR+PALSTAR+ (computed with
    /// the palstar oracle) disagrees with the prime-palstar recognizer, or
    /// where the recognizer disagrees with the shuffle-image set.
    std::vector<Word> mismatches;
    std::size_t words_checked = 0;

    bool agree() const { return mismatches.empty(); }
};

/// Exhaustive over binary words of length 1..2*max_half_length; requires
/// max_half_length >= 1 and 2*max_half_length <= oracle_bound (the
/// brute-force side uses oracle_is_palstar).  Throws otherwise.
CrosscheckReport run_crosscheck(std::size_t max_half_length, std::size_t oracle_bound = 16);

}  // namespace wordkit

#endif
