#include "wordkit/crosscheck.hpp"

#include <set>
#include <stdexcept>

namespace wordkit {

namespace {

// Membership in PALSTAR+ - PALSTAR+ PALSTAR+, computed entirely with the
// dynamic-programming palstar oracle.
bool bruteforce_is_generator(const Word& w, std::size_t oracle_bound) {
    if (w.empty() || !oracle_is_palstar(w, oracle_bound)) return false;
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Word left(w.begin(), w.begin() + cut);
        Word right(w.begin() + cut, w.end());
        if (oracle_is_palstar(left, oracle_bound) && oracle_is_palstar(right, oracle_bound)) {
            return false;
        }
    }
    return true;
}

}  // namespace

CrosscheckReport run_crosscheck(std::size_t max_half_length, std::size_t oracle_bound) {
    if (max_half_length == 0) {
        throw std::invalid_argument("crosscheck requires max half-length >= 1");
    }
    if (max_half_length > 8) {
        throw std::invalid_argument("crosscheck is exhaustive and limited to half-length <= 8");
    }
    if (2 * max_half_length > oracle_bound) {
        throw std::invalid_argument("crosscheck needs oracle bound >= " +
                                    std::to_string(2 * max_half_length));
    }

    CrosscheckReport report;
    report.max_half_length = max_half_length;
    report.recurrence_counts = count_unbordered(2, max_half_length).values;
    report.enumerated_counts.assign(max_half_length, 0);

    // Image of the unbordered words under z -> shuffle(z, reverse z).
    std::set<Word> image;
    for (std::size_t n = 1; n <= max_half_length; ++n) {
        enumerate_prime_palstars(2, n, [&](const Word& w) {
            image.insert(w);
            report.enumerated_counts[n - 1]++;
            return true;
        });
    }

    // Exhaustive sweep over binary words of length 1..2*max_half_length.
    for (std::size_t len = 1; len <= 2 * max_half_length; ++len) {
        Word w(len, 0);
        for (;;) {
            const bool brute = bruteforce_is_generator(w, oracle_bound);
            const bool recognized = is_prime_palstar(w);
            const bool in_image = image.count(w) > 0;
            if (brute != recognized || recognized != in_image) {
                report.mismatches.push_back(w);
            }
            report.words_checked++;
            std::size_t i = len;
            while (i > 0 && w[i - 1] == 1) w[--i] = 0;
            if (i == 0) break;
            w[i - 1] = 1;
        }
    }
    return report;
}

}  // namespace wordkit
