#include "wordkit/palstars.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace wordkit {

namespace {

// Even-center palindrome radii: d[c] is the largest r such that
// s[c-1-j] == s[c+j] for all j < r, for every gap c in 1..n-1.
std::vector<std::size_t> even_pal_radii(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> d(n + 1, 0);
    std::size_t l = 0, r = 0;  // rightmost known palindrome covers [l, r)
    for (std::size_t c = 1; c < n; ++c) {
        std::size_t k = 0;
        if (c < r) k = std::min(d[l + r - c], r - c);
        while (k < c && c + k < n && s[c - k - 1] == s[c + k]) ++k;
        d[c] = k;
        if (c + k > r) {
            l = c - k;
            r = c + k;
        }
    }
    return d;
}

// Length of the shortest even palindromic prefix of s, or 0 if none.
// Same sweep as even_pal_radii, stopping at the first gap c whose
// palindrome reaches back to position 0.
std::size_t shortest_even_pal_prefix(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> d(n + 1, 0);
    std::size_t l = 0, r = 0;
    for (std::size_t c = 1; c < n; ++c) {
        std::size_t k = 0;
        if (c < r) k = std::min(d[l + r - c], r - c);
        while (k < c && c + k < n && s[c - k - 1] == s[c + k]) ++k;
        d[c] = k;
        if (k >= c) return 2 * c;
        if (c + k > r) {
            l = c - k;
            r = c + k;
        }
    }
    return 0;
}

}  // namespace

bool is_even_palindrome(const Word& w) {
    if (w.size() < 2 || w.size() % 2 != 0) return false;
    for (std::size_t i = 0, j = w.size() - 1; i < j; ++i, --j) {
        if (w[i] != w[j]) return false;
    }
    return true;
}

std::vector<std::size_t> even_palindromic_prefixes(const Word& w) {
    std::vector<std::size_t> out;
    if (w.size() < 2) return out;
    const std::vector<std::size_t> d = even_pal_radii(std::span<const Symbol>(w));
    for (std::size_t c = 1; 2 * c <= w.size(); ++c) {
        if (d[c] >= c) out.push_back(2 * c);
    }
    return out;
}

std::vector<std::size_t> even_palindromic_prefixes_quadratic(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t len = 2; len <= w.size(); len += 2) {
        bool pal = true;
        for (std::size_t i = 0, j = len - 1; i < j; ++i, --j) {
            if (w[i] != w[j]) {
                pal = false;
                break;
            }
        }
        if (pal) out.push_back(len);
    }
    return out;
}

std::optional<PalstarFactorization> factor_palstar(const Word& w) {
    PalstarFactorization result;
    result.word = w;
    std::span<const Symbol> rest(w);
    while (!rest.empty()) {
        const std::size_t len = shortest_even_pal_prefix(rest);
        if (len == 0) return std::nullopt;
        result.factors.emplace_back(rest.begin(), rest.begin() + len);
        rest = rest.subspan(len);
    }
    return result;
}

bool is_palstar(const Word& w) {
    return factor_palstar(w).has_value();
}

bool is_prime_palstar(const Word& w) {
    return is_prime_palstar_by_shuffle(w);
}

bool is_prime_palstar_by_factorization(const Word& w) {
    auto f = factor_palstar(w);
    return f && f->factors.size() == 1;
}

bool is_prime_palstar_by_shuffle(const Word& w) {
    if (w.size() < 2 || w.size() % 2 != 0) return false;
    auto [x, y] = unshuffle(w);
    return y == reversed(x) && is_unbordered(x);
}

Word prime_palstar_of(const Word& z) {
    if (z.empty() || !is_unbordered(z)) {
        throw std::invalid_argument("prime palstar construction requires an unbordered word");
    }
    return perfect_shuffle(z, reversed(z));
}

std::optional<Word> unbordered_root_of(const Word& w) {
    if (w.size() < 2 || w.size() % 2 != 0) return std::nullopt;
    auto [x, y] = unshuffle(w);
    if (y != reversed(x) || !is_unbordered(x)) return std::nullopt;
    return x;
}

void enumerate_prime_palstars(std::size_t alphabet_size, std::size_t half_length,
                              const WordSink& sink) {
    enumerate_unbordered(alphabet_size, half_length, [&](const Word& z) {
        return sink(perfect_shuffle(z, reversed(z)));
    });
}

std::vector<Word> prime_palstars(std::size_t alphabet_size, std::size_t half_length) {
    std::vector<Word> out;
    enumerate_prime_palstars(alphabet_size, half_length, [&](const Word& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

bool oracle_is_palstar(const Word& w, std::size_t max_length) {
    if (w.size() > max_length) {
        throw std::invalid_argument("oracle input exceeds the configured bound of " +
                                    std::to_string(max_length));
    }
    const std::size_t n = w.size();
    std::vector<bool> reachable(n + 1, false);
    reachable[0] = true;
    for (std::size_t i = 2; i <= n; ++i) {
        for (std::size_t j = (i % 2 == 0) ? 0 : 1; j + 2 <= i; j += 2) {
            if (!reachable[j]) continue;
            bool pal = true;
            for (std::size_t a = j, b = i - 1; a < b; ++a, --b) {
                if (w[a] != w[b]) {
                    pal = false;
                    break;
                }
            }
            if (pal) {
                reachable[i] = true;
                break;
            }
        }
    }
    return reachable[n];
}

bool check_symmetric_factorization(const Word& w) {
    if (!is_even_palindrome(w)) {
        throw std::invalid_argument("symmetric factorization check requires an even palindrome");
    }
    auto f = factor_palstar(w);
    if (!f) {
        throw std::invalid_argument("symmetric factorization check requires a palstar");
    }
    const auto& xs = f->factors;
    for (std::size_t i = 0, j = xs.size() - 1; i < j; ++i, --j) {
        if (xs[i] != xs[j]) return false;
    }
    return true;
}

}  // namespace wordkit
