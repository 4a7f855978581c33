#include "wordkit/borders.hpp"

#include <stdexcept>

namespace wordkit {

BorderArray border_array(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("border array of the empty word is undefined");
    }
    BorderArray result;
    result.word = w;
    result.longest.assign(w.size(), 0);
    std::vector<std::size_t>& f = result.longest;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t j = f[i - 1];
        while (j > 0 && w[i] != w[j]) j = f[j - 1];
        if (w[i] == w[j]) ++j;
        f[i] = j;
    }
    return result;
}

bool is_unbordered(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("borderedness of the empty word is undefined");
    }
    // Same scan as border_array, without keeping the table.
    std::vector<std::size_t> f(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t j = f[i - 1];
        while (j > 0 && w[i] != w[j]) j = f[j - 1];
        if (w[i] == w[j]) ++j;
        f[i] = j;
    }
    return f.back() == 0;
}

namespace {

// DFS over prefix extensions.  The border array of the current prefix is
// maintained incrementally; a word is unbordered iff its last entry is 0.
// Interior prefixes cannot be pruned (a live border constraint completes
// only at the leaf), but the final symbol may never equal the first.
bool extend(Word& w, std::vector<std::size_t>& f, std::size_t length,
            std::size_t alphabet_size, const WordSink& sink) {
    const std::size_t depth = w.size();
    for (Symbol s = 0; s < alphabet_size; ++s) {
        if (depth + 1 == length && length >= 2 && s == w[0]) continue;
        std::size_t j = 0;
        if (depth > 0) {
            j = f[depth - 1];
            while (j > 0 && s != w[j]) j = f[j - 1];
            if (s == w[j]) ++j;
        }
        w.push_back(s);
        f.push_back(j);
        bool keep_going = true;
        if (depth + 1 == length) {
            if (f.back() == 0) keep_going = sink(w);
        } else {
            keep_going = extend(w, f, length, alphabet_size, sink);
        }
        w.pop_back();
        f.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void enumerate_unbordered(std::size_t alphabet_size, std::size_t length, const WordSink& sink) {
    if (length == 0) {
        throw std::invalid_argument("unbordered enumeration requires length >= 1");
    }
    if (alphabet_size == 0) {
        throw std::invalid_argument("unbordered enumeration requires a nonempty alphabet");
    }
    Word w;
    std::vector<std::size_t> f;
    w.reserve(length);
    f.reserve(length);
    extend(w, f, length, alphabet_size, sink);
}

std::vector<Word> unbordered_words(std::size_t alphabet_size, std::size_t length) {
    std::vector<Word> out;
    enumerate_unbordered(alphabet_size, length, [&](const Word& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

const BigInt& CountTable::at(std::size_t length) const {
    if (length == 0 || length > values.size()) {
        throw std::out_of_range("count table has no entry for length " + std::to_string(length));
    }
    return values[length - 1];
}

CountTable count_unbordered(std::size_t alphabet_size, std::size_t max_length) {
    if (alphabet_size == 0) {
        throw std::invalid_argument("counting requires alphabet size >= 1");
    }
    if (max_length == 0) {
        throw std::invalid_argument("counting requires max length >= 1");
    }
    CountTable table;
    table.alphabet_size = alphabet_size;
    table.values.reserve(max_length);
    const BigInt k = alphabet_size;
    for (std::size_t n = 1; n <= max_length; ++n) {
        if (n == 1) {
            table.values.push_back(k);
        } else if (n % 2 == 0) {
            table.values.push_back(k * table.values[n - 2] - table.values[n / 2 - 1]);
        } else {
            table.values.push_back(k * table.values[n - 2]);
        }
    }
    return table;
}

BigRational unbordered_density(std::size_t alphabet_size, std::size_t length) {
    if (length == 0) {
        throw std::invalid_argument("density requires length >= 1");
    }
    CountTable table = count_unbordered(alphabet_size, length);
    BigInt denom = 1;
    for (std::size_t i = 0; i < length; ++i) denom *= BigInt(alphabet_size);
    return BigRational(table.values.back(), denom);
}

std::string decimal_string(const BigRational& value, unsigned digits) {
    if (value < 0) {
        throw std::invalid_argument("decimal rendering expects a nonnegative value");
    }
    BigInt num = numerator(value);
    const BigInt den = denominator(value);
    BigInt integer_part = num / den;
    BigInt frac = num % den;
    std::string frac_digits;
    frac_digits.reserve(digits);
    for (unsigned i = 0; i < digits; ++i) {
        frac *= 10;
        BigInt d = frac / den;
        frac %= den;
        frac_digits += static_cast<char>('0' + d.convert_to<int>());
    }
    // Round half-up on the remainder, propagating carries.
    if (2 * frac >= den) {
        std::size_t i = frac_digits.size();
        while (i > 0 && frac_digits[i - 1] == '9') frac_digits[--i] = '0';
        if (i == 0) {
            ++integer_part;
        } else {
            ++frac_digits[i - 1];
        }
    }
    std::string out = integer_part.str();
    if (digits > 0) {
        out += '.';
        out += frac_digits;
    }
    return out;
}

}  // namespace wordkit
