#include "wordkit/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordkit {

Word reversed(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

Word perfect_shuffle(const Word& x, const Word& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("perfect shuffle requires equal lengths, got " +
                                    std::to_string(x.size()) + " and " +
                                    std::to_string(y.size()));
    }
    Word out;
    out.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i]);
        out.push_back(y[i]);
    }
    return out;
}

std::pair<Word, Word> unshuffle(const Word& w) {
    if (w.size() % 2 != 0) {
        throw std::invalid_argument("unshuffle requires even length, got " +
                                    std::to_string(w.size()));
    }
    Word x, y;
    x.reserve(w.size() / 2);
    y.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) {
        x.push_back(w[i]);
        y.push_back(w[i + 1]);
    }
    return {std::move(x), std::move(y)};
}

Word odd_index_extract(const Word& w) {
    if (w.size() % 2 != 0) {
        throw std::invalid_argument("odd-index extraction requires even length, got " +
                                    std::to_string(w.size()));
    }
    Word out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) out.push_back(w[i]);
    return out;
}

}  // namespace wordkit
