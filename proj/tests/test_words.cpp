#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "wordkit/words.hpp"

using namespace wordkit;
using tests::all_words;
using tests::wb;

TEST_CASE("alphabet construction and validation") {
    const Alphabet b = Alphabet::binary();
    CHECK(b.size() == 2);
    CHECK(b.name(0) == "0");
    CHECK(b.name(1) == "1");
    CHECK(b.single_char());

    const Alphabet letters = Alphabet::from_spec("abc");
    CHECK(letters.size() == 3);
    CHECK(letters.index_of("b") == Symbol{1});
    CHECK_FALSE(letters.index_of("d").has_value());

    const Alphabet multi = Alphabet::from_spec("aa,bb,c");
    CHECK(multi.size() == 3);
    CHECK_FALSE(multi.single_char());
    CHECK(multi.name(0) == "aa");

    CHECK_THROWS_AS(Alphabet::from_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::from_spec("aba"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::from_spec("aa,aa"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::from_spec("a,,b"), std::invalid_argument);
}

TEST_CASE("word parsing and formatting round-trip") {
    const Alphabet b = Alphabet::binary();
    CHECK(b.parse_word("0110") == Word{0, 1, 1, 0});
    CHECK(b.parse_word("").empty());
    CHECK(b.format_word({0, 1, 1, 0}) == "0110");
    CHECK_THROWS_AS(b.parse_word("012"), std::invalid_argument);

    const Alphabet multi = Alphabet::from_spec("aa,bb");
    const Word w = multi.parse_word("aa,bb,aa");
    CHECK(w == Word{0, 1, 0});
    CHECK(multi.format_word(w) == "aa,bb,aa");
    CHECK(multi.parse_word("").empty());
    CHECK_THROWS_AS(multi.parse_word("aa,cc"), std::invalid_argument);

    for (const Word& v : all_words(2, 5)) {
        CHECK(b.parse_word(b.format_word(v)) == v);
    }
}

TEST_CASE("reversed") {
    const Alphabet no = Alphabet::from_spec("no");
    CHECK(reversed(no.parse_word("no")) == no.parse_word("on"));
    CHECK(reversed(Word{}).empty());
    CHECK(reversed(wb("0110")) == wb("0110"));
}

TEST_CASE("perfect shuffle interleaves") {
    const Alphabet no = Alphabet::from_spec("no");
    CHECK(perfect_shuffle(no.parse_word("no"), no.parse_word("on")) == no.parse_word("noon"));
    CHECK(perfect_shuffle(Word{}, Word{}).empty());
    CHECK(perfect_shuffle(wb("01"), wb("10")) == wb("0110"));
    CHECK_THROWS_AS(perfect_shuffle(wb("01"), wb("0")), std::invalid_argument);
}

TEST_CASE("unshuffle splits") {
    const Alphabet no = Alphabet::from_spec("no");
    const auto [x, y] = unshuffle(no.parse_word("noon"));
    CHECK(x == no.parse_word("no"));
    CHECK(y == no.parse_word("on"));
    CHECK(unshuffle(Word{}) == std::pair<Word, Word>{});
    CHECK(unshuffle(wb("0110")) == std::pair<Word, Word>{wb("01"), wb("10")});
    CHECK_THROWS_AS(unshuffle(wb("011")), std::invalid_argument);
}

TEST_CASE("shuffle and unshuffle invert each other") {
    for (std::size_t half = 0; half <= 5; ++half) {
        for (const Word& x : all_words(2, half)) {
            for (const Word& y : all_words(2, half)) {
                const Word mixed = perfect_shuffle(x, y);
                CHECK(unshuffle(mixed) == std::pair<Word, Word>{x, y});
            }
        }
    }
    for (std::size_t len = 0; len <= 10; len += 2) {
        for (const Word& w : all_words(2, len)) {
            const auto [x, y] = unshuffle(w);
            CHECK(perfect_shuffle(x, y) == w);
        }
    }
}

TEST_CASE("odd-index extraction takes the first symbol of every pair") {
    CHECK(odd_index_extract(wb("0110")) == wb("01"));
    CHECK(odd_index_extract(wb("00")) == wb("0"));
    CHECK(odd_index_extract(wb("010010")) == wb("001"));
    CHECK(odd_index_extract(Word{}).empty());
    CHECK_THROWS_AS(odd_index_extract(wb("011")), std::invalid_argument);

    for (const Word& w : all_words(2, 8)) {
        CHECK(odd_index_extract(w) == unshuffle(w).first);
    }
}
