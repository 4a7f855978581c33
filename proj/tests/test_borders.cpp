#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "support.hpp"

using namespace wordkit;
using tests::all_words;
using tests::brute_is_unbordered;
using tests::brute_longest_border;
using tests::wb;

TEST_CASE("border array of known words") {
    const Alphabet letters = Alphabet::from_spec("entaglm");
    const BorderArray ba = border_array(letters.parse_word("entanglement"));
    CHECK(ba.longest ==
          std::vector<std::size_t>{0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 3});
    CHECK(ba.longest.back() == 3);  // the word begins and ends with "ent"

    CHECK(border_array(wb("0")).longest == std::vector<std::size_t>{0});
    CHECK(border_array(wb("0110")).longest.back() == 1);
    CHECK_THROWS_AS(border_array(Word{}), std::invalid_argument);
}

TEST_CASE("border array matches the quadratic reference on small words") {
    for (std::size_t len = 1; len <= 12; ++len) {
        for (const Word& w : all_words(2, len)) {
            const BorderArray ba = border_array(w);
            REQUIRE(ba.longest.size() == len);
            CHECK(ba.longest[0] == 0);
            for (std::size_t i = 0; i < len; ++i) {
                CHECK(ba.longest[i] <= i);
                if (i > 0) CHECK(ba.longest[i] <= ba.longest[i - 1] + 1);
                const Word prefix(w.begin(), w.begin() + i + 1);
                CHECK(ba.longest[i] == brute_longest_border(prefix));
            }
        }
    }
    for (std::size_t len = 1; len <= 7; ++len) {
        for (const Word& w : all_words(3, len)) {
            CHECK(border_array(w).longest.back() == brute_longest_border(w));
        }
    }
}

TEST_CASE("unbordered test") {
    const Alphabet no = Alphabet::from_spec("no");
    CHECK(is_unbordered(no.parse_word("no")));
    CHECK_FALSE(is_unbordered(wb("00")));
    CHECK(is_unbordered(wb("0001")));
    CHECK_THROWS_AS(is_unbordered(Word{}), std::invalid_argument);

    for (std::size_t len = 1; len <= 12; ++len) {
        for (const Word& w : all_words(2, len)) {
            CHECK(is_unbordered(w) == brute_is_unbordered(w));
            CHECK(is_unbordered(w) == (border_array(w).longest.back() == 0));
        }
    }
}

TEST_CASE("unbordered enumeration lists exactly the brute-force filter") {
    CHECK(unbordered_words(2, 1) == tests::wbs({"0", "1"}));
    CHECK(unbordered_words(2, 2) == tests::wbs({"01", "10"}));
    CHECK(unbordered_words(2, 4) ==
          tests::wbs({"0001", "0011", "0111", "1000", "1100", "1110"}));
    CHECK_THROWS_AS(unbordered_words(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(unbordered_words(0, 3), std::invalid_argument);

    for (std::size_t len = 1; len <= 10; ++len) {
        std::vector<Word> expected;
        for (const Word& w : all_words(2, len)) {
            if (brute_is_unbordered(w)) expected.push_back(w);
        }
        const std::vector<Word> got = unbordered_words(2, len);
        CHECK(got == expected);  // same set, lexicographic order
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
    for (std::size_t len = 1; len <= 6; ++len) {
        std::vector<Word> expected;
        for (const Word& w : all_words(3, len)) {
            if (brute_is_unbordered(w)) expected.push_back(w);
        }
        CHECK(unbordered_words(3, len) == expected);
    }
}

TEST_CASE("enumeration sink can stop early") {
    std::size_t seen = 0;
    enumerate_unbordered(2, 8, [&](const Word&) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("count table follows the recurrence and the enumeration") {
    const CountTable k2 = count_unbordered(2, 12);
    const std::vector<BigInt> expected_k2{2, 2, 4, 6, 12, 20, 40, 74, 148, 284, 568, 1116};
    CHECK(k2.values == expected_k2);
    CHECK(k2.at(1) == 2);
    CHECK(k2.at(12) == 1116);
    CHECK_THROWS_AS(k2.at(0), std::out_of_range);
    CHECK_THROWS_AS(k2.at(13), std::out_of_range);

    const CountTable k3 = count_unbordered(3, 8);
    CHECK(k3.values == std::vector<BigInt>{3, 6, 18, 48, 144, 414, 1242, 3678});

    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(BigInt(unbordered_words(2, n).size()) == k2.at(n));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(BigInt(unbordered_words(3, n).size()) == k3.at(n));
    }

    CHECK_THROWS_AS(count_unbordered(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(count_unbordered(2, 0), std::invalid_argument);
}

TEST_CASE("density values and monotonicity") {
    CHECK(unbordered_density(2, 1) == BigRational(1));
    CHECK(unbordered_density(2, 8) == BigRational(74, 256));
    CHECK(decimal_string(unbordered_density(2, 8), 7) == "0.2890625");

    for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
        BigRational prev = unbordered_density(k, 1);
        for (std::size_t n = 2; n <= 60; ++n) {
            const BigRational cur = unbordered_density(k, n);
            if (n % 2 == 1) {
                CHECK(cur == prev);  // odd steps multiply both sides by k
            } else {
                CHECK(cur < prev);
            }
            prev = cur;
        }
    }
}

TEST_CASE("the length-50 density matches the known constant") {
    const CountTable table = count_unbordered(2, 50);
    CHECK(table.at(50) == BigInt("301501187441384"));

    const BigRational density = unbordered_density(2, 50);
    const BigRational target(2677868, 10000000);
    const BigRational err = density > target ? density - target : target - density;
    CHECK(err < BigRational(5, 10000000));
    CHECK(decimal_string(density, 7) == "0.2677868");
}

TEST_CASE("decimal rendering rounds half-up") {
    CHECK(decimal_string(BigRational(1, 8), 2) == "0.13");
    CHECK(decimal_string(BigRational(1, 3), 7) == "0.3333333");
    CHECK(decimal_string(BigRational(2, 3), 3) == "0.667");
    CHECK(decimal_string(BigRational(1999, 1000), 2) == "2.00");
    CHECK(decimal_string(BigRational(1, 2), 0) == "1");
    CHECK(decimal_string(BigRational(0), 3) == "0.000");
    CHECK(decimal_string(BigRational(5), 1) == "5.0");
    CHECK_THROWS_AS(decimal_string(BigRational(-1, 2), 2), std::invalid_argument);
}
