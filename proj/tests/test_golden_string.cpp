#include "fibdecomp/golden_string.hpp"

#include "fibdecomp/decomposition.hpp"

#include <catch2/catch_amalgamated.hpp>

using fibdecomp::GoldenLetter;
using fibdecomp::Natural;

namespace {
// the first letters of the golden string as printed in the literature
constexpr const char* kPrefix21 = "BABBABABBABBABABBABAB";
}  // namespace

TEST_CASE("fibonacci_word base cases and recurrence examples", "[golden]") {
    CHECK(fibdecomp::fibonacci_word(1) == "B");
    CHECK(fibdecomp::fibonacci_word(2) == "BA");
    CHECK(fibdecomp::fibonacci_word(3) == "BAB");
    CHECK(fibdecomp::fibonacci_word(4) == "BABBA");
    CHECK(fibdecomp::fibonacci_word(5) == "BABBABAB");
    CHECK_THROWS_AS(fibdecomp::fibonacci_word(0), std::invalid_argument);
}

TEST_CASE("fibonacci_word length and nesting", "[golden]") {
    for (unsigned k = 1; k <= 22; ++k) {
        const std::string word = fibdecomp::fibonacci_word(k);
        CHECK(Natural(static_cast<unsigned long>(word.size())) == fibdecomp::fib(k + 1));
        const std::string next = fibdecomp::fibonacci_word(k + 1);
        CHECK(next.compare(0, word.size(), word) == 0);
        if (k >= 3) {
            CHECK(word == fibdecomp::fibonacci_word(k - 1) + fibdecomp::fibonacci_word(k - 2));
        }
    }
}

TEST_CASE("golden_prefix materializes the infinite string", "[golden]") {
    CHECK(fibdecomp::golden_prefix(0).empty());
    CHECK(fibdecomp::golden_prefix(1) == "B");
    CHECK(fibdecomp::golden_prefix(2) == "BA");
    CHECK(fibdecomp::golden_prefix(21) == kPrefix21);
}

TEST_CASE("count_b examples", "[golden]") {
    CHECK(fibdecomp::count_b(0) == 0);
    CHECK(fibdecomp::count_b(1) == 1);
    CHECK(fibdecomp::count_b(8) == 5);
}

TEST_CASE("letter_at matches the quoted prefix", "[golden]") {
    CHECK(fibdecomp::letter_at(1) == GoldenLetter::B);
    CHECK(fibdecomp::letter_at(2) == GoldenLetter::A);
    CHECK(fibdecomp::letter_at(21) == GoldenLetter::B);
    for (std::size_t j = 1; j <= 21; ++j) {
        CHECK(fibdecomp::to_char(fibdecomp::letter_at(Natural(static_cast<unsigned long>(j)))) ==
              kPrefix21[j - 1]);
    }
    CHECK_THROWS_AS(fibdecomp::letter_at(0), std::invalid_argument);
}

TEST_CASE("letter_at agrees with a long materialized prefix", "[golden]") {
    const std::size_t length = 20000;
    const std::string prefix = fibdecomp::golden_prefix(length);
    long first_bad = -1;
    for (std::size_t j = 1; j <= length && first_bad < 0; ++j) {
        if (fibdecomp::to_char(fibdecomp::letter_at(Natural(static_cast<unsigned long>(j)))) !=
            prefix[j - 1]) {
            first_bad = static_cast<long>(j);
        }
    }
    REQUIRE(first_bad == -1);
}

TEST_CASE("landmark letters at F(2m+1) positions", "[golden]") {
    for (unsigned m = 1; m <= 10; ++m) {
        const Natural f = fibdecomp::fib(2 * m + 1);
        CHECK(fibdecomp::letter_at(f - 1) == GoldenLetter::B);
        CHECK(fibdecomp::letter_at(f) == GoldenLetter::A);
        if (m >= 2) {
            CHECK(fibdecomp::letter_at(2 * f - 1) == GoldenLetter::B);
            CHECK(fibdecomp::letter_at(2 * f) == GoldenLetter::A);
        }
    }
    // the doubled positions start at m = 2: the fourth letter is B, not A
    CHECK(fibdecomp::letter_at(4) == GoldenLetter::B);
}

TEST_CASE("drop_last_two", "[golden]") {
    CHECK(fibdecomp::drop_last_two("BABBA") == "BAB");
    CHECK(fibdecomp::drop_last_two("BA").empty());
    CHECK(fibdecomp::drop_last_two("BABBABAB") == "BABBAB");
    CHECK_THROWS_AS(fibdecomp::drop_last_two("B"), std::invalid_argument);
    CHECK_THROWS_AS(fibdecomp::drop_last_two(""), std::invalid_argument);
}

TEST_CASE("truncation commutes with swapping consecutive words", "[golden]") {
    for (unsigned n = 1; n <= 16; ++n) {
        const std::string a = fibdecomp::fibonacci_word(n);
        const std::string b = fibdecomp::fibonacci_word(n + 1);
        CHECK(fibdecomp::drop_last_two(a + b) == fibdecomp::drop_last_two(b + a));
        if (n >= 2) {
            // per-operand form, defined once |S(n)| >= 2
            CHECK(a + fibdecomp::drop_last_two(b) == b + fibdecomp::drop_last_two(a));
        }
    }
}

TEST_CASE("prefix repetition and tail window", "[golden]") {
    CHECK(fibdecomp::check_prefix_repetition(4));
    CHECK(fibdecomp::check_prefix_repetition(5));
    CHECK(fibdecomp::check_prefix_repetition(10));
    CHECK_THROWS_AS(fibdecomp::check_prefix_repetition(3), std::invalid_argument);

    CHECK(fibdecomp::check_tail_window(5));
    CHECK(fibdecomp::check_tail_window(6));
    CHECK(fibdecomp::check_tail_window(12));
    CHECK_THROWS_AS(fibdecomp::check_tail_window(4), std::invalid_argument);
}

TEST_CASE("first F(n) letters reappear after position F(n+1)", "[golden]") {
    const std::string prefix = fibdecomp::golden_prefix(
        static_cast<std::size_t>(fibdecomp::fib(18).get_ui()));
    for (unsigned n = 2; n <= 16; ++n) {
        const std::size_t len = static_cast<std::size_t>(fibdecomp::fib(n).get_ui());
        const std::size_t start = static_cast<std::size_t>(fibdecomp::fib(n + 1).get_ui());
        CHECK(prefix.compare(0, len, prefix, start, len) == 0);
    }
}

TEST_CASE("Zeckendorf indices assemble the golden prefix", "[golden]") {
    const std::size_t limit = 2000;
    const std::string prefix = fibdecomp::golden_prefix(limit);
    long first_bad = -1;
    for (std::size_t n = 1; n <= limit && first_bad < 0; ++n) {
        const fibdecomp::ZeckDecomposition d =
            fibdecomp::zeckendorf(Natural(static_cast<unsigned long>(n)));
        std::string concat;
        for (auto it = d.indices.rbegin(); it != d.indices.rend(); ++it) {
            concat += fibdecomp::fibonacci_word(*it - 1);
        }
        if (concat != prefix.substr(0, n)) first_bad = static_cast<long>(n);
    }
    REQUIRE(first_bad == -1);
}
