#pragma once

#include "fibdecomp/numeric.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibdecomp {

/// One letter of the golden string. Serializes as the single character
/// 'A' or 'B'.
enum class GoldenLetter : char { A = 'A', B = 'B' };

inline char to_char(GoldenLetter letter) { return static_cast<char>(letter); }

/// The k-th Fibonacci word: S(1) = "B", S(2) = "BA", S(k) = S(k-1):S(k-2).
/// Its length is F(k+1). Built iteratively, so large k carries no stack risk.
inline std::string fibonacci_word(unsigned k) {
    if (k == 0) throw std::invalid_argument("fibonacci_word: k starts at 1");
    std::string prev = "B";
    if (k == 1) return prev;
    std::string cur = "BA";
    for (unsigned i = 3; i <= k; ++i) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// First `length` letters of the infinite golden string.
inline std::string golden_prefix(std::size_t length) {
    std::string prev = "B";   // S(1)
    std::string word = "BA";  // S(2)
    // grow S(k) until it covers the request; each word is a prefix of the next
    while (word.size() < length) {
        std::string next = word + prev;
        prev = std::move(word);
        word = std::move(next);
    }
    word.resize(length);
    return word;
}

/// Number of B's among the first n letters of the golden string,
/// N_B(n) = floor((n+1)/phi). count_b(0) = 0.
inline Natural count_b(const Natural& n) { return floor_div_phi(n + 1); }

/// Letter at 1-based position j, from the B-count formula rather than a
/// materialized prefix, so arbitrarily deep positions cost one isqrt.
inline GoldenLetter letter_at(const Natural& j) {
    if (j == 0) throw std::invalid_argument("letter_at: positions are 1-based");
    return count_b(j) - count_b(j - 1) == 1 ? GoldenLetter::B : GoldenLetter::A;
}

/// Drops the final two letters of a finite string.
inline std::string drop_last_two(const std::string& word) {
    if (word.size() < 2) throw std::invalid_argument("drop_last_two: need at least two letters");
    return word.substr(0, word.size() - 2);
}

namespace detail {

// Materialization guard: refuse prefixes that would not fit in memory.
inline std::size_t checked_prefix_length(const Natural& length) {
    constexpr unsigned long kMaxPrefix = 1ul << 27;
    if (length > kMaxPrefix) {
        throw std::invalid_argument("golden prefix too long to materialize");
    }
    return static_cast<std::size_t>(length.get_ui());
}

}  // namespace detail

/// True iff letters 1..F(n) of the golden string equal letters F(n)+1..2F(n).
/// Holds for every n >= 4.
inline bool check_prefix_repetition(unsigned n) {
    if (n < 4) throw std::invalid_argument("check_prefix_repetition: needs n >= 4");
    std::size_t block = detail::checked_prefix_length(fib(n));
    std::string prefix = golden_prefix(2 * block);
    return prefix.compare(0, block, prefix, block, block) == 0;
}

/// True iff the first F(n-1)-2 letters equal the letters at positions
/// 2F(n)+1 .. F(n+2)-2. Holds for every n >= 5.
inline bool check_tail_window(unsigned n) {
    if (n < 5) throw std::invalid_argument("check_tail_window: needs n >= 5");
    std::size_t window = detail::checked_prefix_length(fib(n - 1) - 2);
    std::size_t start = detail::checked_prefix_length(2 * fib(n));  // 0-based offset of position 2F(n)+1
    std::string prefix = golden_prefix(start + window);
    return prefix.compare(0, window, prefix, start, window) == 0;
}

}  // namespace fibdecomp
