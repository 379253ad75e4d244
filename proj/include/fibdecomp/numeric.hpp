#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibdecomp {

/// Arbitrary-precision non-negative integer. Every count, position and
/// Fibonacci value in this library flows through this type; precision grows
/// as needed, nothing ever wraps.
using Natural = mpz_class;

namespace detail {

// Internal invariant check, active in all build types.
inline void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

}  // namespace detail

/// Parses a plain base-10 numeral. Rejects signs, whitespace and anything
/// else that is not a digit string.
inline Natural parse_natural(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_natural: empty numeral");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("parse_natural: not a decimal numeral: '" + text + "'");
        }
    }
    return Natural(text, 10);
}

inline std::string to_decimal(const Natural& n) { return n.get_str(10); }

/// Fibonacci numbers with F(1) = F(2) = 1 and F(n+1) = F(n) + F(n-1).
/// Index 0 is not defined; callers that mean "even-indexed" pass 2k.
inline Natural fib(unsigned index) {
    if (index == 0) throw std::invalid_argument("fib: index starts at 1");
    if (index <= 2) return 1;
    Natural a = 1, b = 1;  // F(i-1), F(i) while i runs from 2 to index
    for (unsigned i = 3; i <= index; ++i) {
        Natural next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

/// Even-indexed Fibonacci numbers F(2), F(4), ... not exceeding bound;
/// result[i] holds F(2(i+1)).
inline std::vector<Natural> even_fib_upto(const Natural& bound) {
    std::vector<Natural> evens;
    Natural a = 1, b = 1;  // F(index-1), F(index)
    unsigned index = 2;
    while (b <= bound) {
        if (index % 2 == 0) evens.push_back(b);
        Natural next = a + b;
        a = std::move(b);
        b = std::move(next);
        ++index;
    }
    return evens;
}

/// Floor square root: the unique r with r^2 <= m < (r+1)^2.
inline Natural isqrt(const Natural& m) {
    if (m < 0) throw std::invalid_argument("isqrt: negative input");
    Natural r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Exact floor(m / phi) with phi = (1 + sqrt(5)) / 2, no floating point.
/// m/phi = m(sqrt(5) - 1)/2, and since sqrt(5 m^2) is irrational for m > 0,
/// floor(m/phi) = floor((isqrt(5 m^2) - m) / 2).
inline Natural floor_div_phi(const Natural& m) {
    if (m < 0) throw std::invalid_argument("floor_div_phi: negative input");
    if (m == 0) return 0;
    Natural s = isqrt(5 * m * m);
    detail::require(s >= m, "floor_div_phi: isqrt(5 m^2) < m");
    return (s - m) / 2;
}

}  // namespace fibdecomp
