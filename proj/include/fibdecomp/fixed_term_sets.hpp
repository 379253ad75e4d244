#pragma once

#include "fibdecomp/decomposition.hpp"
#include "fibdecomp/golden_string.hpp"
#include "fibdecomp/numeric.hpp"

#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace fibdecomp {

/// Ascending members of A(2k), the integers whose minimum summand is F(2k),
/// generated from the closed form
///   A(2k) = { F(2k) } + { (n+2) F(2k) + floor((n+1)/phi) F(2k-1) : n >= 0 }.
/// Single-consumer; fresh streams are independent.
class ASetStream {
public:
    explicit ASetStream(unsigned k) {
        if (k == 0) throw std::invalid_argument("ASetStream: k starts at 1");
        f2k_ = fib(2 * k);
        f2k_minus_1_ = fib(2 * k - 1);
        current_ = f2k_;
    }

    const Natural& current() const { return current_; }

    void advance() {
        current_ = (shift_ + 2) * f2k_ + floor_div_phi(shift_ + 1) * f2k_minus_1_;
        ++shift_;
    }

private:
    Natural f2k_;
    Natural f2k_minus_1_;
    Natural shift_ = 0;  // closed-form parameter n
    Natural current_;
};

/// All elements of A(2k) not exceeding limit, ascending.
inline std::vector<Natural> a_members(unsigned k, const Natural& limit) {
    std::vector<Natural> out;
    ASetStream stream(k);
    while (stream.current() <= limit) {
        out.push_back(stream.current());
        stream.advance();
    }
    return out;
}

/// The first `count` elements of A(2k).
inline std::vector<Natural> a_first(unsigned k, std::size_t count) {
    std::vector<Natural> out;
    out.reserve(count);
    ASetStream stream(k);
    while (out.size() < count) {
        out.push_back(stream.current());
        stream.advance();
    }
    return out;
}

/// Rows q(1) .. q(count) of the A(2k) table, built from the difference law:
/// q(1) = F(2k), q(2) = 2F(2k), and for j >= 2
///   q(j+1) = q(j) + F(2k)   if the (j-1)-th golden letter is A,
///   q(j+1) = q(j) + F(2k+1) if it is B.
/// The j = 1 step is fixed separately; the law only covers j >= 2.
inline std::vector<Natural> q_rows(unsigned k, std::size_t count) {
    if (k == 0) throw std::invalid_argument("q_rows: k starts at 1");
    std::vector<Natural> rows;
    if (count == 0) return rows;
    rows.reserve(count);

    const Natural f2k = fib(2 * k);
    const Natural f2k_plus_1 = fib(2 * k + 1);
    rows.push_back(f2k);
    if (count >= 2) rows.push_back(2 * f2k);
    while (rows.size() < count) {
        const std::size_t j = rows.size();  // current largest row number
        const bool is_a = letter_at(Natural(static_cast<unsigned long>(j - 1))) == GoldenLetter::A;
        rows.push_back(rows.back() + (is_a ? f2k : f2k_plus_1));
    }
    return rows;
}

/// q(j) for a single 1-based row number.
inline Natural q_row(unsigned k, std::size_t j) {
    if (j == 0) throw std::invalid_argument("q_row: rows are 1-based");
    return q_rows(k, j).back();
}

/// The A(2k) table as a value: parameter plus its first rows.
struct RowTable {
    unsigned k = 0;
    std::vector<Natural> rows;  // rows[j-1] = q(j)
};

inline RowTable row_table(unsigned k, std::size_t count) { return {k, q_rows(k, count)}; }

/// Largest member of A(2k) whose top summand is F(2k+2m):
/// F(2k) + F(2k+2) + ... + F(2k+2m-2) + 2 F(2k+2m).
inline Natural max_with_top(unsigned k, unsigned m) {
    if (k == 0) throw std::invalid_argument("max_with_top: k starts at 1");
    Natural total = 2 * fib(2 * (k + m));
    for (unsigned i = 0; i < m; ++i) total += fib(2 * (k + i));
    return total;
}

/// Ascending members of B(2N), the integers whose decomposition has neither
/// F(2N) nor 2F(2N): the interval [1, F(2N)-1] together with every translate
/// a + j, a in A(2k) for k > N, 0 <= j < F(2N). The families are disjoint, so
/// a k-way merge of the ascending streams emits each member exactly once;
/// the merge asserts strict monotonicity.
inline std::vector<Natural> b_members(unsigned N, const Natural& limit) {
    if (N == 0) throw std::invalid_argument("b_members: N starts at 1");
    std::vector<Natural> out;

    const Natural width = fib(2 * N);  // translate blocks are [a, a + F(2N) - 1]
    for (Natural v = 1; v < width && v <= limit; ++v) out.push_back(v);

    struct Stream {
        ASetStream base;
        Natural offset;  // position inside the current block, in [0, width)
        Natural value;   // base.current() + offset
    };
    std::vector<Stream> streams;
    for (unsigned k = N + 1; fib(2 * k) <= limit; ++k) {
        ASetStream base(k);
        Natural first = base.current();
        streams.push_back(Stream{std::move(base), 0, std::move(first)});
    }

    const auto later = [&streams](std::size_t x, std::size_t y) {
        return streams[x].value > streams[y].value;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> heap(later);
    for (std::size_t i = 0; i < streams.size(); ++i) heap.push(i);

    while (!heap.empty()) {
        const std::size_t top = heap.top();
        heap.pop();
        Stream& s = streams[top];
        if (s.value > limit) continue;  // ascending, so this stream is done
        detail::require(out.empty() || s.value > out.back(), "b_members: translate families overlap");
        out.push_back(s.value);
        ++s.offset;
        if (s.offset == width) {
            s.base.advance();
            s.offset = 0;
        }
        s.value = s.base.current() + s.offset;
        heap.push(top);
    }
    return out;
}

/// The first `count` elements of B(2N).
inline std::vector<Natural> b_first(unsigned N, std::size_t count) {
    Natural limit = fib(2 * N + 2);
    while (true) {
        std::vector<Natural> out = b_members(N, limit);
        if (out.size() >= count) {
            out.resize(count);
            return out;
        }
        limit *= 2;
    }
}

/// Membership in B(2N): the F(2N) digit of the decomposition is 0.
inline bool b_contains(unsigned N, const Natural& n) {
    if (N == 0) throw std::invalid_argument("b_contains: N starts at 1");
    if (n == 0) throw std::invalid_argument("b_contains: defined for positive n");
    const CGDecomposition d = cg_decompose(n);
    return d.coefficients.size() < N || d.coefficients[N - 1] == 0;
}

/// Ascending members of Z(N), the integers whose Zeckendorf decomposition
/// contains F(N):
///   Z(N) = { F(N) floor((n+phi^2)/phi) + n F(N+1) + j : 0 <= j <= F(N-1)-1, n >= 0 }.
/// The inner floor is exact: phi^2 = phi + 1 gives
/// floor((n+phi^2)/phi) = floor((n+1)/phi) + 1 (validated by the
/// z_floor_identity check against direct integer inequalities).
inline std::vector<Natural> z_members(unsigned N, const Natural& limit) {
    if (N < 2) throw std::invalid_argument("z_members: N starts at 2");
    std::vector<Natural> out;
    const Natural f_n = fib(N);
    const Natural f_n_plus_1 = fib(N + 1);
    const Natural width = fib(N - 1);  // j runs over [0, F(N-1) - 1]
    for (Natural n = 0;; ++n) {
        const Natural base = f_n * (floor_div_phi(n + 1) + 1) + n * f_n_plus_1;
        if (base > limit) break;
        for (Natural j = 0; j < width; ++j) {
            Natural value = base + j;
            if (value > limit) break;
            detail::require(out.empty() || value > out.back(), "z_members: blocks overlap");
            out.push_back(std::move(value));
        }
    }
    return out;
}

/// The first `count` elements of Z(N).
inline std::vector<Natural> z_first(unsigned N, std::size_t count) {
    Natural limit = fib(N + 2);
    while (true) {
        std::vector<Natural> out = z_members(N, limit);
        if (out.size() >= count) {
            out.resize(count);
            return out;
        }
        limit *= 2;
    }
}

}  // namespace fibdecomp
