#pragma once

#include "fibdecomp/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace fibdecomp {

/// Digit vector of the even-index decomposition: coefficients[i] multiplies
/// F(2(i+1)), digits lie in {0,1,2}, between any two 2s there is a 0, and the
/// last digit is nonzero (the empty vector encodes 0).
struct CGDecomposition {
    std::vector<int> coefficients;

    bool operator==(const CGDecomposition&) const = default;
};

/// Index set of a Zeckendorf decomposition: strictly increasing, every index
/// >= 2, no two indices adjacent. Empty for 0.
struct ZeckDecomposition {
    std::vector<unsigned> indices;

    bool operator==(const ZeckDecomposition&) const = default;
};

/// The even Fibonacci indices appearing in a decomposition, split by
/// coefficient: all = coeff1 (disjoint union) coeff2, each ascending.
struct SummandSets {
    std::vector<unsigned> all;
    std::vector<unsigned> coeff1;
    std::vector<unsigned> coeff2;
};

/// True iff all digits are in {0,1,2} and between any two digits equal to 2
/// there is a digit equal to 0.
inline bool cg_validate(std::span<const int> coefficients) {
    bool two_pending = false;  // saw a 2 with no 0 after it
    for (int c : coefficients) {
        if (c < 0 || c > 2) return false;
        if (c == 0) {
            two_pending = false;
        } else if (c == 2) {
            if (two_pending) return false;
            two_pending = true;
        }
    }
    return true;
}

inline bool cg_validate(const std::vector<int>& coefficients) {
    return cg_validate(std::span<const int>(coefficients));
}

/// The unique digit vector for n, found greedily from the largest even index
/// k with F(2k) <= n: emit 2 if 2F(2k) still fits, else 1, then recurse on
/// the remainder. After a 2 at index k the remainder is < F(2k-1), which is
/// what keeps a later 2 from appearing before a 0 does.
inline CGDecomposition cg_decompose(const Natural& n) {
    CGDecomposition result;
    if (n == 0) return result;

    const std::vector<Natural> evens = even_fib_upto(n);  // evens[i] = F(2(i+1))
    result.coefficients.assign(evens.size(), 0);

    Natural rest = n;
    for (std::size_t i = evens.size(); i-- > 0;) {
        const Natural& f = evens[i];
        if (rest >= 2 * f) {
            result.coefficients[i] = 2;
            rest -= 2 * f;
            // remainder bound F(2k-1) = F(2k) - F(2k-2); at the bottom it is F(1) = 1
            const Natural bound = i == 0 ? Natural(1) : Natural(f - evens[i - 1]);
            detail::require(rest < bound, "cg_decompose: remainder after a 2 too large");
        } else if (rest >= f) {
            result.coefficients[i] = 1;
            rest -= f;
        }
    }
    detail::require(rest == 0, "cg_decompose: nonzero remainder");
    detail::require(!result.coefficients.empty() && result.coefficients.back() != 0,
                    "cg_decompose: trailing zero digit");
    detail::require(cg_validate(result.coefficients), "cg_decompose: invalid digit vector");
    return result;
}

/// Value of a digit vector, sum of c_i F(2i). Rejects vectors that break the
/// digit rules.
inline Natural cg_evaluate(const CGDecomposition& d) {
    if (!cg_validate(d.coefficients)) {
        throw std::invalid_argument("cg_evaluate: invalid digit vector");
    }
    Natural total = 0;
    Natural a = 1, b = 1;  // F(2i-1), F(2i) for i = 1
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
        if (i > 0) {
            // advance two Fibonacci steps
            a += b;
            b += a;
        }
        if (d.coefficients[i] != 0) total += d.coefficients[i] * b;
    }
    return total;
}

/// Splits the summands of n by coefficient; indices are the even subscripts
/// themselves (424 -> all {2,4,8,14}, coeff1 {4,14}, coeff2 {2,8}).
inline SummandSets summand_sets(const Natural& n) {
    if (n == 0) throw std::invalid_argument("summand_sets: undefined for 0");
    SummandSets sets;
    const CGDecomposition d = cg_decompose(n);
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
        const unsigned index = 2 * static_cast<unsigned>(i + 1);
        if (d.coefficients[i] == 0) continue;
        sets.all.push_back(index);
        (d.coefficients[i] == 1 ? sets.coeff1 : sets.coeff2).push_back(index);
    }
    return sets;
}

/// Greedy Zeckendorf decomposition over F(2), F(3), ...: repeatedly take the
/// largest Fibonacci number that fits. The remainder after taking F(m) is
/// < F(m-1), so indices come out nonadjacent.
inline ZeckDecomposition zeckendorf(const Natural& n) {
    ZeckDecomposition result;
    if (n == 0) return result;

    std::vector<Natural> fibs;  // fibs[i] = F(i+2)
    {
        Natural a = 1, b = 1;  // F(1), F(2)
        while (b <= n) {
            fibs.push_back(b);
            Natural next = a + b;
            a = std::move(b);
            b = std::move(next);
        }
    }

    Natural rest = n;
    std::size_t i = fibs.size();
    while (rest > 0) {
        while (i > 0 && fibs[i - 1] > rest) --i;
        detail::require(i > 0, "zeckendorf: no Fibonacci number fits");
        rest -= fibs[i - 1];
        result.indices.push_back(static_cast<unsigned>(i + 1));
        detail::require(i < 2 || rest < fibs[i - 2], "zeckendorf: adjacent index would follow");
        --i;
    }
    std::reverse(result.indices.begin(), result.indices.end());
    return result;
}

/// Value of a Zeckendorf index set.
inline Natural zeck_evaluate(const ZeckDecomposition& d) {
    Natural total = 0;
    for (unsigned index : d.indices) total += fib(index);
    return total;
}

}  // namespace fibdecomp
