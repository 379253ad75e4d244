#pragma once

#include "fibdecomp/decomposition.hpp"
#include "fibdecomp/fixed_term_sets.hpp"
#include "fibdecomp/golden_string.hpp"
#include "fibdecomp/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibdecomp {

/// Outcome of one registered check. passed is true exactly when no
/// counterexample was found; reports are deterministic for fixed parameters.
struct VerificationReport {
    std::string check;
    std::string range;
    bool passed = true;
    std::optional<Natural> counterexample;
};

/// Thrown by the brute-force reference when the enumeration itself breaks
/// (a duplicate or missing value, which would falsify uniqueness).
struct OracleFailure : std::logic_error {
    Natural counterexample;

    OracleFailure(const std::string& what, Natural value)
        : std::logic_error(what), counterexample(std::move(value)) {}
};

namespace detail {

inline std::size_t to_size(const Natural& n, const char* what) {
    if (!n.fits_ulong_p()) throw std::invalid_argument(std::string(what) + ": value too large");
    return static_cast<std::size_t>(n.get_ui());
}

inline void record_digits(std::vector<CGDecomposition>& table, std::vector<bool>& seen,
                          const Natural& value, const std::vector<int>& digits) {
    const std::size_t index = to_size(value, "brute_cg_map value");
    if (seen[index]) throw OracleFailure("brute_cg_map: two digit vectors share a value", value);
    seen[index] = true;
    table[index].coefficients = digits;
}

}  // namespace detail

/// Every valid digit vector with value <= limit, found by depth-first search
/// over digit positions (never through cg_decompose). The result is indexed
/// by value; the search fails loudly if any value in [0, limit] is produced
/// twice or not at all.
inline std::vector<CGDecomposition> brute_cg_map(const Natural& limit,
                                                 const Natural& safety_bound = Natural(1000000)) {
    if (limit > safety_bound) throw std::invalid_argument("brute_cg_map: limit above safety bound");
    const std::size_t size = detail::to_size(limit, "brute_cg_map limit") + 1;

    std::vector<CGDecomposition> table(size);
    std::vector<bool> seen(size, false);
    seen[0] = true;  // the empty vector encodes 0

    const std::vector<Natural> evens = even_fib_upto(limit);  // positions that can hold a digit
    std::vector<int> digits;

    // Each canonical vector is recorded exactly once: at the moment its last
    // nonzero digit is placed.
    auto dfs = [&](auto&& self, std::size_t pos, const Natural& sum, bool two_pending) -> void {
        if (pos == evens.size()) return;
        const Natural& f = evens[pos];
        if (sum + f > limit) return;  // nothing fits at this or any deeper position

        digits.push_back(0);
        self(self, pos + 1, sum, false);

        digits.back() = 1;
        {
            const Natural next = sum + f;
            detail::record_digits(table, seen, next, digits);
            self(self, pos + 1, next, two_pending);
        }

        if (!two_pending && sum + 2 * f <= limit) {
            digits.back() = 2;
            const Natural next = sum + 2 * f;
            detail::record_digits(table, seen, next, digits);
            self(self, pos + 1, next, true);
        }
        digits.pop_back();
    };
    dfs(dfs, 0, Natural(0), false);

    for (std::size_t v = 0; v < size; ++v) {
        if (!seen[v]) throw OracleFailure("brute_cg_map: value has no valid digit vector", Natural(v));
    }
    return table;
}

/// One reference row of the A(2k) table, read straight off a decomposition.
struct FilterRow {
    Natural value;
    unsigned top_index;  // even subscript of the largest summand
    int top_coeff;       // 1 or 2
};

namespace detail {

inline std::optional<FilterRow> filter_row(unsigned k, const Natural& n) {
    const CGDecomposition d = cg_decompose(n);
    std::size_t lowest = 0;
    while (d.coefficients[lowest] == 0) ++lowest;
    if (lowest + 1 != k) return std::nullopt;
    return FilterRow{n, 2 * static_cast<unsigned>(d.coefficients.size()), d.coefficients.back()};
}

}  // namespace detail

/// The first `row_count` rows of the A(2k) table, built by decomposing every
/// integer in ascending order. Independent of both the closed form and the
/// difference law.
inline std::vector<FilterRow> filter_a_rows(unsigned k, std::size_t row_count) {
    if (k == 0) throw std::invalid_argument("filter_a_rows: k starts at 1");
    std::vector<FilterRow> rows;
    rows.reserve(row_count);
    for (Natural n = 1; rows.size() < row_count; ++n) {
        if (auto row = detail::filter_row(k, n)) rows.push_back(std::move(*row));
    }
    return rows;
}

/// All rows of the A(2k) table with value <= limit.
inline std::vector<FilterRow> filter_a_rows_upto(unsigned k, const Natural& limit) {
    if (k == 0) throw std::invalid_argument("filter_a_rows_upto: k starts at 1");
    std::vector<FilterRow> rows;
    for (Natural n = 1; n <= limit; ++n) {
        if (auto row = detail::filter_row(k, n)) rows.push_back(std::move(*row));
    }
    return rows;
}

/// Reference B(2N): integers <= limit whose F(2N) digit is 0.
inline std::vector<Natural> filter_b_members(unsigned N, const Natural& limit) {
    if (N == 0) throw std::invalid_argument("filter_b_members: N starts at 1");
    std::vector<Natural> out;
    for (Natural n = 1; n <= limit; ++n) {
        const CGDecomposition d = cg_decompose(n);
        if (d.coefficients.size() < N || d.coefficients[N - 1] == 0) out.push_back(n);
    }
    return out;
}

/// Reference Z(N): integers <= limit whose Zeckendorf decomposition
/// contains F(N).
inline std::vector<Natural> filter_z_members(unsigned N, const Natural& limit) {
    if (N < 2) throw std::invalid_argument("filter_z_members: N starts at 2");
    std::vector<Natural> out;
    for (Natural n = 1; n <= limit; ++n) {
        const ZeckDecomposition d = zeckendorf(n);
        if (std::find(d.indices.begin(), d.indices.end(), N) != d.indices.end()) out.push_back(n);
    }
    return out;
}

/// Named parameters for verify(); unknown keys are ignored by checks.
using VerifyParams = std::map<std::string, Natural>;

namespace detail {

inline Natural param_or(const VerifyParams& params, const std::string& key, unsigned long fallback) {
    const auto it = params.find(key);
    return it == params.end() ? Natural(fallback) : it->second;
}

inline unsigned param_u(const VerifyParams& params, const std::string& key, unsigned fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    return static_cast<unsigned>(to_size(it->second, key.c_str()));
}

inline void enforce_cap(const Natural& value, unsigned long cap, const char* what) {
    if (value > cap) {
        throw std::invalid_argument(std::string(what) + ": parameter above safety bound");
    }
}

inline VerificationReport passed(std::string check, std::string range) {
    return VerificationReport{std::move(check), std::move(range), true, std::nullopt};
}

inline VerificationReport failed(std::string check, std::string range, Natural counterexample) {
    return VerificationReport{std::move(check), std::move(range), false, std::move(counterexample)};
}

// First position where two ascending lists disagree, reported as the
// smallest value involved.
inline std::optional<Natural> first_difference(const std::vector<Natural>& a,
                                               const std::vector<Natural>& b) {
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] != b[i]) return std::min(a[i], b[i]);
    }
    if (a.size() > common) return a[common];
    if (b.size() > common) return b[common];
    return std::nullopt;
}

}  // namespace detail

// --- registered checks ------------------------------------------------------

namespace checks {

/// Uniqueness and completeness of the even-index numeration, plus agreement
/// of cg_decompose with the exhaustively built map. Counterexample: n.
inline VerificationReport cg_bijection(const VerifyParams& params) {
    const Natural limit = detail::param_or(params, "limit", 10000);
    detail::enforce_cap(limit, 1000000, "cg_bijection limit");
    const std::string range = "0 <= n <= " + to_decimal(limit);
    try {
        const std::vector<CGDecomposition> table = brute_cg_map(limit);
        for (std::size_t n = 0; n < table.size(); ++n) {
            if (cg_decompose(Natural(static_cast<unsigned long>(n))) != table[n]) {
                return detail::failed("cg_bijection", range, Natural(static_cast<unsigned long>(n)));
            }
        }
    } catch (const OracleFailure& failure) {
        return detail::failed("cg_bijection", range, failure.counterexample);
    }
    return detail::passed("cg_bijection", range);
}

/// Round trip n -> digits -> n with a canonical, valid digit vector.
inline VerificationReport cg_roundtrip(const VerifyParams& params) {
    const Natural limit = detail::param_or(params, "limit", 50000);
    detail::enforce_cap(limit, 10000000, "cg_roundtrip limit");
    const std::string range = "0 <= n <= " + to_decimal(limit);
    for (Natural n = 0; n <= limit; ++n) {
        const CGDecomposition d = cg_decompose(n);
        if (cg_evaluate(d) != n) return detail::failed("cg_roundtrip", range, n);
    }
    return detail::passed("cg_roundtrip", range);
}

/// Zeckendorf round trip, indices >= 2, strictly increasing, nonadjacent.
inline VerificationReport zeckendorf_roundtrip(const VerifyParams& params) {
    const Natural limit = detail::param_or(params, "limit", 50000);
    detail::enforce_cap(limit, 10000000, "zeckendorf_roundtrip limit");
    const std::string range = "0 <= n <= " + to_decimal(limit);
    for (Natural n = 0; n <= limit; ++n) {
        const ZeckDecomposition d = zeckendorf(n);
        bool ok = zeck_evaluate(d) == n;
        for (std::size_t i = 0; ok && i < d.indices.size(); ++i) {
            if (d.indices[i] < 2) ok = false;
            if (i > 0 && d.indices[i] < d.indices[i - 1] + 2) ok = false;
        }
        if (!ok) return detail::failed("zeckendorf_roundtrip", range, n);
    }
    return detail::passed("zeckendorf_roundtrip", range);
}

/// b_members against the digit filter: both must list exactly the n <= limit
/// whose F(2N) digit is 0. Counterexample: smallest disagreeing value.
inline VerificationReport main_theorem(const VerifyParams& params) {
    const unsigned N = detail::param_u(params, "N", 2);
    const Natural limit = detail::param_or(params, "limit", 10000);
    detail::enforce_cap(limit, 10000000, "main_theorem limit");
    const std::string range = "N=" + std::to_string(N) + ", 1 <= n <= " + to_decimal(limit);
    const auto mismatch = detail::first_difference(b_members(N, limit), filter_b_members(N, limit));
    if (mismatch) return detail::failed("main_theorem", range, *mismatch);
    return detail::passed("main_theorem", range);
}

/// Closed form for A(2k) against the decomposition filter.
inline VerificationReport a_closed_form(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const Natural limit = detail::param_or(params, "limit", 10000);
    detail::enforce_cap(limit, 10000000, "a_closed_form limit");
    const std::string range = "k=" + std::to_string(k) + ", 1 <= n <= " + to_decimal(limit);
    std::vector<Natural> reference;
    for (const FilterRow& row : filter_a_rows_upto(k, limit)) reference.push_back(row.value);
    const auto mismatch = detail::first_difference(a_members(k, limit), reference);
    if (mismatch) return detail::failed("a_closed_form", range, *mismatch);
    return detail::passed("a_closed_form", range);
}

/// Row differences of the filter-built table follow the golden letters
/// (A steps by F(2k), B by F(2k+1)), and the difference-law rows match.
/// Counterexample: the row number j.
inline VerificationReport difference_law(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const Natural jmax_n = detail::param_or(params, "jmax", 1000);
    detail::enforce_cap(jmax_n, 1000000, "difference_law jmax");
    const std::size_t jmax = detail::to_size(jmax_n, "difference_law jmax");
    const std::string range =
        "k=" + std::to_string(k) + ", 1 <= j <= " + std::to_string(jmax) + " (counterexample: j)";

    const std::vector<FilterRow> table = filter_a_rows(k, jmax + 1);
    const std::vector<Natural> law_rows = q_rows(k, jmax + 1);
    const Natural f2k = fib(2 * k);
    const Natural f2k_plus_1 = fib(2 * k + 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
        if (table[j - 1].value != law_rows[j - 1]) {
            return detail::failed("difference_law", range, Natural(static_cast<unsigned long>(j)));
        }
        const Natural diff = table[j].value - table[j - 1].value;
        const Natural& expected =
            j == 1 ? f2k
                   : (letter_at(Natural(static_cast<unsigned long>(j - 1))) == GoldenLetter::A
                          ? f2k
                          : f2k_plus_1);
        if (diff != expected) {
            return detail::failed("difference_law", range, Natural(static_cast<unsigned long>(j)));
        }
    }
    return detail::passed("difference_law", range);
}

/// Shift identity on the filter-built table: for each l, consecutive-row
/// differences repeat F(2l+1) rows earlier across the stated j-window.
/// Counterexample: the row number j.
inline VerificationReport row_shift_identity(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const unsigned lmax = detail::param_u(params, "ell", 8);
    if (lmax == 0 || lmax > 10) throw std::invalid_argument("row_shift_identity: ell must be in [1, 10]");
    const std::string range = "k=" + std::to_string(k) + ", 1 <= l <= " + std::to_string(lmax) +
                              " (counterexample: j)";

    const std::size_t rows_needed = detail::to_size(fib(2 * lmax + 3), "row_shift_identity rows");
    const std::vector<FilterRow> table = filter_a_rows(k, rows_needed);
    for (unsigned l = 1; l <= lmax; ++l) {
        const std::size_t shift = detail::to_size(fib(2 * l + 1), "shift");
        const std::size_t j_hi = detail::to_size(fib(2 * l + 3), "window") - 1;
        for (std::size_t j = shift + 1; j <= j_hi; ++j) {
            const Natural lhs = table[j].value - table[j - 1].value;
            const Natural rhs = table[j - shift].value - table[j - shift - 1].value;
            if (lhs != rhs) {
                return detail::failed("row_shift_identity", range, Natural(static_cast<unsigned long>(j)));
            }
        }
    }
    return detail::passed("row_shift_identity", range);
}

namespace table_detail {

// Scan bound that certainly covers every member with top index <= 2k+2l:
// even with digit 2 everywhere, such a value stays below 2 F(2k+2l+2).
inline Natural cover_bound(unsigned k, unsigned lmax) { return 2 * fib(2 * (k + lmax) + 2); }

}  // namespace table_detail

/// Largest member with top summand F(2k+2m) equals
/// F(2k) + ... + F(2k+2m-2) + 2F(2k+2m). Counterexample: m.
inline VerificationReport table_max_rows(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const unsigned mmax = detail::param_u(params, "ell", 8);
    if (mmax > 10) throw std::invalid_argument("table_max_rows: ell must be <= 10");
    const std::string range = "k=" + std::to_string(k) + ", 0 <= m <= " + std::to_string(mmax) +
                              " (counterexample: m)";

    const std::vector<FilterRow> rows = filter_a_rows_upto(k, table_detail::cover_bound(k, mmax));
    for (unsigned m = 0; m <= mmax; ++m) {
        const unsigned top = 2 * (k + m);
        Natural largest = 0;
        for (const FilterRow& row : rows) {
            if (row.top_index == top && row.value > largest) largest = row.value;
        }
        if (largest != max_with_top(k, m)) {
            return detail::failed("table_max_rows", range, Natural(m));
        }
    }
    return detail::passed("table_max_rows", range);
}

/// Members with top summand F(2k+2l) occupy exactly the rows
/// F(2l+1)+1 .. F(2l+3). Counterexample: the row number j.
inline VerificationReport table_row_ranges(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const unsigned lmax = detail::param_u(params, "ell", 8);
    if (lmax == 0 || lmax > 10) throw std::invalid_argument("table_row_ranges: ell must be in [1, 10]");
    const std::string range = "k=" + std::to_string(k) + ", 1 <= l <= " + std::to_string(lmax) +
                              " (counterexample: j)";

    const std::size_t rows_needed = detail::to_size(fib(2 * lmax + 3), "table_row_ranges rows");
    const std::vector<FilterRow> table = filter_a_rows(k, rows_needed);
    // rows 1 and 2 are F(2k) and 2F(2k)
    for (std::size_t j = 1; j <= 2; ++j) {
        if (table[j - 1].top_index != 2 * k) {
            return detail::failed("table_row_ranges", range, Natural(static_cast<unsigned long>(j)));
        }
    }
    for (unsigned l = 1; l <= lmax; ++l) {
        const std::size_t lo = detail::to_size(fib(2 * l + 1), "row range") + 1;
        const std::size_t hi = detail::to_size(fib(2 * l + 3), "row range");
        for (std::size_t j = lo; j <= hi; ++j) {
            if (table[j - 1].top_index != 2 * (k + l)) {
                return detail::failed("table_row_ranges", range, Natural(static_cast<unsigned long>(j)));
            }
        }
    }
    return detail::passed("table_row_ranges", range);
}

/// Within the rows for top summand F(2k+2l) there are exactly F(2l+1)
/// members with top digit 1 and F(2l) with top digit 2. Counterexample: l.
inline VerificationReport table_top_counts(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const unsigned lmax = detail::param_u(params, "ell", 8);
    if (lmax == 0 || lmax > 10) throw std::invalid_argument("table_top_counts: ell must be in [1, 10]");
    const std::string range = "k=" + std::to_string(k) + ", 1 <= l <= " + std::to_string(lmax) +
                              " (counterexample: l)";

    const std::size_t rows_needed = detail::to_size(fib(2 * lmax + 3), "table_top_counts rows");
    const std::vector<FilterRow> table = filter_a_rows(k, rows_needed);
    for (unsigned l = 1; l <= lmax; ++l) {
        const std::size_t lo = detail::to_size(fib(2 * l + 1), "row range") + 1;
        const std::size_t hi = detail::to_size(fib(2 * l + 3), "row range");
        Natural ones = 0, twos = 0;
        for (std::size_t j = lo; j <= hi; ++j) {
            const FilterRow& row = table[j - 1];
            if (row.top_index != 2 * (k + l)) return detail::failed("table_top_counts", range, Natural(l));
            (row.top_coeff == 1 ? ones : twos) += 1;
        }
        if (ones != fib(2 * l + 1) || twos != fib(2 * l)) {
            return detail::failed("table_top_counts", range, Natural(l));
        }
    }
    return detail::passed("table_top_counts", range);
}

/// Every member with top digit 2 exceeds every member with the same top
/// summand and top digit 1. Counterexample: the first out-of-order value.
inline VerificationReport table_two_after_one(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const unsigned lmax = detail::param_u(params, "ell", 8);
    if (lmax > 10) throw std::invalid_argument("table_two_after_one: ell must be <= 10");
    const std::string range = "k=" + std::to_string(k) + ", 0 <= l <= " + std::to_string(lmax);

    const std::vector<FilterRow> rows = filter_a_rows_upto(k, table_detail::cover_bound(k, lmax));
    for (unsigned l = 0; l <= lmax; ++l) {
        const unsigned top = 2 * (k + l);
        bool seen_two = false;
        for (const FilterRow& row : rows) {  // ascending by value
            if (row.top_index != top) continue;
            if (row.top_coeff == 2) seen_two = true;
            if (row.top_coeff == 1 && seen_two) {
                return detail::failed("table_two_after_one", range, row.value);
            }
        }
    }
    return detail::passed("table_two_after_one", range);
}

/// Top summand indices never decrease as values grow.
/// Counterexample: the first value whose top index drops.
inline VerificationReport table_monotone_max(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const unsigned lmax = detail::param_u(params, "ell", 8);
    if (lmax > 10) throw std::invalid_argument("table_monotone_max: ell must be <= 10");
    const std::string range = "k=" + std::to_string(k) + ", tops up to F(" +
                              std::to_string(2 * (k + lmax)) + ")";

    const std::vector<FilterRow> rows = filter_a_rows_upto(k, table_detail::cover_bound(k, lmax));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].top_index < rows[i - 1].top_index) {
            return detail::failed("table_monotone_max", range, rows[i].value);
        }
    }
    return detail::passed("table_monotone_max", range);
}

/// Members with top summand F(2k+2l) and top digit 2 are exactly the members
/// below F(2k) + ... + F(2k+2l-2), translated by 2F(2k+2l).
/// Counterexample: smallest disagreeing value.
inline VerificationReport table_translation(const VerifyParams& params) {
    const unsigned k = detail::param_u(params, "k", 1);
    const unsigned lmax = detail::param_u(params, "ell", 6);
    if (lmax == 0 || lmax > 10) throw std::invalid_argument("table_translation: ell must be in [1, 10]");
    const std::string range = "k=" + std::to_string(k) + ", 1 <= l <= " + std::to_string(lmax);

    const std::vector<FilterRow> rows = filter_a_rows_upto(k, table_detail::cover_bound(k, lmax));
    for (unsigned l = 1; l <= lmax; ++l) {
        const unsigned top = 2 * (k + l);
        Natural threshold = 0;
        for (unsigned i = 0; i < l; ++i) threshold += fib(2 * (k + i));
        const Natural twice_top = 2 * fib(top);

        std::vector<Natural> actual;
        std::vector<Natural> translated;
        for (const FilterRow& row : rows) {
            if (row.top_index == top && row.top_coeff == 2) actual.push_back(row.value);
            if (row.value <= threshold) translated.push_back(row.value + twice_top);
        }
        if (auto mismatch = detail::first_difference(actual, translated)) {
            return detail::failed("table_translation", range, *mismatch);
        }
    }
    return detail::passed("table_translation", range);
}

/// |S(n)| = F(n+1). Counterexample: n.
inline VerificationReport golden_length(const VerifyParams& params) {
    const unsigned nmax = detail::param_u(params, "limit", 25);
    if (nmax == 0 || nmax > 30) throw std::invalid_argument("golden_length: limit must be in [1, 30]");
    const std::string range = "1 <= n <= " + std::to_string(nmax);
    for (unsigned n = 1; n <= nmax; ++n) {
        if (Natural(static_cast<unsigned long>(fibonacci_word(n).size())) != fib(n + 1)) {
            return detail::failed("golden_length", range, Natural(n));
        }
    }
    return detail::passed("golden_length", range);
}

/// S(n) is a prefix of S(n+1), and S(n) = S(n-1):S(n-2). Counterexample: n.
inline VerificationReport golden_prefix_nesting(const VerifyParams& params) {
    const unsigned nmax = detail::param_u(params, "limit", 24);
    if (nmax == 0 || nmax > 30) {
        throw std::invalid_argument("golden_prefix_nesting: limit must be in [1, 30]");
    }
    const std::string range = "1 <= n <= " + std::to_string(nmax);
    for (unsigned n = 1; n <= nmax; ++n) {
        const std::string word = fibonacci_word(n);
        const std::string next = fibonacci_word(n + 1);
        if (next.compare(0, word.size(), word) != 0) {
            return detail::failed("golden_prefix_nesting", range, Natural(n));
        }
        if (n >= 3 && word != fibonacci_word(n - 1) + fibonacci_word(n - 2)) {
            return detail::failed("golden_prefix_nesting", range, Natural(n));
        }
    }
    return detail::passed("golden_prefix_nesting", range);
}

/// The first F(n) letters reappear at positions F(n+1)+1 .. F(n+2).
/// Counterexample: n.
inline VerificationReport golden_window_shift(const VerifyParams& params) {
    const unsigned nmax = detail::param_u(params, "limit", 22);
    if (nmax < 2 || nmax > 30) {
        throw std::invalid_argument("golden_window_shift: limit must be in [2, 30]");
    }
    const std::string range = "2 <= n <= " + std::to_string(nmax);
    const std::string prefix = golden_prefix(detail::to_size(fib(nmax + 2), "window"));
    for (unsigned n = 2; n <= nmax; ++n) {
        const std::size_t len = detail::to_size(fib(n), "window");
        const std::size_t start = detail::to_size(fib(n + 1), "window");  // 0-based F(n+1)+1
        if (prefix.compare(0, len, prefix, start, len) != 0) {
            return detail::failed("golden_window_shift", range, Natural(n));
        }
    }
    return detail::passed("golden_window_shift", range);
}

/// Concatenating S(c-1) over the descending Zeckendorf indices c of n yields
/// the first n golden letters. Counterexample: n.
inline VerificationReport golden_zeckendorf_concat(const VerifyParams& params) {
    const Natural limit_n = detail::param_or(params, "limit", 10000);
    detail::enforce_cap(limit_n, 50000, "golden_zeckendorf_concat limit");
    const std::size_t limit = detail::to_size(limit_n, "golden_zeckendorf_concat limit");
    const std::string range = "1 <= n <= " + std::to_string(limit);

    const std::string prefix = golden_prefix(limit);
    for (std::size_t n = 1; n <= limit; ++n) {
        const ZeckDecomposition d = zeckendorf(Natural(static_cast<unsigned long>(n)));
        std::string concat;
        concat.reserve(n);
        for (auto it = d.indices.rbegin(); it != d.indices.rend(); ++it) {
            concat += fibonacci_word(*it - 1);
        }
        if (concat != prefix.substr(0, n)) {
            return detail::failed("golden_zeckendorf_concat", range, Natural(static_cast<unsigned long>(n)));
        }
    }
    return detail::passed("golden_zeckendorf_concat", range);
}

/// N_B(n) = floor((n+1)/phi) against a direct count over the materialized
/// prefix. Counterexample: n.
inline VerificationReport golden_count_formula(const VerifyParams& params) {
    const Natural limit_n = detail::param_or(params, "limit", 100000);
    detail::enforce_cap(limit_n, 10000000, "golden_count_formula limit");
    const std::size_t limit = detail::to_size(limit_n, "golden_count_formula limit");
    const std::string range = "0 <= n <= " + std::to_string(limit);

    const std::string prefix = golden_prefix(limit);
    Natural direct = 0;
    if (count_b(0) != 0) return detail::failed("golden_count_formula", range, Natural(0ul));
    for (std::size_t n = 1; n <= limit; ++n) {
        if (prefix[n - 1] == 'B') ++direct;
        if (count_b(Natural(static_cast<unsigned long>(n))) != direct) {
            return detail::failed("golden_count_formula", range, Natural(static_cast<unsigned long>(n)));
        }
    }
    return detail::passed("golden_count_formula", range);
}

/// Letters at the landmark positions: F(2m+1)-1 holds B and F(2m+1) holds A
/// for m >= 1; 2F(2m+1)-1 holds B and 2F(2m+1) holds A for m >= 2. The
/// doubled positions genuinely need m >= 2: the fourth golden letter is B,
/// and the doubling argument rests on the block repetition, which starts at
/// F(4). Counterexample: the position.
inline VerificationReport golden_landmark_letters(const VerifyParams& params) {
    const unsigned mmax = detail::param_u(params, "limit", 12);
    if (mmax == 0 || mmax > 40) {
        throw std::invalid_argument("golden_landmark_letters: limit must be in [1, 40]");
    }
    const std::string range = "1 <= m <= " + std::to_string(mmax) + " (counterexample: position)";
    for (unsigned m = 1; m <= mmax; ++m) {
        const Natural f = fib(2 * m + 1);
        if (letter_at(f - 1) != GoldenLetter::B) return detail::failed("golden_landmark_letters", range, f - 1);
        if (letter_at(f) != GoldenLetter::A) return detail::failed("golden_landmark_letters", range, f);
        if (m >= 2) {
            if (letter_at(2 * f - 1) != GoldenLetter::B) {
                return detail::failed("golden_landmark_letters", range, 2 * f - 1);
            }
            if (letter_at(2 * f) != GoldenLetter::A) {
                return detail::failed("golden_landmark_letters", range, 2 * f);
            }
        }
    }
    return detail::passed("golden_landmark_letters", range);
}

/// The first F(n) letters equal the next F(n) letters, n >= 4.
/// Counterexample: n.
inline VerificationReport golden_block_repeat(const VerifyParams& params) {
    const unsigned nmax = detail::param_u(params, "limit", 20);
    if (nmax < 4 || nmax > 30) {
        throw std::invalid_argument("golden_block_repeat: limit must be in [4, 30]");
    }
    const std::string range = "4 <= n <= " + std::to_string(nmax);
    for (unsigned n = 4; n <= nmax; ++n) {
        if (!check_prefix_repetition(n)) return detail::failed("golden_block_repeat", range, Natural(n));
    }
    return detail::passed("golden_block_repeat", range);
}

/// Deleting the last two letters commutes with swapping the concatenation
/// order of S(n) and S(n+1). Counterexample: n.
inline VerificationReport golden_truncation_swap(const VerifyParams& params) {
    const unsigned nmax = detail::param_u(params, "limit", 20);
    if (nmax == 0 || nmax > 30) {
        throw std::invalid_argument("golden_truncation_swap: limit must be in [1, 30]");
    }
    const std::string range = "1 <= n <= " + std::to_string(nmax);
    for (unsigned n = 1; n <= nmax; ++n) {
        const std::string a = fibonacci_word(n);
        const std::string b = fibonacci_word(n + 1);
        if (drop_last_two(a + b) != drop_last_two(b + a)) {
            return detail::failed("golden_truncation_swap", range, Natural(n));
        }
    }
    return detail::passed("golden_truncation_swap", range);
}

/// The first F(n-1)-2 letters reappear right after position 2F(n), n >= 5.
/// Counterexample: n.
inline VerificationReport golden_tail_window(const VerifyParams& params) {
    const unsigned nmax = detail::param_u(params, "limit", 20);
    if (nmax < 5 || nmax > 30) {
        throw std::invalid_argument("golden_tail_window: limit must be in [5, 30]");
    }
    const std::string range = "5 <= n <= " + std::to_string(nmax);
    for (unsigned n = 5; n <= nmax; ++n) {
        if (!check_tail_window(n)) return detail::failed("golden_tail_window", range, Natural(n));
    }
    return detail::passed("golden_tail_window", range);
}

/// letter_at agrees with the materialized prefix at every position.
/// Counterexample: the position.
inline VerificationReport letter_formula_agreement(const VerifyParams& params) {
    const Natural limit_n = detail::param_or(params, "limit", 121393);  // F(26)
    detail::enforce_cap(limit_n, 10000000, "letter_formula_agreement limit");
    const std::size_t limit = detail::to_size(limit_n, "letter_formula_agreement limit");
    const std::string range = "1 <= j <= " + std::to_string(limit);

    const std::string prefix = golden_prefix(limit);
    for (std::size_t j = 1; j <= limit; ++j) {
        if (to_char(letter_at(Natural(static_cast<unsigned long>(j)))) != prefix[j - 1]) {
            return detail::failed("letter_formula_agreement", range, Natural(static_cast<unsigned long>(j)));
        }
    }
    return detail::passed("letter_formula_agreement", range);
}

/// r = floor(m/phi) satisfies the exact bracketing (2r+m)^2 < 5m^2 <
/// (2(r+1)+m)^2, and the floor steps by 0 or 1. Counterexample: m.
inline VerificationReport floor_phi_bounds(const VerifyParams& params) {
    const Natural limit = detail::param_or(params, "limit", 100000);
    detail::enforce_cap(limit, 10000000, "floor_phi_bounds limit");
    const std::string range = "1 <= m <= " + to_decimal(limit);

    Natural previous = floor_div_phi(0);
    for (Natural m = 1; m <= limit; ++m) {
        const Natural r = floor_div_phi(m);
        const Natural five_m2 = 5 * m * m;
        const Natural low = 2 * r + m;
        const Natural high = 2 * (r + 1) + m;
        const bool step_ok = r == previous || r == previous + 1;
        if (!(low * low < five_m2 && five_m2 < high * high && step_ok)) {
            return detail::failed("floor_phi_bounds", range, m);
        }
        previous = r;
    }
    return detail::passed("floor_phi_bounds", range);
}

/// Z(N) closed form against the Zeckendorf filter. Counterexample: smallest
/// disagreeing value.
inline VerificationReport z_formula(const VerifyParams& params) {
    const unsigned N = detail::param_u(params, "N", 4);
    const Natural limit = detail::param_or(params, "limit", 10000);
    detail::enforce_cap(limit, 10000000, "z_formula limit");
    const std::string range = "N=" + std::to_string(N) + ", 1 <= n <= " + to_decimal(limit);
    const auto mismatch = detail::first_difference(z_members(N, limit), filter_z_members(N, limit));
    if (mismatch) return detail::failed("z_formula", range, *mismatch);
    return detail::passed("z_formula", range);
}

/// The evaluation identity floor((n+phi^2)/phi) = floor((n+1)/phi) + 1,
/// validated against the defining inequalities in exact integers:
/// with r the claimed floor, 5(r-1)^2 < (2n+3-r)^2 and (2n+2-r)^2 < 5r^2.
/// Counterexample: n.
inline VerificationReport z_floor_identity(const VerifyParams& params) {
    const Natural limit = detail::param_or(params, "limit", 100000);
    detail::enforce_cap(limit, 10000000, "z_floor_identity limit");
    const std::string range = "0 <= n <= " + to_decimal(limit);

    for (Natural n = 0; n <= limit; ++n) {
        const Natural r = floor_div_phi(n + 1) + 1;
        if (r > 2 * n + 2) return detail::failed("z_floor_identity", range, n);
        const Natural lo = 2 * n + 3 - r;
        const Natural hi = 2 * n + 2 - r;
        if (!(5 * (r - 1) * (r - 1) < lo * lo && hi * hi < 5 * r * r)) {
            return detail::failed("z_floor_identity", range, n);
        }
    }
    return detail::passed("z_floor_identity", range);
}

}  // namespace checks

/// One registry entry: a name, a summary for humans, and a runner taking the
/// merged parameters.
struct CheckInfo {
    std::string name;
    std::string summary;
    VerifyParams defaults;
    std::function<VerificationReport(const VerifyParams&)> run;
};

inline const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry = {
        {"cg_bijection", "every integer has exactly one valid digit vector, and cg_decompose finds it",
         {{"limit", 10000}}, checks::cg_bijection},
        {"cg_roundtrip", "cg_evaluate inverts cg_decompose", {{"limit", 50000}}, checks::cg_roundtrip},
        {"zeckendorf_roundtrip", "Zeckendorf decompositions are nonadjacent and sum back",
         {{"limit", 50000}}, checks::zeckendorf_roundtrip},
        {"main_theorem", "b_members matches the zero-digit filter", {{"N", 2}, {"limit", 10000}},
         checks::main_theorem},
        {"a_closed_form", "A(2k) closed form matches the minimum-summand filter",
         {{"k", 1}, {"limit", 10000}}, checks::a_closed_form},
        {"difference_law", "table row differences follow the golden letters",
         {{"k", 1}, {"jmax", 1000}}, checks::difference_law},
        {"row_shift_identity", "row differences repeat F(2l+1) rows earlier",
         {{"k", 1}, {"ell", 8}}, checks::row_shift_identity},
        {"table_max_rows", "largest member per top summand", {{"k", 1}, {"ell", 8}},
         checks::table_max_rows},
        {"table_row_ranges", "members per top summand sit in rows F(2l+1)+1 .. F(2l+3)",
         {{"k", 1}, {"ell", 8}}, checks::table_row_ranges},
        {"table_top_counts", "F(2l+1) members carry top digit 1 and F(2l) carry top digit 2",
         {{"k", 1}, {"ell", 8}}, checks::table_top_counts},
        {"table_two_after_one", "top digit 2 members exceed top digit 1 members",
         {{"k", 1}, {"ell", 8}}, checks::table_two_after_one},
        {"table_monotone_max", "larger top summands mean larger members", {{"k", 1}, {"ell", 8}},
         checks::table_monotone_max},
        {"table_translation", "top digit 2 members are translated low rows",
         {{"k", 1}, {"ell", 6}}, checks::table_translation},
        {"golden_length", "|S(n)| = F(n+1)", {{"limit", 25}}, checks::golden_length},
        {"golden_prefix_nesting", "S(n) prefixes S(n+1) and follows the recurrence",
         {{"limit", 24}}, checks::golden_prefix_nesting},
        {"golden_window_shift", "first F(n) letters reappear after position F(n+1)",
         {{"limit", 22}}, checks::golden_window_shift},
        {"golden_zeckendorf_concat", "Zeckendorf indices assemble the golden prefix",
         {{"limit", 10000}}, checks::golden_zeckendorf_concat},
        {"golden_count_formula", "N_B(n) = floor((n+1)/phi)", {{"limit", 100000}},
         checks::golden_count_formula},
        {"golden_landmark_letters", "letters at F(2m+1)-1, F(2m+1), 2F(2m+1)-1, 2F(2m+1)",
         {{"limit", 12}}, checks::golden_landmark_letters},
        {"golden_block_repeat", "first F(n) letters equal the next F(n) letters",
         {{"limit", 20}}, checks::golden_block_repeat},
        {"golden_truncation_swap", "dropping two letters commutes with swapping S(n), S(n+1)",
         {{"limit", 20}}, checks::golden_truncation_swap},
        {"golden_tail_window", "first F(n-1)-2 letters reappear after position 2F(n)",
         {{"limit", 20}}, checks::golden_tail_window},
        {"letter_formula_agreement", "letter_at matches the materialized prefix",
         {{"limit", 121393}}, checks::letter_formula_agreement},
        {"floor_phi_bounds", "floor(m/phi) satisfies its exact bracketing",
         {{"limit", 100000}}, checks::floor_phi_bounds},
        {"z_formula", "Z(N) closed form matches the Zeckendorf filter",
         {{"N", 4}, {"limit", 10000}}, checks::z_formula},
        {"z_floor_identity", "floor((n+phi^2)/phi) = floor((n+1)/phi) + 1 exactly",
         {{"limit", 100000}}, checks::z_floor_identity},
    };
    return registry;
}

inline std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const CheckInfo& info : check_registry()) names.push_back(info.name);
    return names;
}

/// Runs a registered check with defaults overlaid by the given parameters.
/// Unknown check names are rejected.
inline VerificationReport verify(const std::string& check, const VerifyParams& params = {}) {
    for (const CheckInfo& info : check_registry()) {
        if (info.name != check) continue;
        VerifyParams merged = info.defaults;
        for (const auto& [key, value] : params) merged[key] = value;
        VerificationReport report = info.run(merged);
        detail::require(report.passed == !report.counterexample.has_value(),
                        "verify: report invariant violated");
        return report;
    }
    throw std::invalid_argument("verify: unknown check '" + check + "'");
}

}  // namespace fibdecomp
