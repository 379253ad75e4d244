#include "fibdecomp/decomposition.hpp"

#include "fibdecomp/serialization.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using fibdecomp::CGDecomposition;
using fibdecomp::Natural;
using fibdecomp::ZeckDecomposition;

TEST_CASE("cg_validate digit rules", "[decomposition]") {
    CHECK(fibdecomp::cg_validate(std::vector<int>{}));
    CHECK(fibdecomp::cg_validate(std::vector<int>{2, 0, 2}));
    CHECK(fibdecomp::cg_validate(std::vector<int>{1, 1, 1, 1}));
    CHECK(fibdecomp::cg_validate(std::vector<int>{2, 1, 0, 2, 0, 0, 1}));
    CHECK_FALSE(fibdecomp::cg_validate(std::vector<int>{2, 2}));
    CHECK_FALSE(fibdecomp::cg_validate(std::vector<int>{2, 1, 2}));
    CHECK_FALSE(fibdecomp::cg_validate(std::vector<int>{3}));
    CHECK_FALSE(fibdecomp::cg_validate(std::vector<int>{-1}));
}

TEST_CASE("cg_decompose worked examples", "[decomposition]") {
    CHECK(fibdecomp::cg_decompose(0).coefficients.empty());
    CHECK(fibdecomp::cg_decompose(1).coefficients == std::vector<int>{1});
    CHECK(fibdecomp::cg_decompose(2).coefficients == std::vector<int>{2});
    // 424 = 2F(2) + F(4) + 2F(8) + F(14)
    CHECK(fibdecomp::cg_decompose(424).coefficients == std::vector<int>{2, 1, 0, 2, 0, 0, 1});
    CHECK(fibdecomp::cg_decompose(7).coefficients == std::vector<int>{1, 2});
}

TEST_CASE("cg_evaluate examples and rejection", "[decomposition]") {
    CHECK(fibdecomp::cg_evaluate(CGDecomposition{}) == 0);
    CHECK(fibdecomp::cg_evaluate(CGDecomposition{{2}}) == 2);
    CHECK(fibdecomp::cg_evaluate(CGDecomposition{{2, 1, 0, 2, 0, 0, 1}}) == 424);
    CHECK_THROWS_AS(fibdecomp::cg_evaluate(CGDecomposition{{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(fibdecomp::cg_evaluate(CGDecomposition{{5}}), std::invalid_argument);
}

TEST_CASE("round trip with canonical output", "[decomposition]") {
    long first_bad = -1;
    for (unsigned long n = 0; n <= 200000 && first_bad < 0; ++n) {
        const CGDecomposition d = fibdecomp::cg_decompose(n);
        const bool canonical = d.coefficients.empty() || d.coefficients.back() != 0;
        if (!canonical || !fibdecomp::cg_validate(d.coefficients) || fibdecomp::cg_evaluate(d) != n) {
            first_bad = static_cast<long>(n);
        }
    }
    REQUIRE(first_bad == -1);
}

TEST_CASE("round trip at the million mark", "[decomposition]") {
    const fibdecomp::VerificationReport report =
        fibdecomp::verify("cg_roundtrip", {{"limit", 1000000}});
    REQUIRE(report.passed);
}

TEST_CASE("decompose handles values beyond 2^128", "[decomposition]") {
    Natural big = 1;
    big <<= 200;
    big += 12345;
    const CGDecomposition d = fibdecomp::cg_decompose(big);
    CHECK(fibdecomp::cg_validate(d.coefficients));
    CHECK(fibdecomp::cg_evaluate(d) == big);
}

TEST_CASE("summand_sets splits by coefficient", "[decomposition]") {
    const fibdecomp::SummandSets s = fibdecomp::summand_sets(424);
    CHECK(s.all == std::vector<unsigned>{2, 4, 8, 14});
    CHECK(s.coeff1 == std::vector<unsigned>{4, 14});
    CHECK(s.coeff2 == std::vector<unsigned>{2, 8});

    const fibdecomp::SummandSets one = fibdecomp::summand_sets(1);
    CHECK(one.all == std::vector<unsigned>{2});
    CHECK(one.coeff1 == std::vector<unsigned>{2});
    CHECK(one.coeff2.empty());

    const fibdecomp::SummandSets two = fibdecomp::summand_sets(2);
    CHECK(two.coeff1.empty());
    CHECK(two.coeff2 == std::vector<unsigned>{2});

    CHECK_THROWS_AS(fibdecomp::summand_sets(0), std::invalid_argument);
}

TEST_CASE("summand set partition property", "[decomposition]") {
    for (unsigned long n = 1; n <= 2000; ++n) {
        const fibdecomp::SummandSets s = fibdecomp::summand_sets(n);
        std::set<unsigned> merged(s.coeff1.begin(), s.coeff1.end());
        merged.insert(s.coeff2.begin(), s.coeff2.end());
        REQUIRE(merged.size() == s.coeff1.size() + s.coeff2.size());
        REQUIRE(std::vector<unsigned>(merged.begin(), merged.end()) == s.all);
    }
}

TEST_CASE("zeckendorf worked examples", "[decomposition]") {
    CHECK(fibdecomp::zeckendorf(0).indices.empty());
    CHECK(fibdecomp::zeckendorf(1).indices == std::vector<unsigned>{2});
    CHECK(fibdecomp::zeckendorf(4).indices == std::vector<unsigned>{2, 4});
    CHECK(fibdecomp::zeckendorf(11).indices == std::vector<unsigned>{4, 6});
}

TEST_CASE("zeckendorf round trip and nonadjacency at the million mark", "[decomposition]") {
    const fibdecomp::VerificationReport report =
        fibdecomp::verify("zeckendorf_roundtrip", {{"limit", 1000000}});
    REQUIRE(report.passed);
}

TEST_CASE("zeckendorf is the unique nonadjacent representation", "[decomposition]") {
    // enumerate every nonadjacent index set with value <= limit; each value
    // must appear exactly once and match the greedy result
    const unsigned long limit = 5000;
    std::vector<std::vector<unsigned>> by_value(limit + 1);
    std::vector<bool> seen(limit + 1, false);
    seen[0] = true;

    std::vector<unsigned> chosen;
    auto dfs = [&](auto&& self, unsigned index, const Natural& sum) -> void {
        const Natural f = fibdecomp::fib(index);
        if (sum + f > limit) return;
        self(self, index + 1, sum);  // skip this index
        chosen.push_back(index);
        const Natural next = sum + f;
        const auto value = static_cast<unsigned long>(next.get_ui());
        REQUIRE_FALSE(seen[value]);
        seen[value] = true;
        by_value[value] = chosen;
        self(self, index + 2, next);  // nonadjacent: skip the neighbor
        chosen.pop_back();
    };
    dfs(dfs, 2, Natural(0));

    long first_bad = -1;
    for (unsigned long n = 0; n <= limit && first_bad < 0; ++n) {
        if (!seen[n] || fibdecomp::zeckendorf(n).indices != by_value[n]) {
            first_bad = static_cast<long>(n);
        }
    }
    REQUIRE(first_bad == -1);
}

TEST_CASE("decomposition JSON shapes", "[decomposition]") {
    CHECK(fibdecomp::to_json(fibdecomp::cg_decompose(424)).dump() ==
          R"({"coefficients":[2,1,0,2,0,0,1],"n":"424","system":"chung-graham"})");
    CHECK(fibdecomp::to_json(fibdecomp::zeckendorf(11)).dump() ==
          R"({"indices":[4,6],"n":"11","system":"zeckendorf"})");
    CHECK(fibdecomp::to_json(fibdecomp::cg_decompose(0)).dump() ==
          R"({"coefficients":[],"n":"0","system":"chung-graham"})");
}
