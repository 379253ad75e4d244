#include "fibdecomp/fixed_term_sets.hpp"

#include "fibdecomp/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using fibdecomp::Natural;

namespace {
std::vector<Natural> naturals(std::initializer_list<unsigned long> values) {
    return {values.begin(), values.end()};
}
}  // namespace

TEST_CASE("a_members closed form", "[sets]") {
    CHECK(fibdecomp::a_members(1, 13) == naturals({1, 2, 4, 5, 7, 9, 10, 12, 13}));
    CHECK(fibdecomp::a_members(1, 0).empty());
    CHECK(fibdecomp::a_members(2, 10) == naturals({3, 6}));
    CHECK_THROWS_AS(fibdecomp::a_members(0, 10), std::invalid_argument);
}

TEST_CASE("a_first returns a prefix of a_members", "[sets]") {
    CHECK(fibdecomp::a_first(1, 9) == fibdecomp::a_members(1, 13));
    CHECK(fibdecomp::a_first(3, 0).empty());
    const std::vector<Natural> first = fibdecomp::a_first(2, 5);
    REQUIRE(first.size() == 5);
    CHECK(first[0] == 3);
    CHECK(first[1] == 6);
}

TEST_CASE("q rows reproduce the table at k = 1 and k = 2", "[sets]") {
    CHECK(fibdecomp::q_row(1, 1) == 1);
    CHECK(fibdecomp::q_row(1, 5) == 7);
    CHECK(fibdecomp::q_row(1, 13) == 20);
    CHECK(fibdecomp::q_rows(1, 13) ==
          naturals({1, 2, 4, 5, 7, 9, 10, 12, 13, 15, 17, 18, 20}));
    // same rows scaled to k = 2: F(4) = 3, F(5) = 5
    CHECK(fibdecomp::q_rows(2, 13) ==
          naturals({3, 6, 11, 14, 19, 24, 27, 32, 35, 40, 45, 48, 53}));
    CHECK_THROWS_AS(fibdecomp::q_row(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(fibdecomp::q_rows(0, 5), std::invalid_argument);
}

TEST_CASE("q rows match the closed form", "[sets]") {
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK(fibdecomp::q_rows(k, 200) == fibdecomp::a_first(k, 200));
    }
}

TEST_CASE("difference law holds at k = 4 over the full row range", "[sets]") {
    const fibdecomp::VerificationReport report =
        fibdecomp::verify("difference_law", {{"k", 4}, {"jmax", 10000}});
    REQUIRE(report.passed);
}

TEST_CASE("row_table carries its parameter", "[sets]") {
    const fibdecomp::RowTable table = fibdecomp::row_table(2, 4);
    CHECK(table.k == 2);
    CHECK(table.rows == naturals({3, 6, 11, 14}));
}

TEST_CASE("max_with_top sums", "[sets]") {
    CHECK(fibdecomp::max_with_top(1, 0) == 2);
    CHECK(fibdecomp::max_with_top(1, 1) == 7);
    CHECK(fibdecomp::max_with_top(1, 2) == 20);
    CHECK(fibdecomp::max_with_top(2, 1) == 19);  // F(4) + 2F(6)
    CHECK_THROWS_AS(fibdecomp::max_with_top(0, 1), std::invalid_argument);
}

TEST_CASE("b_members reproduces the small listings", "[sets]") {
    CHECK(fibdecomp::b_members(1, 30) == naturals({3, 6, 8, 11, 14, 16, 19, 21, 24, 27, 29}));
    CHECK(fibdecomp::b_members(2, 30) ==
          naturals({1, 2, 8, 9, 10, 16, 17, 18, 21, 22, 23, 29, 30}));
    CHECK(fibdecomp::b_members(3, 30) ==
          naturals({1, 2, 3, 4, 5, 6, 7, 21, 22, 23, 24, 25, 26, 27, 28}));
    CHECK(fibdecomp::b_members(1, 2).empty());
    CHECK_THROWS_AS(fibdecomp::b_members(0, 10), std::invalid_argument);
}

TEST_CASE("b_first extends the listing", "[sets]") {
    const std::vector<Natural> first = fibdecomp::b_first(1, 11);
    CHECK(first == fibdecomp::b_members(1, 30));
    CHECK(fibdecomp::b_first(2, 3) == naturals({1, 2, 8}));
}

TEST_CASE("b_contains agrees with membership", "[sets]") {
    CHECK(fibdecomp::b_contains(1, 3));
    CHECK_FALSE(fibdecomp::b_contains(1, 1));
    CHECK(fibdecomp::b_contains(2, 21));
    CHECK_THROWS_AS(fibdecomp::b_contains(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(fibdecomp::b_contains(0, 5), std::invalid_argument);

    for (unsigned N = 1; N <= 3; ++N) {
        const std::vector<Natural> members = fibdecomp::b_members(N, 500);
        std::size_t at = 0;
        for (unsigned long n = 1; n <= 500; ++n) {
            const bool listed = at < members.size() && members[at] == n;
            if (listed) ++at;
            REQUIRE(fibdecomp::b_contains(N, n) == listed);
        }
        REQUIRE(at == members.size());
    }
}

TEST_CASE("z_members closed form", "[sets]") {
    CHECK(fibdecomp::z_members(4, 12) == naturals({3, 4, 11, 12}));
    CHECK(fibdecomp::z_members(2, 4) == naturals({1, 4}));
    CHECK(fibdecomp::z_members(5, 7) == naturals({5, 6, 7}));
    CHECK_THROWS_AS(fibdecomp::z_members(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(fibdecomp::z_members(0, 10), std::invalid_argument);
}

TEST_CASE("z_first extends the listing", "[sets]") {
    CHECK(fibdecomp::z_first(4, 4) == naturals({3, 4, 11, 12}));
    CHECK(fibdecomp::z_first(2, 6) == naturals({1, 4, 6, 9, 12, 14}));
}

TEST_CASE("set streams are single-consumer but independent", "[sets]") {
    fibdecomp::ASetStream first(1);
    fibdecomp::ASetStream second(1);
    first.advance();
    first.advance();
    CHECK(first.current() == 4);
    CHECK(second.current() == 1);  // untouched stream still at F(2)
}
