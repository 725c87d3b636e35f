#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "pmod4/classical.hpp"

using namespace pmod4;
using Z = mpz_class;

// Independent oracle: bounded-part DP, p(n) = #partitions with parts <= n.
static std::vector<long long> partition_dp_oracle(long N) {
    std::vector<long long> dp(std::size_t(N) + 1, 0);
    dp[0] = 1;
    for (long part = 1; part <= N; ++part)
        for (long n = part; n <= N; ++n) dp[std::size_t(n)] += dp[std::size_t(n - part)];
    return dp;
}

TEST_CASE("partition values") {
    auto p = partition_table<Z>(100);
    CHECK(p[0] == 1);
    CHECK(p[4] == 5);
    CHECK(p[24] == 1575);
    auto oracle = partition_dp_oracle(60);
    for (long n = 0; n <= 60; ++n) CHECK(p[std::size_t(n)] == mpz_class((long)oracle[std::size_t(n)]));
    // Ramanujan mod 5 instances
    for (long n = 4; n <= 99; n += 5) CHECK(p[std::size_t(n)] % 5 == 0);
}

TEST_CASE("partition table over Z/4 matches exact reduction") {
    auto exact = partition_table<Z>(500);
    auto m4 = partition_table<Mod4>(500);
    for (long n = 0; n <= 500; ++n)
        CHECK((long)m4[std::size_t(n)].v == mpz_fdiv_ui(exact[std::size_t(n)].get_mpz_t(), 4));
}

TEST_CASE("Euler product inverse") {
    const long N = 300;
    auto prod = partition_series<Z>(N) * eta_quotient_unit<Z>(N);
    CHECK(prod.coeff(0) == 1);
    for (long e = 1; e <= N; ++e) CHECK(prod.coeff(e) == 0);
}

TEST_CASE("delta, E4, j expansions") {
    auto d = delta_series<Z>(6);
    CHECK(d.valuation() == 1);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);
    CHECK(d.coeff(4) == -1472);

    auto e4 = e4_series<Z>(4);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);  // 240*sigma_3(2) = 240*9

    auto j = j_series<Z>(2);
    CHECK(j.valuation() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
}

TEST_CASE("j == 1/Delta mod 4") {
    const long N = 120;
    auto j4 = reduce_mod<Mod4>(j_series<Z>(N));
    auto invd4 = delta_series<Mod4>(N + 2).invert();
    for (long e = -1; e <= N; ++e) CHECK(j4.coeff(e) == invd4.coeff(e));
}

TEST_CASE("cooperative cancellation") {
    std::atomic<bool> cancel{true};
    CHECK_THROWS_AS(partition_table<Mod4>(100000, &cancel), OperationCancelled);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(partition_table<Z>(-1), std::invalid_argument);
    CHECK_THROWS_AS(delta_series<Z>(0), std::invalid_argument);
}
