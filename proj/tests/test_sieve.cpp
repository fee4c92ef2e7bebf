#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "prodeq/sieve.hpp"

using namespace prodeq;

TEST_CASE("sieve values match the definition-level oracles") {
    SieveTable s(2000, {2, 3, 4});
    for (u64 n = 1; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(s.mu(n) == oracles::mu_naive(n));
        CHECK(s.omega(n) == oracles::omega_naive(n));
        CHECK(s.d(n) == oracles::d_naive(n));
        if (n <= 400) CHECK(s.phi(n) == oracles::phi_naive(n));
        if (n <= 200) {
            CHECK(s.dk(3, n) == oracles::dk_naive(3, n));
            CHECK(s.dk(4, n) == oracles::dk_naive(4, n));
        }
    }
}

TEST_CASE("unit values and forced small values") {
    SieveTable s(100, {2, 3});
    CHECK(s.mu(1) == 1);
    CHECK(s.phi(1) == 1);
    CHECK(s.omega(1) == 0);
    CHECK(s.dk(3, 4) == 6);  // C(4,2)
    CHECK(s.phi(12) == 4);
    CHECK(s.mu(6) == 1);
    CHECK(s.omega(6) == 2);
    CHECK(s.spf(1) == 1);
}

TEST_CASE("spf is the smallest prime factor and marks primes") {
    SieveTable s(500, {});
    for (u64 n = 2; n <= 500; ++n) {
        u64 p = s.spf(n);
        CHECK(n % p == 0);
        for (u64 q = 2; q < p; ++q) CHECK(n % q != 0);
    }
    for (u64 p : s.primes()) CHECK(s.spf(p) == p);
}

TEST_CASE("phi(n) <= n and the divisor-sum mu identity") {
    SieveTable s(3000, {2});
    for (u64 n = 1; n <= 3000; ++n) CHECK(s.phi(n) <= n);
    for (u64 n = 1; n <= 300; ++n) {
        int total = 0;
        for (u64 d = 1; d <= n; ++d)
            if (n % d == 0) total += s.mu(d);
        CHECK(total == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("d_k is sub-multiplicative, equality at coprime arguments") {
    SieveTable s(10'000, {2, 3});
    for (int k : {2, 3}) {
        for (u64 n = 1; n <= 60; ++n) {
            for (u64 m = 1; m <= 60; ++m) {
                u64 lhs = s.dk(k, n * m);
                u64 rhs = s.dk(k, n) * s.dk(k, m);
                CHECK(lhs <= rhs);
                if (std::gcd(n, m) == 1) CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("factorization beyond the sieve limit") {
    SieveTable s(100, {2});
    Factorization f = s.factorize(2ull * 3 * 3 * 101 * 101);  // 101 > limit
    CHECK(product_of(f) == 2ull * 9 * 101 * 101);
    CHECK(valuation(f, 101) == 2);
    CHECK(dk_value_u64(2, f) == oracles::d_naive(2ull * 9 * 101 * 101));

    // a prime square above the prime list
    Factorization g = s.factorize(10007ull * 10007);
    CHECK(g.size() == 1);
    CHECK(g[0].p == 10007);
    CHECK(g[0].e == 2);
}

TEST_CASE("divisors_of returns every divisor in order") {
    SieveTable s(100, {});
    auto ds = divisors_of(s.factorize(60));
    CHECK(ds == std::vector<u64>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
}

TEST_CASE("sieve rejects bad arguments") {
    CHECK_THROWS_AS(SieveTable(0, {2}), std::invalid_argument);
    SieveTable s(10, {2});
    CHECK_THROWS_AS(s.d(11), std::out_of_range);
    CHECK_THROWS_AS(s.dk(5, 3), std::invalid_argument);  // order not requested
    Budget tiny{1000};
    CHECK_THROWS_AS(SieveTable(1'000'000, {2}, tiny), BudgetError);
}
