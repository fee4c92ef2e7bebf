#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "prodeq/identities.hpp"

using namespace prodeq;

namespace {
const SieveTable& sieve() {
    static SieveTable s(20'000, {2});
    return s;
}
}  // namespace

TEST_CASE("Busche-Ramanujan right-hand side") {
    const auto& s = sieve();
    CHECK(busche_ramanujan_rhs(2, 3, s).str() == "4");
    CHECK(busche_ramanujan_rhs(4, 6, s).str() == "12");  // d(24)+d(6) = 8+4
    for (u64 n : {u64(1), u64(7), u64(12), u64(90)})
        CHECK(busche_ramanujan_rhs(1, n, s) == ExactCount(oracles::d_naive(n)));
    // identity against the oracle on a small grid
    for (u64 a = 1; a <= 40; ++a)
        for (u64 b = 1; b <= 40; ++b)
            CHECK(busche_ramanujan_rhs(a, b, s) ==
                  ExactCount(oracles::d_naive(a) * oracles::d_naive(b)));
}

TEST_CASE("Ramanujan formula (F) right-hand side") {
    const auto& s = sieve();
    CHECK(ramanujan_f_rhs(2, 2, s).str() == "3");
    CHECK(ramanujan_f_rhs(6, 10, s).str() == "12");
    for (u64 v : {u64(1), u64(9), u64(30)})
        CHECK(ramanujan_f_rhs(1, v, s) == ExactCount(oracles::d_naive(v)));
    for (u64 u = 1; u <= 40; ++u)
        for (u64 v = 1; v <= 40; ++v)
            CHECK(ramanujan_f_rhs(u, v, s) == ExactCount(oracles::d_naive(u * v)));
}

TEST_CASE("Wilson alpha is an exact rational") {
    const auto& s = sieve();
    CHECK(wilson_alpha(1, s) == Rat::integer(1));
    CHECK(wilson_alpha(2, s) == Rat(3, 2));
    CHECK(wilson_alpha(4, s) == Rat::integer(2));
    CHECK(wilson_alpha(6, s) == Rat(5, 2));  // (3/2)(5/3)
}

TEST_CASE("Wilson beta as printed is -(log v) alpha(v)") {
    const auto& s = sieve();
    CHECK(wilson_beta_as_printed(1, s) == doctest::Approx(0.0));
    CHECK(wilson_beta_as_printed(2, s) == doctest::Approx(-1.5 * std::log(2.0)));
    CHECK(wilson_beta_as_printed(4, s) == doctest::Approx(-2.0 * std::log(4.0)));
}

TEST_CASE("sum over n <= x of d(n v), exact") {
    const auto& s = sieve();
    for (u64 v : {u64(1), u64(2), u64(6)}) {
        for (u64 x : {u64(1), u64(17), u64(200)}) {
            u64 brute = 0;
            for (u64 n = 1; n <= x; ++n) brute += oracles::d_naive(n * v);
            CHECK(sum_d_nv(v, x, s) == ExactCount(brute));
        }
    }
}

TEST_CASE("wilson_beta_empirical rejects tiny x and is near zero at v=1") {
    const auto& s = sieve();
    CHECK_THROWS_AS(wilson_beta_empirical(2, 50, s), std::invalid_argument);
    CHECK(std::abs(wilson_beta_empirical(1, 20'000, s)) < 0.01);
}

TEST_CASE("rho evaluation") {
    const auto& s = sieve();
    for (u64 a : {u64(1), u64(2), u64(12)}) CHECK(rho(1, a, s).str() == "1");
    CHECK(rho(4, 1, s).str() == "2");
    CHECK(rho(2, 2, s).str() == "2");
    CHECK(rho(8, 4, s).str() == "4");  // exponent floor((3 + min(2,3))/2) = 2
    CHECK(rho(36, 6, s).str() == "6"); // both primes: floor((2 + 1)/2) = 1
}

TEST_CASE("sum of d(a n^2) by both routes") {
    const auto& s = sieve();
    CHECK(sum_d_an2(1, 1, SumDan2Method::direct, s).str() == "1");
    CHECK(sum_d_an2(1, 3, SumDan2Method::direct, s).str() == "7");
    CHECK(sum_d_an2(1, 3, SumDan2Method::rho_formula, s).str() == "10");
    for (u64 a : {u64(1), u64(2), u64(4)}) {
        for (u64 x : {u64(5), u64(50)}) {
            u64 brute = 0;
            for (u64 n = 1; n <= x; ++n) brute += oracles::d_naive(a * n * n);
            CHECK(sum_d_an2(a, x, SumDan2Method::direct, s) == ExactCount(brute));
        }
    }
}
