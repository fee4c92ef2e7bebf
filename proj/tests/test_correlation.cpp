#include <doctest.h>

#include "oracles.hpp"
#include "prodeq/correlation.hpp"

using namespace prodeq;

namespace {
const SieveTable& sieve() {
    static SieveTable s(20'000, {2, 3});
    return s;
}
}  // namespace

TEST_CASE("direct correlation sums") {
    const auto& s = sieve();
    CHECK(corr_direct({2, 3, 1, 1, {}}, s).str() == "9");   // 1 + 4 + 4
    CHECK(corr_direct({2, 1, 1, 1, {}}, s).str() == "1");
    CHECK(corr_direct({2, 3, 2, 3, {}}, s).str() == "28");  // 4 + 12 + 12
    // against the naive oracle, k in {2,3}
    for (int k : {2, 3}) {
        for (auto [n, m] : {std::pair<u64, u64>{1, 1}, {2, 3}, {4, 15}}) {
            u64 brute = 0;
            for (u64 j = 1; j <= 20; ++j)
                brute += oracles::dk_naive(k, j * n) * oracles::dk_naive(k, j * m);
            CHECK(corr_direct({k, 20, n, m, {}}, s) == ExactCount(brute));
        }
    }
}

TEST_CASE("BR1 route") {
    const auto& s = sieve();
    CHECK(corr_br1(3, 1, 1, s).str() == "9");
    CHECK(corr_br1(2, 2, 3, s).str() == "16");
    CHECK(corr_br1(3, 2, 3, s).str() == "28");
    CHECK_THROWS_AS(corr_br1(10, 2, 4, s), std::invalid_argument);  // not coprime
    // equals direct on a grid
    for (auto [n, m] : {std::pair<u64, u64>{1, 1}, {1, 2}, {3, 4}, {5, 12}})
        for (u64 x : {u64(1), u64(7), u64(35)})
            CHECK(corr_br1(x, n, m, s) == corr_direct({2, x, n, m, {}}, s));
}

TEST_CASE("restricted correlation") {
    const auto& s = sieve();
    BoundedTauTable t2(2, 2);
    CHECK(corr_restricted({2, 4, 1, 1, 2}, t2).str() == "6");  // 1 + 4 + 0 + 1
    CHECK(corr_restricted({2, 2, 1, 2, 2}, t2).str() == "4");  // 1*2 + 2*1
    // box covering the whole range reproduces the unrestricted sum
    BoundedTauTable t30(2, 30);
    for (auto [n, m] : {std::pair<u64, u64>{1, 1}, {1, 2}, {2, 3}}) {
        u64 x = 30 / std::max(n, m);
        CHECK(corr_restricted({2, x, n, m, 30}, t30) == corr_direct({2, x, n, m, {}}, s));
    }
    // never above the unrestricted sum
    for (u64 x : {u64(3), u64(10), u64(25)})
        CHECK(corr_restricted({2, x, 1, 1, 2}, t2) <= corr_direct({2, x, 1, 1, {}}, s));
    CHECK_THROWS_AS(corr_restricted({2, 4, 1, 1, {}}, t2), std::invalid_argument);
    CHECK_THROWS_AS(corr_restricted({2, 4, 1, 1, 3}, t2), std::invalid_argument);  // box mismatch
}

TEST_CASE("second moment ratio") {
    const auto& s = sieve();
    double r = ramanujan_second_moment_ratio(100, s);
    CHECK(r > 0.0);
    CHECK(r < 10.0);
    CHECK_THROWS_AS(ramanujan_second_moment_ratio(50, s), std::invalid_argument);
}
