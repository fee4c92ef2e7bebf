#include "prodeq/tau_table.hpp"

#include <stdexcept>

#include "prodeq/sieve.hpp"

namespace prodeq {

BoundedTauTable::BoundedTauTable(int k, u64 B, const Budget& budget) : k_(k), B_(B) {
    if (k < 1) throw std::invalid_argument("BoundedTauTable: k must be >= 1");
    if (B < 1) throw std::invalid_argument("BoundedTauTable: B must be >= 1");

    ExactCount cells = checked_pow(B, static_cast<unsigned>(k));
    // two u64 buffers during construction
    budget.check(checked_mul_u128(cells.raw() + 1, 16), "BoundedTauTable");
    u64 n = static_cast<u64>(cells.raw());

    counts_.assign(n + 1, 0);
    for (u64 c = 1; c <= B; ++c) counts_[c] = 1;

    u64 reach = B;  // prefix [1, B^j] populated so far
    for (int j = 2; j <= k; ++j) {
        std::vector<u64> next(n + 1, 0);
        u64 next_reach = (j == k) ? n : reach * B;
        for (u64 a = 1; a <= B; ++a) {
            for (u64 m = 1; m <= reach && a * m <= next_reach; ++m) {
                if (counts_[m] == 0) continue;
                u64 c = a * m;
                if (__builtin_add_overflow(next[c], counts_[m], &next[c]))
                    throw std::overflow_error("BoundedTauTable: count overflow");
            }
        }
        counts_.swap(next);
        reach = next_reach;
    }
}

ExactCount BoundedTauTable::sum_all() const {
    ExactCount s;
    for (u64 c = 1; c < counts_.size(); ++c) s += ExactCount(counts_[c]);
    return s;
}

ExactCount BoundedTauTable::sum_squares() const {
    ExactCount s;
    for (u64 c = 1; c < counts_.size(); ++c) s += ExactCount(counts_[c]).squared();
    return s;
}

namespace {

u128 tau_rec(u64 c, int k, u64 B, const std::vector<u64>& divs) {
    if (k == 1) return c <= B ? 1 : 0;
    u128 total = 0;
    for (u64 a : divs) {
        if (a > B) break;
        if (c % a != 0) continue;
        total = checked_add_u128(total, tau_rec(c / a, k - 1, B, divs));
    }
    return total;
}

}  // namespace

ExactCount restricted_tau(u64 c, int k, u64 B) {
    if (c < 1 || k < 1 || B < 1) throw std::invalid_argument("restricted_tau: c, k, B must be >= 1");
    SieveTable tiny(2, {});  // factorization helper only
    std::vector<u64> divs = divisors_of(tiny.factorize(c));
    return ExactCount::from_raw(tau_rec(c, k, B, divs));
}

}  // namespace prodeq
