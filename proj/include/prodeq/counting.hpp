// Exact solution counts N_k(B) of  n_1...n_{k+1} = n_{k+2}...n_{2(k+1)},
// all unknowns in [1,B], by independent routes, plus the multiplication-table
// sets M_k(B) and the desk-scale asymptotic comparisons.
//
//   oracle    N_k(B) = sum_c tau_{k+1}(c;B)^2
//   coprime   N_k(B) = sum_{(n,m)=1, n,m<=B} [B/(n v m)] sum_t tau_k(nt;B) tau_k(mt;B)
//   fast      N_1(B) = B^2 + 2 sum_{m=2}^{B} phi(m) [B/m]^2        (O(B))

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodeq/budget.hpp"
#include "prodeq/constants.hpp"
#include "prodeq/exact.hpp"
#include "prodeq/sieve.hpp"

namespace prodeq {

// 10^9-bit ceiling for product-set bitmasks; caps M(B) enumeration near
// B = 3*10^4 unless the caller raises the budget
inline constexpr u64 kBitsetBudgetBytes = 125'000'000;

// The set M_k(B) of distinct products of k factors from [1,B], as a bitmask
// over [1, B^k].  Factor-closed by construction.
class ProductSet {
public:
    ProductSet(int k, u64 B, const Budget& budget = Budget{kBitsetBudgetBytes});

    int order() const { return k_; }
    u64 box() const { return B_; }
    u64 size() const { return count_; }
    u64 universe() const { return static_cast<u64>(mask_.size()) - 1; }  // B^k

    bool contains(u64 c) const { return c < mask_.size() && mask_[c]; }

    template <class F>
    void for_each(F&& fn) const {
        for (u64 c = 1; c < mask_.size(); ++c)
            if (mask_[c]) fn(c);
    }

    std::vector<u64> elements() const;  // sorted; intended for small sets

private:
    int k_;
    u64 B_;
    std::vector<bool> mask_;
    u64 count_ = 0;
};

// #M(B) * (log B)^delta * (log log B)^{3/2} / B^2, B >= 16
double ford_ratio(u64 B, const Budget& budget = Budget{kBitsetBudgetBytes});

ExactCount count_nk_oracle(int k, u64 B, const Budget& budget = {});
ExactCount count_nk_coprime(int k, u64 B, int threads = 1, const Budget& budget = {});
// needs phi up to B
ExactCount count_n1_fast(u64 B, const SieveTable& s);

struct TableCheckResult {
    bool ok;                      // N_1(B) == restricted_sum
    ExactCount n1;
    ExactCount restricted_sum;   // sum_{m in M(B)} tau_2(m;B)^2
    ExactCount unrestricted_sum; // sum_{m in M(B)} d(m)^2, logged for the discrepancy record
};
TableCheckResult n1_identity_tablecheck(u64 B, const SieveTable& s, const Budget& budget = {});

struct N1Gap {
    double gap;           // N_1(B) - (12/pi^2) B^2 log B - c1 B^2
    double over_b15;      // gap / B^{3/2}
    double over_err_exp;  // gap / B^{547/416}
};
N1Gap n1_asymptotic_gap(u64 B, const SieveTable& s);

struct BoundRatios {
    double lower;  // N_k(B) / (B^{k+1} (log B)^{k^2})
    double upper;  // N_k(B) / (B^{k+1} (log B)^{k^2+2k-2})
};
BoundRatios nk_bound_ratios(int k, u64 B, int threads = 1, const Budget& budget = {});

// sum_{m<=x} phi(m)/m^2, compensated accumulation
double phi_over_m2_partial(u64 x, const SieveTable& s);

struct CountReport {
    int k = 1;
    u64 B = 1;
    ExactCount value;
    std::string method;
    std::optional<double> main_term;
    std::optional<double> gap;
    std::optional<double> ratio_lower;
    std::optional<double> ratio_upper;
    double wall_time_s = 0.0;
};

}  // namespace prodeq
