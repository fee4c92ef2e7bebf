// Multiplicative correlation sums of the Piltz divisor functions,
//   sum_{j<=x} d_k(jn) d_k(jm),
// with three evaluation routes:
//   direct      - factor j once, merge with the fixed factorizations of n, m
//   br1         - for k=2 and (n,m)=1: sum_{u<=x} d(u^2 n m) [x/u]
//   restricted  - box-bounded variant sum_{j<=x} tau_k(jn;B) tau_k(jm;B)

#pragma once

#include <optional>

#include "prodeq/exact.hpp"
#include "prodeq/sieve.hpp"
#include "prodeq/tau_table.hpp"

namespace prodeq {

struct CorrelationQuery {
    int k = 2;
    u64 x = 1;
    u64 n = 1;
    u64 m = 1;
    std::optional<u64> box;  // required by the restricted route
};

ExactCount corr_direct(const CorrelationQuery& q, const SieveTable& s);

// requires gcd(n,m) == 1; equals corr_direct with k=2
ExactCount corr_br1(u64 x, u64 n, u64 m, const SieveTable& s);

// table must have order q.k and box *q.box
ExactCount corr_restricted(const CorrelationQuery& q, const BoundedTauTable& table);
ExactCount corr_restricted(const CorrelationQuery& q, const Budget& budget = {});

// sum_{n<=x} d(n)^2 / (x log^3 x); needs a sieve with order-2 table up to x
double ramanujan_second_moment_ratio(u64 x, const SieveTable& s);

}  // namespace prodeq
