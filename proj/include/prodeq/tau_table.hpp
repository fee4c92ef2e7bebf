// Restricted divisor counts
//   tau_k(c; B) = #{ (a_1,...,a_k) in [1,B]^k : a_1*...*a_k = c }.
//
// tau_k agrees with the Piltz function d_k on c <= B and vanishes beyond B^k;
// summed over all c it gives exactly B^k.  Tables are built by k-fold bounded
// Dirichlet convolution; single queries use divisor descent.

#pragma once

#include <cstdint>
#include <vector>

#include "prodeq/budget.hpp"
#include "prodeq/exact.hpp"

namespace prodeq {

class BoundedTauTable {
public:
    BoundedTauTable(int k, u64 B, const Budget& budget = {});

    int order() const { return k_; }
    u64 box() const { return B_; }
    u64 size() const { return static_cast<u64>(counts_.size()) - 1; }  // B^k

    // 0 for c outside [1, B^k]
    u64 tau(u64 c) const { return c < counts_.size() ? counts_[c] : 0; }

    ExactCount sum_all() const;      // must equal B^k
    ExactCount sum_squares() const;  // sum_c tau(c)^2

private:
    int k_;
    u64 B_;
    std::vector<u64> counts_;  // index 0 unused
};

// single-query tau_k(c; B) without building the full table
ExactCount restricted_tau(u64 c, int k, u64 B);

}  // namespace prodeq
