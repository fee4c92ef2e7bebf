// Multiplicative-function tables on [1, N] and factorization helpers.
//
// One linear sieve fills smallest-prime-factor, then a single pass derives
//   mu, phi, omega and d_k (for each requested order k) from
//   f(n) = f(n / p^e) * f(p^e),  p = spf(n), e = v_p(n).
// d_k(p^e) = C(e+k-1, e), so d_k(n) = prod_p C(v_p(n)+k-1, v_p(n)).

#pragma once

#include <cstdint>
#include <vector>

#include "prodeq/budget.hpp"
#include "prodeq/exact.hpp"

namespace prodeq {

struct PrimePower {
    u64 p;
    std::uint32_t e;
};

// sorted by prime
using Factorization = std::vector<PrimePower>;

class SieveTable {
public:
    // orders: which d_k tables to precompute (k >= 1); {2} covers most uses
    explicit SieveTable(u64 limit, std::vector<int> orders = {2}, const Budget& budget = {});

    u64 limit() const { return limit_; }

    u64 spf(u64 n) const { return spf_[check(n)]; }
    int mu(u64 n) const { return mu_[check(n)]; }
    u64 phi(u64 n) const { return phi_[check(n)]; }
    int omega(u64 n) const { return omega_[check(n)]; }
    bool has_order(int k) const;
    u64 dk(int k, u64 n) const;  // table lookup; n <= limit and k precomputed
    u64 d(u64 n) const { return dk(2, n); }

    const std::vector<std::uint32_t>& primes() const { return primes_; }

    // works for any n >= 1; uses spf below the limit, trial division above
    Factorization factorize(u64 n) const;

private:
    u64 check(u64 n) const {
        if (n == 0 || n > limit_) throw std::out_of_range("SieveTable: index out of range");
        return n;
    }

    u64 limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> mu_;
    std::vector<u64> phi_;
    std::vector<std::uint8_t> omega_;
    std::vector<int> orders_;
    std::vector<std::vector<u64>> dk_;  // parallel to orders_
    std::vector<std::uint32_t> primes_;
};

// d_k(p^e) = C(e+k-1, e), exact
u64 dk_prime_power(int k, std::uint32_t e);

// d_k of a factored integer
ExactCount dk_value(int k, const Factorization& f);
u64 dk_value_u64(int k, const Factorization& f);

// exponent-wise sum (product of the underlying integers)
Factorization merge_factorizations(const Factorization& a, const Factorization& b);
// exponents doubled (the square)
Factorization square_factorization(const Factorization& f);

u64 product_of(const Factorization& f);
std::vector<u64> divisors_of(const Factorization& f);  // sorted ascending
std::uint32_t valuation(const Factorization& f, u64 p);

}  // namespace prodeq
