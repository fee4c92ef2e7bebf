// Factor-closed set machinery.
//
// N(B,F) counts solutions of n1*n2 = n3*n4 with n1, n3 in [1,B] and
// n2, n4 in a factor-closed F.  Routes:
//   oracle   sum over products c of (#{(a,b): a<=B, b in F, ab=c})^2
//   formula  sum over reduced ratio classes n4/n2 of class size times [B/(n v m)]
//   family   closed form 2^{k-omega(m)-omega(n)} for F generated by k primes
// plus every bound evaluated against the exact counts.

#pragma once

#include <cstdint>
#include <vector>

#include "prodeq/budget.hpp"
#include "prodeq/exact.hpp"
#include "prodeq/sieve.hpp"

namespace prodeq {

class FcSet {
public:
    // validates closure; reports the first missing divisor when it fails
    static FcSet checked(std::vector<u64> elements);
    // minimal factor-closed superset of the seed; empty seed gives {1}
    static FcSet closure(const std::vector<u64>& seed);

    const std::vector<u64>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(u64 n) const;
    u64 max_element() const { return elems_.back(); }

private:
    explicit FcSet(std::vector<u64> sorted) : elems_(std::move(sorted)) {}
    std::vector<u64> elems_;
};

// F = { products of subsets of p_1 < ... < p_k }, all squarefree
class PrimeFamily {
public:
    explicit PrimeFamily(std::vector<u64> primes);

    int k() const { return static_cast<int>(primes_.size()); }
    const std::vector<u64>& primes() const { return primes_; }
    u64 primorial() const;       // p_1 * ... * p_k
    FcSet induced_set() const;   // 2^k elements
    bool member(u64 n) const;    // n a squarefree product of family primes
    int omega_in_family(u64 n) const;

private:
    std::vector<u64> primes_;
};

ExactCount count_nbf_oracle(u64 B, const FcSet& F, const Budget& budget = {});
ExactCount count_nbf_formula(u64 B, const FcSet& F);

// sigma(n,m) = 2^{k - omega(m) - omega(n)} for coprime family members
ExactCount sigma_prime_family(u64 n, u64 m, const PrimeFamily& fam);

ExactCount count_nbf_prime_family(u64 B, const PrimeFamily& fam);

struct LowerBoundResult {
    Rat exact_value;     // 2^k B (1 + 2 sum_{n in F, n != 1} 1/(2^omega(n) n))
    double value;
    bool hypothesis_ok;  // B >= p_1...p_k
};
LowerBoundResult np_lower_bound(u64 B, const PrimeFamily& fam);

// B (5/2)^k (1 + C sum_{n in F, n != 1} 1/(5^omega(n) n)) + 4^k
double np_upper_form(u64 B, const PrimeFamily& fam, double C);

// smallest C >= 0 (3 significant figures, doubling then bisection) with
// exact <= np_upper_form(C) for every B in the grid
double fit_upper_c(const PrimeFamily& fam, const std::vector<u64>& b_grid);

struct FcBoundBracket {
    double lower;
    ExactCount exact;
    double fitted_c;
    double upper_at_fitted_c;
    bool hypothesis_ok;
};
FcBoundBracket theorem_np_bracket(u64 B, const PrimeFamily& fam, const std::vector<u64>& fit_grid);

struct ProductIdentityResult {
    Rat lhs;  // sum_{d in F} (1/d) X^{-omega(d)}
    Rat rhs;  // prod_j (1 + 1/(X p_j))
};
ProductIdentityResult product_identity_X(const Rat& X, const PrimeFamily& fam);

struct WeierstrassBracket {
    Rat lower;    // 1 + sum a_i
    Rat product;  // prod (1 + a_i)
    Rat upper;    // 1 / (1 - sum a_i)
};
// requires 0 < a_i < 1 and sum a_i < 1; lower == product when a has one entry
WeierstrassBracket weierstrass_bracket(const std::vector<Rat>& a);

struct PropBoundResult {
    double value;
    bool hypothesis_ok;  // F subset of [1,B]
};
// 2 B^2 sum_{n in F, n != 1} 1/n + B^2
PropBoundResult prop_n_bound(u64 B, const FcSet& F);

// (8 pi) B sum_m theta(m) #F_m + #F sum_m #F_m, theta(m) = 2^omega(m)
double otherprop_bound(u64 B, const FcSet& F, const SieveTable& s);

struct NfCheckResult {
    double bound;
    ExactCount exact;
    std::vector<u64> f_elements;
};
// F = products of two factors <= floor(B^alpha); alpha in [0, 1/2]
NfCheckResult theorem_nf_check(u64 B, double alpha, const Budget& budget = {});

// all factor-closed subsets of [1, limit]; exponential, intended for limit <= 16
std::vector<FcSet> all_fc_subsets(u64 limit);

}  // namespace prodeq
