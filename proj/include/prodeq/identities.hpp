// Classical divisor-function identities and their evaluation routes:
//
//   Busche-Ramanujan   d(a)d(b)  = sum_{t | (a,b)} d(ab/t^2)
//   Ramanujan (F)      d(uv)     = sum_{delta | u, delta | v} mu(delta) d(u/delta) d(v/delta)
//   Wilson             sum_{n<=x} d(nv) = alpha(v) x (log x + 2*gamma - 1) + beta(v) x + ...
//                      alpha(v)  = sum_{delta | v} mu(delta)/delta d(v/delta)
//   rho                rho(d; a) = prod_{p | d} p^[(v_p(d) + min(v_p(a), v_p(d)))/2]
//                      sum_{n<=x} d(a n^2) ~ 2 sum_{d<=x} rho(d) [x/d]
//
// The printed beta(v) = -(log v) alpha(v) is reproduced verbatim alongside an
// empirical estimator; the two disagree and both are reported.

#pragma once

#include "prodeq/exact.hpp"
#include "prodeq/sieve.hpp"

namespace prodeq {

// right-hand side of Busche-Ramanujan; equals d(a)*d(b)
ExactCount busche_ramanujan_rhs(u64 a, u64 b, const SieveTable& s);

// right-hand side of Ramanujan's formula (F); equals d(u*v)
ExactCount ramanujan_f_rhs(u64 u, u64 v, const SieveTable& s);

Rat wilson_alpha(u64 v, const SieveTable& s);

// -(log v) * alpha(v), the secondary coefficient exactly as printed
double wilson_beta_as_printed(u64 v, const SieveTable& s);

// sum_{n<=x} d(n v), exact
ExactCount sum_d_nv(u64 v, u64 x, const SieveTable& s);

// least-squares-free estimator of the secondary coefficient:
// (sum_{n<=x} d(nv) - alpha(v) x (log x + 2 gamma - 1)) / x,  x >= 100
double wilson_beta_empirical(u64 v, u64 x, const SieveTable& s);

ExactCount rho(u64 d, u64 a, const SieveTable& s);

enum class SumDan2Method { direct, rho_formula };

// direct: exact sum_{n<=x} d(a n^2); rho_formula: 2 sum_{d<=x} rho(d)[x/d]
ExactCount sum_d_an2(u64 a, u64 x, SumDan2Method method, const SieveTable& s);

}  // namespace prodeq
