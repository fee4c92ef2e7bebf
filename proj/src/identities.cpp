#include "prodeq/identities.hpp"

#include <cmath>
#include <numeric>

#include "prodeq/constants.hpp"

namespace prodeq {

namespace {

u64 d_of_factorization(const Factorization& f) {
    u128 r = 1;
    for (const auto& pp : f) r = checked_mul_u128(r, pp.e + 1);
    if (r > ~u64(0)) throw std::overflow_error("d overflow");
    return static_cast<u64>(r);
}

}  // namespace

ExactCount busche_ramanujan_rhs(u64 a, u64 b, const SieveTable& s) {
    if (a < 1 || b < 1) throw std::invalid_argument("busche_ramanujan_rhs: a, b must be >= 1");
    Factorization fab = merge_factorizations(s.factorize(a), s.factorize(b));
    u64 g = std::gcd(a, b);
    ExactCount total;
    for (u64 t : divisors_of(s.factorize(g))) {
        // exponents of a*b/t^2
        Factorization ft = s.factorize(t);
        Factorization q;
        for (const auto& pp : fab) {
            std::uint32_t drop = 2 * valuation(ft, pp.p);
            q.push_back({pp.p, pp.e - drop});
        }
        total += ExactCount(d_of_factorization(q));
    }
    return total;
}

ExactCount ramanujan_f_rhs(u64 u, u64 v, const SieveTable& s) {
    if (u < 1 || v < 1) throw std::invalid_argument("ramanujan_f_rhs: u, v must be >= 1");
    u64 g = std::gcd(u, v);
    i128 total = 0;  // signed partial sums; the full sum is d(uv) >= 0
    for (u64 dl : divisors_of(s.factorize(g))) {
        Factorization fd = s.factorize(dl);
        int mu = 1;
        for (const auto& pp : fd) {
            if (pp.e > 1) { mu = 0; break; }
            mu = -mu;
        }
        if (mu == 0) continue;
        u64 term = d_of_factorization(s.factorize(u / dl)) * d_of_factorization(s.factorize(v / dl));
        total = checked_add_i128(total, mu > 0 ? i128(term) : -i128(term));
    }
    if (total < 0) throw std::logic_error("ramanujan_f_rhs: negative sum");
    return ExactCount::from_raw(static_cast<u128>(total));
}

Rat wilson_alpha(u64 v, const SieveTable& s) {
    if (v < 1) throw std::invalid_argument("wilson_alpha: v must be >= 1");
    Rat sum;
    for (u64 dl : divisors_of(s.factorize(v))) {
        Factorization fd = s.factorize(dl);
        int mu = 1;
        for (const auto& pp : fd) {
            if (pp.e > 1) { mu = 0; break; }
            mu = -mu;
        }
        if (mu == 0) continue;
        u64 d_rest = d_of_factorization(s.factorize(v / dl));
        sum += Rat(i128(mu) * i128(d_rest), i128(dl));
    }
    return sum;
}

double wilson_beta_as_printed(u64 v, const SieveTable& s) {
    return -std::log(static_cast<double>(v)) * wilson_alpha(v, s).to_double();
}

ExactCount sum_d_nv(u64 v, u64 x, const SieveTable& s) {
    if (x > s.limit()) throw std::invalid_argument("sum_d_nv: x beyond sieve limit");
    Factorization fv = s.factorize(v);
    ExactCount total;
    for (u64 n = 1; n <= x; ++n)
        total += ExactCount(d_of_factorization(merge_factorizations(s.factorize(n), fv)));
    return total;
}

double wilson_beta_empirical(u64 v, u64 x, const SieveTable& s) {
    if (x < 100) throw std::invalid_argument("wilson_beta_empirical: x must be >= 100");
    double sum = sum_d_nv(v, x, s).to_double();
    double a = wilson_alpha(v, s).to_double();
    double xd = static_cast<double>(x);
    return (sum - a * xd * (std::log(xd) + 2.0 * kEulerGamma - 1.0)) / xd;
}

ExactCount rho(u64 d, u64 a, const SieveTable& s) {
    if (d < 1 || a < 1) throw std::invalid_argument("rho: d, a must be >= 1");
    Factorization fa = s.factorize(a);
    ExactCount r(1);
    for (const auto& pp : s.factorize(d)) {
        std::uint32_t va = valuation(fa, pp.p);
        std::uint32_t exp = (pp.e + std::min(va, pp.e)) / 2;
        r *= checked_pow(pp.p, exp);
    }
    return r;
}

ExactCount sum_d_an2(u64 a, u64 x, SumDan2Method method, const SieveTable& s) {
    if (x < 1) throw std::invalid_argument("sum_d_an2: x must be >= 1");
    if (x > s.limit()) throw std::invalid_argument("sum_d_an2: x beyond sieve limit");
    Factorization fa = s.factorize(a);
    ExactCount total;
    if (method == SumDan2Method::direct) {
        for (u64 n = 1; n <= x; ++n) {
            Factorization f = merge_factorizations(square_factorization(s.factorize(n)), fa);
            total += ExactCount(d_of_factorization(f));
        }
    } else {
        for (u64 d = 1; d <= x; ++d)
            total += rho(d, a, s) * ExactCount(x / d);
        total *= ExactCount(2);
    }
    return total;
}

}  // namespace prodeq
