#include "prodeq/correlation.hpp"

#include <cmath>
#include <numeric>

namespace prodeq {

ExactCount corr_direct(const CorrelationQuery& q, const SieveTable& s) {
    if (q.k < 1) throw std::invalid_argument("corr_direct: k must be >= 1");
    if (q.x < 1 || q.n < 1 || q.m < 1)
        throw std::invalid_argument("corr_direct: x, n, m must be >= 1");
    if (q.x > s.limit()) throw std::invalid_argument("corr_direct: x beyond sieve limit");

    Factorization fn = s.factorize(q.n);
    Factorization fm = s.factorize(q.m);
    ExactCount total;
    for (u64 j = 1; j <= q.x; ++j) {
        Factorization fj = s.factorize(j);
        ExactCount left = dk_value(q.k, merge_factorizations(fj, fn));
        ExactCount right = dk_value(q.k, merge_factorizations(fj, fm));
        total += left * right;
    }
    return total;
}

ExactCount corr_br1(u64 x, u64 n, u64 m, const SieveTable& s) {
    if (std::gcd(n, m) != 1) throw std::invalid_argument("corr_br1: n and m must be coprime");
    if (x < 1) throw std::invalid_argument("corr_br1: x must be >= 1");
    if (x > s.limit()) throw std::invalid_argument("corr_br1: x beyond sieve limit");

    Factorization fnm = merge_factorizations(s.factorize(n), s.factorize(m));
    ExactCount total;
    for (u64 u = 1; u <= x; ++u) {
        Factorization f = merge_factorizations(square_factorization(s.factorize(u)), fnm);
        total += dk_value(2, f) * ExactCount(x / u);
    }
    return total;
}

ExactCount corr_restricted(const CorrelationQuery& q, const BoundedTauTable& table) {
    if (!q.box) throw std::invalid_argument("corr_restricted: box bound required");
    if (table.order() != q.k || table.box() != *q.box)
        throw std::invalid_argument("corr_restricted: table does not match query");
    ExactCount total;
    for (u64 j = 1; j <= q.x; ++j) {
        u64 jn, jm;
        if (__builtin_mul_overflow(j, q.n, &jn) || __builtin_mul_overflow(j, q.m, &jm))
            throw std::overflow_error("corr_restricted: argument overflow");
        total += ExactCount(table.tau(jn)) * ExactCount(table.tau(jm));
    }
    return total;
}

ExactCount corr_restricted(const CorrelationQuery& q, const Budget& budget) {
    if (!q.box) throw std::invalid_argument("corr_restricted: box bound required");
    BoundedTauTable table(q.k, *q.box, budget);
    return corr_restricted(q, table);
}

double ramanujan_second_moment_ratio(u64 x, const SieveTable& s) {
    if (x < 100) throw std::invalid_argument("ramanujan_second_moment_ratio: x must be >= 100");
    if (x > s.limit() || !s.has_order(2))
        throw std::invalid_argument("ramanujan_second_moment_ratio: sieve must cover x with d_2");
    ExactCount sum;
    for (u64 n = 1; n <= x; ++n) sum += ExactCount(s.d(n)).squared();
    double xd = static_cast<double>(x);
    return sum.to_double() / (xd * std::pow(std::log(xd), 3));
}

}  // namespace prodeq
