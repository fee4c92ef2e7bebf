#include "prodeq/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace prodeq {

SieveTable::SieveTable(u64 limit, std::vector<int> orders, const Budget& budget)
    : limit_(limit), orders_(std::move(orders)) {
    if (limit_ == 0) throw std::invalid_argument("SieveTable: limit must be >= 1");
    if (limit_ > (u64(1) << 32)) throw std::invalid_argument("SieveTable: limit too large for 32-bit spf");
    for (int k : orders_)
        if (k < 1) throw std::invalid_argument("SieveTable: d_k order must be >= 1");

    u128 per_entry = 4 + 1 + 8 + 1 + 8 /*aux*/ + 1 /*aux*/ + u128(8) * orders_.size();
    budget.check(per_entry * (limit_ + 1), "SieveTable");

    u64 n1 = limit_ + 1;
    spf_.assign(n1, 0);
    mu_.assign(n1, 0);
    phi_.assign(n1, 0);
    omega_.assign(n1, 0);
    dk_.assign(orders_.size(), std::vector<u64>(n1, 0));

    spf_[1] = 1;
    mu_[1] = 1;
    phi_[1] = 1;
    omega_[1] = 0;
    for (auto& t : dk_) t[1] = 1;

    // linear sieve for spf
    for (u64 n = 2; n <= limit_; ++n) {
        if (spf_[n] == 0) {
            spf_[n] = static_cast<std::uint32_t>(n);
            primes_.push_back(static_cast<std::uint32_t>(n));
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[n] || u128(p) * n > limit_) break;
            spf_[p * n] = p;
        }
    }

    // exp_spf[n] = v_p(n), pe[n] = p^{v_p(n)} for p = spf(n)
    std::vector<std::uint8_t> exp_spf(n1, 0);
    std::vector<u64> pe(n1, 0);
    pe[1] = 1;
    for (u64 n = 2; n <= limit_; ++n) {
        u64 p = spf_[n];
        u64 m = n / p;
        if (m % p == 0) {
            exp_spf[n] = static_cast<std::uint8_t>(exp_spf[m] + 1);
            pe[n] = pe[m] * p;
        } else {
            exp_spf[n] = 1;
            pe[n] = p;
        }
        u64 rest = n / pe[n];  // coprime to p
        std::uint32_t e = exp_spf[n];
        mu_[n] = (e > 1) ? 0 : static_cast<std::int8_t>(-mu_[rest]);
        phi_[n] = phi_[rest] * (pe[n] / p) * (p - 1);
        omega_[n] = static_cast<std::uint8_t>(omega_[rest] + 1);
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            u128 v = checked_mul_u128(dk_[i][rest], dk_prime_power(orders_[i], e));
            if (v > ~u64(0)) throw std::overflow_error("d_k table overflow");
            dk_[i][n] = static_cast<u64>(v);
        }
    }
}

bool SieveTable::has_order(int k) const {
    return std::find(orders_.begin(), orders_.end(), k) != orders_.end();
}

u64 SieveTable::dk(int k, u64 n) const {
    check(n);
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] == k) return dk_[i][n];
    throw std::invalid_argument("SieveTable: d_k order " + std::to_string(k) + " not precomputed");
}

Factorization SieveTable::factorize(u64 n) const {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    if (n <= limit_) {
        while (n > 1) {
            u64 p = spf_[n];
            std::uint32_t e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
        return f;
    }
    for (std::uint32_t p : primes_) {
        if (u128(p) * p > n) break;
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    // continue past the sieve if the remainder can still be composite
    u64 q = primes_.empty() ? 2 : u64(primes_.back()) + 1;
    while (n > 1 && u128(q) * q <= n) {
        if (n % q == 0) {
            std::uint32_t e = 0;
            while (n % q == 0) { n /= q; ++e; }
            f.push_back({q, e});
        }
        ++q;
    }
    if (n > 1) f.push_back({n, 1});
    std::sort(f.begin(), f.end(), [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return f;
}

u64 dk_prime_power(int k, std::uint32_t e) {
    // C(e+k-1, e) via running binomial, exact division at each step
    u128 r = 1;
    for (std::uint32_t j = 1; j <= e; ++j) {
        r = checked_mul_u128(r, u128(k - 1) + j);
        r /= j;
    }
    if (r > ~u64(0)) throw std::overflow_error("dk_prime_power overflow");
    return static_cast<u64>(r);
}

ExactCount dk_value(int k, const Factorization& f) {
    ExactCount r(1);
    for (const auto& pp : f) r *= ExactCount(dk_prime_power(k, pp.e));
    return r;
}

u64 dk_value_u64(int k, const Factorization& f) {
    ExactCount r = dk_value(k, f);
    if (r.raw() > ~u64(0)) throw std::overflow_error("d_k exceeds 64 bits");
    return static_cast<u64>(r.raw());
}

Factorization merge_factorizations(const Factorization& a, const Factorization& b) {
    Factorization out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].p < b[j].p) out.push_back(a[i++]);
        else if (a[i].p > b[j].p) out.push_back(b[j++]);
        else { out.push_back({a[i].p, a[i].e + b[j].e}); ++i; ++j; }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

Factorization square_factorization(const Factorization& f) {
    Factorization out = f;
    for (auto& pp : out) pp.e *= 2;
    return out;
}

u64 product_of(const Factorization& f) {
    u128 r = 1;
    for (const auto& pp : f)
        for (std::uint32_t i = 0; i < pp.e; ++i) r = checked_mul_u128(r, pp.p);
    if (r > ~u64(0)) throw std::overflow_error("product_of overflow");
    return static_cast<u64>(r);
}

std::vector<u64> divisors_of(const Factorization& f) {
    std::vector<u64> ds{1};
    for (const auto& pp : f) {
        std::size_t old = ds.size();
        u128 q = 1;
        for (std::uint32_t e = 1; e <= pp.e; ++e) {
            q = checked_mul_u128(q, pp.p);
            for (std::size_t i = 0; i < old; ++i) {
                u128 v = checked_mul_u128(ds[i], q);
                if (v > ~u64(0)) throw std::overflow_error("divisors_of overflow");
                ds.push_back(static_cast<u64>(v));
            }
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::uint32_t valuation(const Factorization& f, u64 p) {
    for (const auto& pp : f)
        if (pp.p == p) return pp.e;
    return 0;
}

}  // namespace prodeq
