#include "prodeq/counting.hpp"

#include <cmath>
#include <numeric>

#include "prodeq/parallel.hpp"
#include "prodeq/tau_table.hpp"

namespace prodeq {

ProductSet::ProductSet(int k, u64 B, const Budget& budget) : k_(k), B_(B) {
    if (k < 1) throw std::invalid_argument("ProductSet: k must be >= 1");
    if (B < 1) throw std::invalid_argument("ProductSet: B must be >= 1");
    ExactCount cells = checked_pow(B, static_cast<unsigned>(k));
    budget.check(cells.raw() / 8 + 1, "ProductSet");
    u64 n = static_cast<u64>(cells.raw());
    mask_.assign(n + 1, false);

    if (k == 1) {
        for (u64 c = 1; c <= B; ++c) mask_[c] = true;
        count_ = B;
        return;
    }

    // products of two factors, i <= j
    for (u64 i = 1; i <= B; ++i)
        for (u64 j = i; j <= B; ++j) mask_[i * j] = true;

    // fold in the remaining k-2 factors one at a time
    for (int step = 3; step <= k; ++step) {
        u64 prev_reach = 1;
        for (int t = 0; t < step - 1; ++t) prev_reach *= B;
        std::vector<u64> prev;
        for (u64 c = 1; c <= prev_reach; ++c)
            if (mask_[c]) prev.push_back(c);
        for (u64 c : prev)
            for (u64 a = 2; a <= B; ++a) mask_[c * a] = true;
    }

    for (u64 c = 1; c < mask_.size(); ++c)
        if (mask_[c]) ++count_;
}

std::vector<u64> ProductSet::elements() const {
    std::vector<u64> out;
    out.reserve(count_);
    for_each([&](u64 c) { out.push_back(c); });
    return out;
}

double ford_ratio(u64 B, const Budget& budget) {
    if (B < 16) throw std::invalid_argument("ford_ratio: B must be >= 16 (log log B > 0)");
    ProductSet m(2, B, budget);
    double lb = std::log(static_cast<double>(B));
    return static_cast<double>(m.size()) * std::pow(lb, ford_delta()) *
           std::pow(std::log(lb), 1.5) / (static_cast<double>(B) * static_cast<double>(B));
}

ExactCount count_nk_oracle(int k, u64 B, const Budget& budget) {
    if (k < 1) throw std::invalid_argument("count_nk_oracle: k must be >= 1");
    BoundedTauTable t(k + 1, B, budget);
    return t.sum_squares();
}

ExactCount count_nk_coprime(int k, u64 B, int threads, const Budget& budget) {
    if (k < 1) throw std::invalid_argument("count_nk_coprime: k must be >= 1");
    BoundedTauTable t(k, B, budget);
    u64 reach = t.size();  // B^k

    // diagonal (n,m) = (1,1): full floor B times sum of squares
    ExactCount total = ExactCount(B) * t.sum_squares();

    // off-diagonal coprime pairs, n < m doubled; n = m > 1 impossible under gcd = 1
    std::vector<ExactCount> partial(static_cast<std::size_t>(B) + 1);
    parallel_for_chunks(2, B, threads, [&](u64 m) {
        ExactCount acc;
        u64 fb = B / m;
        if (fb == 0) return;
        u64 tmax = reach / m;
        for (u64 n = 1; n < m; ++n) {
            if (std::gcd(n, m) != 1) continue;
            u128 inner = 0;
            for (u64 j = 1; j <= tmax; ++j)
                inner = checked_add_u128(inner, u128(t.tau(n * j)) * t.tau(m * j));
            acc += ExactCount(2) * ExactCount(fb) * ExactCount::from_raw(inner);
        }
        partial[m] = acc;
    });
    for (u64 m = 2; m <= B; ++m) total += partial[m];
    return total;
}

ExactCount count_n1_fast(u64 B, const SieveTable& s) {
    if (B < 1) throw std::invalid_argument("count_n1_fast: B must be >= 1");
    if (B > s.limit()) throw std::invalid_argument("count_n1_fast: B beyond sieve limit");
    ExactCount total = ExactCount(B) * ExactCount(B);
    for (u64 m = 2; m <= B; ++m) {
        u64 fb = B / m;
        total += ExactCount(2) * ExactCount(s.phi(m)) * ExactCount(fb) * ExactCount(fb);
    }
    return total;
}

TableCheckResult n1_identity_tablecheck(u64 B, const SieveTable& s, const Budget& budget) {
    BoundedTauTable t(2, B, budget);
    ProductSet m(2, B, budget);
    ExactCount restricted, unrestricted;
    m.for_each([&](u64 c) {
        restricted += ExactCount(t.tau(c)).squared();
        u64 dc = c <= s.limit() ? s.d(c) : dk_value_u64(2, s.factorize(c));
        unrestricted += ExactCount(dc).squared();
    });
    ExactCount n1 = count_n1_fast(B, s);
    return {n1 == restricted, n1, restricted, unrestricted};
}

N1Gap n1_asymptotic_gap(u64 B, const SieveTable& s) {
    if (B < 10) throw std::invalid_argument("n1_asymptotic_gap: B must be >= 10");
    double bd = static_cast<double>(B);
    double main = kN1Leading * bd * bd * std::log(bd) + kN1Secondary * bd * bd;
    double gap = count_n1_fast(B, s).to_double() - main;
    return {gap, gap / std::pow(bd, 1.5), gap / std::pow(bd, kN1ErrExponent)};
}

BoundRatios nk_bound_ratios(int k, u64 B, int threads, const Budget& budget) {
    if (k < 2) throw std::invalid_argument("nk_bound_ratios: k must be >= 2");
    if (B < 2) throw std::invalid_argument("nk_bound_ratios: B must be >= 2");
    double nk = count_nk_coprime(k, B, threads, budget).to_double();
    double bd = static_cast<double>(B);
    double lb = std::log(bd);
    double bk1 = std::pow(bd, k + 1);
    return {nk / (bk1 * std::pow(lb, k * k)), nk / (bk1 * std::pow(lb, k * k + 2 * k - 2))};
}

double phi_over_m2_partial(u64 x, const SieveTable& s) {
    if (x < 2) throw std::invalid_argument("phi_over_m2_partial: x must be >= 2");
    if (x > s.limit()) throw std::invalid_argument("phi_over_m2_partial: x beyond sieve limit");
    double sum = 0.0, comp = 0.0;
    for (u64 m = 1; m <= x; ++m) {
        double md = static_cast<double>(m);
        double term = static_cast<double>(s.phi(m)) / (md * md);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace prodeq
