#include "prodeq/fc_sets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "prodeq/constants.hpp"
#include "prodeq/counting.hpp"

namespace prodeq {

FcSet FcSet::checked(std::vector<u64> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() < 1)
        throw std::invalid_argument("FcSet: elements must be positive");
    std::set<u64> have(elements.begin(), elements.end());
    if (!have.count(1)) throw std::invalid_argument("FcSet: missing divisor 1");
    for (u64 n : elements) {
        for (u64 d = 2; d * d <= n; ++d) {
            if (n % d != 0) continue;
            if (!have.count(d))
                throw std::invalid_argument("FcSet: not factor-closed, missing divisor " +
                                            std::to_string(d) + " of " + std::to_string(n));
            if (!have.count(n / d))
                throw std::invalid_argument("FcSet: not factor-closed, missing divisor " +
                                            std::to_string(n / d) + " of " + std::to_string(n));
        }
    }
    return FcSet(std::move(elements));
}

FcSet FcSet::closure(const std::vector<u64>& seed) {
    std::set<u64> out{1};
    for (u64 n : seed) {
        if (n < 1) throw std::invalid_argument("FcSet: elements must be positive");
        for (u64 d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.insert(d);
                out.insert(n / d);
            }
        }
    }
    return FcSet(std::vector<u64>(out.begin(), out.end()));
}

bool FcSet::contains(u64 n) const {
    return std::binary_search(elems_.begin(), elems_.end(), n);
}

PrimeFamily::PrimeFamily(std::vector<u64> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) throw std::invalid_argument("PrimeFamily: need at least one prime");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        u64 p = primes_[i];
        if (p < 2) throw std::invalid_argument("PrimeFamily: not a prime: " + std::to_string(p));
        for (u64 d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("PrimeFamily: not a prime: " + std::to_string(p));
        if (i > 0 && primes_[i - 1] >= p)
            throw std::invalid_argument("PrimeFamily: primes must be strictly increasing");
    }
}

u64 PrimeFamily::primorial() const {
    u128 r = 1;
    for (u64 p : primes_) r = checked_mul_u128(r, p);
    if (r > ~u64(0)) throw std::overflow_error("PrimeFamily: primorial overflow");
    return static_cast<u64>(r);
}

FcSet PrimeFamily::induced_set() const {
    std::vector<u64> elems{1};
    for (u64 p : primes_) {
        std::size_t old = elems.size();
        for (std::size_t i = 0; i < old; ++i) {
            u128 v = checked_mul_u128(elems[i], p);
            if (v > ~u64(0)) throw std::overflow_error("PrimeFamily: induced set overflow");
            elems.push_back(static_cast<u64>(v));
        }
    }
    return FcSet::checked(std::move(elems));
}

bool PrimeFamily::member(u64 n) const {
    for (u64 p : primes_) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;  // not squarefree in the family
        }
    }
    return n == 1;
}

int PrimeFamily::omega_in_family(u64 n) const {
    int w = 0;
    for (u64 p : primes_)
        if (n % p == 0) ++w;
    return w;
}

ExactCount count_nbf_oracle(u64 B, const FcSet& F, const Budget& budget) {
    if (B < 1) throw std::invalid_argument("count_nbf_oracle: B must be >= 1");
    u128 top = checked_mul_u128(B, F.max_element());
    budget.check(checked_mul_u128(top + 1, 8), "count_nbf_oracle");
    std::vector<u64> mult(static_cast<std::size_t>(top) + 1, 0);
    for (u64 a = 1; a <= B; ++a)
        for (u64 b : F.elements()) ++mult[a * b];
    ExactCount total;
    for (u64 v : mult)
        if (v) total += ExactCount(v).squared();
    return total;
}

ExactCount count_nbf_formula(u64 B, const FcSet& F) {
    if (B < 1) throw std::invalid_argument("count_nbf_formula: B must be >= 1");
    // group pairs (n2, n4) by the reduced ratio n4/n2 = m/n; each class key is
    // a coprime pair (m, n) in F x F by factor-closedness
    std::map<std::pair<u64, u64>, u64> classes;
    for (u64 n2 : F.elements()) {
        for (u64 n4 : F.elements()) {
            u64 g = std::gcd(n2, n4);
            ++classes[{n4 / g, n2 / g}];
        }
    }
    ExactCount total;
    for (const auto& [ratio, cnt] : classes) {
        u64 mx = std::max(ratio.first, ratio.second);
        total += ExactCount(cnt) * ExactCount(B / mx);
    }
    return total;
}

ExactCount sigma_prime_family(u64 n, u64 m, const PrimeFamily& fam) {
    if (!fam.member(n) || !fam.member(m))
        throw std::invalid_argument("sigma_prime_family: argument outside the family");
    if (std::gcd(n, m) != 1)
        throw std::invalid_argument("sigma_prime_family: arguments must be coprime");
    int e = fam.k() - fam.omega_in_family(n) - fam.omega_in_family(m);
    return checked_pow(2, static_cast<unsigned>(e));
}

ExactCount count_nbf_prime_family(u64 B, const PrimeFamily& fam) {
    if (B < 1) throw std::invalid_argument("count_nbf_prime_family: B must be >= 1");
    FcSet F = fam.induced_set();
    ExactCount total;
    for (u64 n : F.elements()) {
        for (u64 m : F.elements()) {
            if (std::gcd(n, m) != 1) continue;
            u64 fb = B / std::max(n, m);
            if (fb == 0) continue;
            total += sigma_prime_family(n, m, fam) * ExactCount(fb);
        }
    }
    return total;
}

LowerBoundResult np_lower_bound(u64 B, const PrimeFamily& fam) {
    FcSet F = fam.induced_set();
    Rat sum;
    for (u64 n : F.elements()) {
        if (n == 1) continue;
        i128 den = checked_mul_i128(i128(1) << fam.omega_in_family(n), i128(n));
        sum += Rat(1, den);
    }
    Rat value = Rat::integer(i128(1) << fam.k()) * Rat::integer(i128(B)) *
                (Rat::integer(1) + Rat(2, 1) * sum);
    return {value, value.to_double(), B >= fam.primorial()};
}

namespace {

double upper_tail_sum(const PrimeFamily& fam) {
    FcSet F = fam.induced_set();
    Rat sum;
    for (u64 n : F.elements()) {
        if (n == 1) continue;
        i128 five = 1;
        for (int i = 0; i < fam.omega_in_family(n); ++i) five *= 5;
        sum += Rat(1, checked_mul_i128(five, i128(n)));
    }
    return sum.to_double();
}

}  // namespace

double np_upper_form(u64 B, const PrimeFamily& fam, double C) {
    double s = upper_tail_sum(fam);
    double bd = static_cast<double>(B);
    return bd * std::pow(2.5, fam.k()) * (1.0 + C * s) + std::pow(4.0, fam.k());
}

double fit_upper_c(const PrimeFamily& fam, const std::vector<u64>& b_grid) {
    std::vector<double> exact;
    exact.reserve(b_grid.size());
    for (u64 B : b_grid) exact.push_back(count_nbf_prime_family(B, fam).to_double());

    auto holds = [&](double C) {
        for (std::size_t i = 0; i < b_grid.size(); ++i)
            if (exact[i] > np_upper_form(b_grid[i], fam, C)) return false;
        return true;
    };
    if (holds(0.0)) return 0.0;
    double hi = 1.0;
    while (!holds(hi)) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("fit_upper_c: no finite C found");
    }
    double lo = hi / 2.0;
    while ((hi - lo) / hi > 5e-4) {  // 3 significant figures
        double mid = 0.5 * (lo + hi);
        (holds(mid) ? hi : lo) = mid;
    }
    return hi;
}

FcBoundBracket theorem_np_bracket(u64 B, const PrimeFamily& fam, const std::vector<u64>& fit_grid) {
    LowerBoundResult lo = np_lower_bound(B, fam);
    ExactCount exact = count_nbf_prime_family(B, fam);
    double c = fit_upper_c(fam, fit_grid);
    return {lo.value, exact, c, np_upper_form(B, fam, c), lo.hypothesis_ok};
}

ProductIdentityResult product_identity_X(const Rat& X, const PrimeFamily& fam) {
    if (X.num() == 0) throw std::invalid_argument("product_identity_X: X must be nonzero");
    FcSet F = fam.induced_set();
    Rat lhs;
    for (u64 d : F.elements()) {
        Rat xpow = Rat::integer(1);
        for (int i = 0; i < fam.omega_in_family(d); ++i) xpow /= X;
        lhs += Rat(1, i128(d)) * xpow;
    }
    Rat rhs = Rat::integer(1);
    for (u64 p : fam.primes())
        rhs *= Rat::integer(1) + Rat(1, 1) / (X * Rat::integer(i128(p)));
    return {lhs, rhs};
}

WeierstrassBracket weierstrass_bracket(const std::vector<Rat>& a) {
    if (a.empty()) throw std::invalid_argument("weierstrass_bracket: need at least one term");
    Rat sum;
    Rat prod = Rat::integer(1);
    for (const Rat& ai : a) {
        if (!(Rat(0, 1) < ai) || !(ai < Rat::integer(1)))
            throw std::invalid_argument("weierstrass_bracket: each a_i must lie in (0,1)");
        sum += ai;
        prod *= Rat::integer(1) + ai;
    }
    if (!(sum < Rat::integer(1)))
        throw std::invalid_argument("weierstrass_bracket: sum of a_i must be < 1");
    Rat lower = Rat::integer(1) + sum;
    Rat upper = Rat::integer(1) / (Rat::integer(1) - sum);
    return {lower, prod, upper};
}

PropBoundResult prop_n_bound(u64 B, const FcSet& F) {
    Rat sum;
    for (u64 n : F.elements())
        if (n != 1) sum += Rat(1, i128(n));
    double bd = static_cast<double>(B);
    return {2.0 * bd * bd * sum.to_double() + bd * bd, F.max_element() <= B};
}

double otherprop_bound(u64 B, const FcSet& F, const SieveTable& s) {
    double sum_theta = 0.0;
    double sum_sizes = 0.0;
    for (u64 m : F.elements()) {
        u64 fm = 0;  // #F_m = #{d in F : m*d in F}
        for (u64 d : F.elements()) {
            u128 md = checked_mul_u128(m, d);
            if (md <= F.max_element() && F.contains(static_cast<u64>(md))) ++fm;
        }
        double theta = std::pow(2.0, s.factorize(m).size());  // # squarefree divisors
        sum_theta += theta * static_cast<double>(fm);
        sum_sizes += static_cast<double>(fm);
    }
    return 8.0 * kPi * static_cast<double>(B) * sum_theta +
           static_cast<double>(F.size()) * sum_sizes;
}

NfCheckResult theorem_nf_check(u64 B, double alpha, const Budget& budget) {
    if (alpha < 0.0 || alpha > 0.5)
        throw std::invalid_argument("theorem_nf_check: alpha must be in [0, 1/2]");
    double root = std::pow(static_cast<double>(B), alpha);
    u64 r = static_cast<u64>(root + 1e-9);
    if (r < 1) r = 1;
    ProductSet ps(2, r, budget);
    FcSet F = FcSet::checked(ps.elements());
    ExactCount exact = count_nbf_oracle(B, F, budget);
    double tail = 0.0;
    double lo = root, hi = std::pow(static_cast<double>(B), 2.0 * alpha);
    for (u64 m : F.elements())
        if (static_cast<double>(m) > lo && static_cast<double>(m) <= hi + 1e-9)
            tail += 1.0 / static_cast<double>(m);
    double bound = (1.0 + kN1Leading + 2.0 * tail) * std::pow(static_cast<double>(B), 1.0 + 2.0 * alpha);
    return {bound, exact, F.elements()};
}

std::vector<FcSet> all_fc_subsets(u64 limit) {
    if (limit < 1 || limit > 20) throw std::invalid_argument("all_fc_subsets: limit must be in [1,20]");
    std::vector<u64> cand;
    for (u64 n = 2; n <= limit; ++n) cand.push_back(n);
    std::vector<FcSet> out;
    for (u64 mask = 0; mask < (u64(1) << cand.size()); ++mask) {
        std::vector<u64> elems{1};
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (mask >> i & 1) elems.push_back(cand[i]);
        std::set<u64> have(elems.begin(), elems.end());
        bool closed = true;
        for (u64 n : elems) {
            for (u64 d = 2; closed && d * d <= n; ++d)
                if (n % d == 0 && (!have.count(d) || !have.count(n / d))) closed = false;
            if (!closed) break;
        }
        if (closed) out.push_back(FcSet::checked(std::move(elems)));
    }
    return out;
}

}  // namespace prodeq
