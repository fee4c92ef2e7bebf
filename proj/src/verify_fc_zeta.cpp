#include <cmath>
#include <complex>
#include <numeric>

#include "prodeq/constants.hpp"
#include "prodeq/counting.hpp"
#include "prodeq/fc_sets.hpp"
#include "prodeq/sieve.hpp"
#include "prodeq/verify.hpp"
#include "prodeq/zeta_sums.hpp"

#include "verify_util.hpp"

namespace prodeq {

VerificationSummary verify_fc(const VerifyGrids& g, int /*threads*/) {
    Suite suite("fc");
    SieveTable s(100'000, {2});

    // oracle == formula on every FC subset of [1, fc_universe]; Prop 1.2 is a
    // hard bound on the same sweep, the 8*pi bound is unproven and only warns
    for (const FcSet& F : all_fc_subsets(g.fc_universe)) {
        std::string fs = set_text(F);
        for (u64 B = 1; B <= g.fc_universe; ++B) {
            ExactCount oracle = count_nbf_oracle(B, F);
            ExactCount formula = count_nbf_formula(B, F);
            suite.check(oracle == formula,
                        "N(" + std::to_string(B) + ",{" + fs + "}): oracle " + oracle.str() +
                            " vs formula " + formula.str(),
                        "prodeq fc count --b " + std::to_string(B) + " --set " + fs +
                            " --method formula");

            PropBoundResult p = prop_n_bound(B, F);
            if (p.hypothesis_ok)
                suite.check(oracle.to_double() <= p.value,
                            "prop bound " + fmt(p.value) + " < exact " + oracle.str() + " at B=" +
                                std::to_string(B) + " F={" + fs + "}",
                            "prodeq fc count --b " + std::to_string(B) + " --set " + fs +
                                " --method oracle");

            suite.record_case();
            double other = otherprop_bound(B, F, s);
            if (oracle.to_double() > other)
                suite.warn("8*pi bound below exact count at B=" + std::to_string(B) + " F={" + fs +
                           "}: " + fmt(other) + " < " + oracle.str());
        }
    }

    // prime families: the closed form agrees with both generic routes
    {
        const std::vector<std::vector<u64>> fams = {{2}, {3}, {2, 3}, {2, 5}, {2, 3, 5}};
        for (const auto& ps : fams) {
            PrimeFamily fam(ps);
            FcSet F = fam.induced_set();
            for (u64 B = 1; B <= g.family_agreement_b_max; ++B) {
                ExactCount family = count_nbf_prime_family(B, fam);
                ExactCount oracle = count_nbf_oracle(B, F);
                ExactCount formula = count_nbf_formula(B, F);
                suite.check(family == oracle && family == formula,
                            "family route disagrees at B=" + std::to_string(B) + " primes {" +
                                primes_text(fam) + "}: " + family.str() + " / " + oracle.str() +
                                " / " + formula.str(),
                            "prodeq fc count --b " + std::to_string(B) + " --primes " +
                                primes_text(fam) + " --method family");
            }
        }
    }

    // sandwich on the primorial-multiples grid, with a finite fitted C
    {
        const std::vector<std::vector<u64>> fams = {{2}, {2, 3}, {2, 3, 5}};
        for (const auto& ps : fams) {
            PrimeFamily fam(ps);
            u64 stride = fam.primorial();
            std::vector<u64> grid;
            for (u64 B = stride; B <= g.sandwich_b_max; B += stride) grid.push_back(B);
            double c = fit_upper_c(fam, grid);
            suite.check(std::isfinite(c) && c >= 0.0,
                        "fitted C not finite for primes {" + primes_text(fam) + "}",
                        "prodeq fc bounds --b 210 --primes " + primes_text(fam) + " --fit-c");
            for (u64 B : grid) {
                LowerBoundResult lo = np_lower_bound(B, fam);
                ExactCount exact = count_nbf_prime_family(B, fam);
                double up = np_upper_form(B, fam, c);
                std::string repro = "prodeq fc bounds --b " + std::to_string(B) + " --primes " +
                                    primes_text(fam) + " --fit-c";
                suite.check(lo.hypothesis_ok, "hypothesis B >= primorial at B=" + std::to_string(B),
                            repro);
                suite.check(lo.value <= exact.to_double() + 1e-9,
                            "lower bound " + fmt(lo.value) + " > exact " + exact.str() + " at B=" +
                                std::to_string(B) + " primes {" + primes_text(fam) + "}",
                            repro);
                suite.check(exact.to_double() <= up + 1e-9,
                            "exact " + exact.str() + " > upper " + fmt(up) + " at B=" +
                                std::to_string(B) + " primes {" + primes_text(fam) + "}",
                            repro);
            }
        }
    }

    // sum over coprime pairs of 2^{-omega(n)-omega(m)} is exactly 2^k
    for (int k = 1; k <= g.product_identity_k_max; ++k) {
        const u64 first_primes[] = {2, 3, 5, 7, 11, 13};
        PrimeFamily fam(std::vector<u64>(first_primes, first_primes + k));
        FcSet F = fam.induced_set();
        Rat sum;
        for (u64 n : F.elements())
            for (u64 m : F.elements()) {
                if (std::gcd(n, m) != 1) continue;
                sum += Rat(1, i128(1) << (fam.omega_in_family(n) + fam.omega_in_family(m)));
            }
        suite.check(sum == Rat::integer(i128(1) << k),
                    "coprime-pair mass at k=" + std::to_string(k) + ": " + sum.str() +
                        " != 2^k",
                    "prodeq verify --suite fc");
    }

    // product identity, exact rational equality
    for (int k = 1; k <= g.product_identity_k_max; ++k) {
        const u64 first_primes[] = {2, 3, 5, 7, 11, 13};
        PrimeFamily fam(std::vector<u64>(first_primes, first_primes + k));
        for (const Rat& X : {Rat::integer(1), Rat::integer(2), Rat::integer(5), Rat::integer(-3)}) {
            ProductIdentityResult r = product_identity_X(X, fam);
            suite.check(r.lhs == r.rhs,
                        "product identity fails at k=" + std::to_string(k) + " X=" + X.str() +
                            ": " + r.lhs.str() + " vs " + r.rhs.str(),
                        "prodeq verify --suite fc");
        }
    }

    // for families with small reciprocal mass (sum 1/p <= 1/2, B >= primorial)
    // the family-form bound must sit below the generic B^2 bound
    {
        const std::vector<std::vector<u64>> fams = {{2}, {3}, {5}, {3, 7}, {5, 7}};
        for (const auto& ps : fams) {
            PrimeFamily fam(ps);
            Rat psum;
            for (u64 p : fam.primes()) psum += Rat(1, i128(p));
            if (!(psum <= Rat(1, 2))) continue;
            double sp = psum.to_double();
            for (u64 B = fam.primorial(); B <= 210; B += fam.primorial()) {
                double family_form = static_cast<double>(B) * std::pow(2.5, fam.k()) * (1.0 + sp);
                double generic_form =
                    static_cast<double>(B) * static_cast<double>(B) * (1.0 + 4.0 * sp);
                suite.check(family_form <= generic_form,
                            "family-form bound not below the B^2 bound at B=" + std::to_string(B) +
                                " primes {" + primes_text(fam) + "}",
                            "prodeq fc bounds --b " + std::to_string(B) + " --primes " +
                                primes_text(fam));
            }
        }
    }

    // Theorem 1.3 grid
    for (u64 B = 2; B <= g.nf_b_max; ++B) {
        for (double alpha : {0.0, 0.25, 0.5}) {
            NfCheckResult r = theorem_nf_check(B, alpha);
            suite.check(r.exact.to_double() <= r.bound + 1e-9,
                        "product-set bound " + fmt(r.bound) + " < exact " + r.exact.str() +
                            " at B=" + std::to_string(B) + " alpha=" + fmt(alpha),
                        "prodeq fc nf --b " + std::to_string(B) + " --alpha " + fmt(alpha));
        }
    }

    // Weierstrass brackets
    {
        WeierstrassBracket one = weierstrass_bracket({Rat(1, 4)});
        suite.check(one.lower == one.product && one.product < one.upper,
                    "single-term bracket should collapse on the left", "prodeq verify --suite fc");
        WeierstrassBracket two = weierstrass_bracket({Rat(1, 4), Rat(1, 6)});
        suite.check(two.lower < two.product && two.product < two.upper,
                    "bracket not strict for {1/4, 1/6}", "prodeq verify --suite fc");
        suite.check(two.lower == Rat(17, 12) && two.product == Rat(35, 24) && two.upper == Rat(12, 7),
                    "bracket values for {1/4, 1/6}", "prodeq verify --suite fc");
        WeierstrassBracket tenth = weierstrass_bracket({Rat(1, 10), Rat(1, 10)});
        suite.check(tenth.lower < tenth.product && tenth.product < tenth.upper,
                    "bracket not strict for {1/10, 1/10}", "prodeq verify --suite fc");
    }

    // upper form is nondecreasing in C
    {
        PrimeFamily fam(std::vector<u64>{2, 3});
        suite.check(np_upper_form(6, fam, 0.0) <= np_upper_form(6, fam, 1.0) &&
                        np_upper_form(6, fam, 1.0) <= np_upper_form(6, fam, 7.5),
                    "upper form must be nondecreasing in C", "prodeq verify --suite fc");
    }

    return suite.finish();
}

VerificationSummary verify_zeta(const VerifyGrids& g, int threads) {
    Suite suite("zeta");
    SieveTable s(2'000, {2});

    // closed form at B=2: |S(t)|^2 = 2 + 2 cos(t log 2)
    {
        for (double t : {0.0, 0.7, 3.1, kPi / std::log(2.0)}) {
            double got = std::norm(zeta_sum(2, t));
            double want = 2.0 + 2.0 * std::cos(t * std::log(2.0));
            suite.check(std::abs(got - want) < 1e-9,
                        "B=2 closed form at t=" + fmt(t) + ": " + fmt(got) + " vs " + fmt(want),
                        "prodeq zeta moments --b 2 --t0 0 --t1 1");
        }
        suite.check(std::abs(zeta_sum(2, kPi / std::log(2.0)).real()) < 1e-9,
                    "S_2 vanishes at t = pi/log 2", "prodeq zeta moments --b 2 --t0 0 --t1 1");
        suite.check(zeta_sum(5, 0.0) == std::complex<double>(5.0, 0.0), "S_B(0) = B",
                    "prodeq zeta moments --b 5 --t0 0 --t1 1");
    }

    // conjugate symmetry
    for (double t : {0.3, 2.0, 17.5}) {
        std::complex<double> a = zeta_sum(40, t), b = zeta_sum(40, -t);
        suite.check(std::abs(a - std::conj(b)) < 1e-9, "S(-t) != conj(S(t)) at t=" + fmt(t),
                    "prodeq zeta moments --b 40 --t0 0 --t1 1");
    }

    // B = 1 degenerates to the constant sum
    {
        MomentEstimate m = interval_moments(1, {0.0, 10.0});
        suite.check(std::abs(m.mean2 - 1.0) < 1e-12 && std::abs(m.mean4 - 1.0) < 1e-12 &&
                        std::abs(m.sup_sampled - 1.0) < 1e-12,
                    "B=1 moments must be 1", "prodeq zeta moments --b 1 --t0 0 --t1 10");
    }

    // grid too coarse is rejected
    {
        bool threw = false;
        try {
            interval_moments(100, {0.0, 1.0, 0.25});
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        suite.check(threw, "coarse grid must be rejected",
                    "prodeq zeta moments --b 100 --t0 0 --t1 1 --step 0.25");
    }

    // interval means approach B and N_1(B); hint inequality throughout
    for (u64 B : {u64(50), u64(200)}) {
        double n1 = count_n1_fast(B, s).to_double();
        for (double t1 : {g.zeta_short_t1, g.zeta_interval_t1}) {
            MomentEstimate m = interval_moments(B, {g.zeta_interval_t0, t1}, threads);
            std::string repro = "prodeq zeta moments --b " + std::to_string(B) + " --t0 " +
                                fmt(g.zeta_interval_t0) + " --t1 " + fmt(t1);
            suite.check(m.mean4 <= m.sup_sampled * m.sup_sampled * m.mean2 * g.zeta_hint_slack,
                        "hint inequality fails at B=" + std::to_string(B) + " t1=" + fmt(t1), repro);
            if (t1 == g.zeta_interval_t1) {
                double dev2 = std::abs(m.mean2 - static_cast<double>(B)) / static_cast<double>(B);
                suite.check(dev2 <= g.zeta_mean2_tol,
                            "mean2 off by " + fmt(dev2) + " at B=" + std::to_string(B), repro);
                double dev4 = std::abs(m.mean4 - n1) / n1;
                if (B == 50)
                    suite.check(dev4 <= g.zeta_mean4_tol, "mean4 off by " + fmt(dev4) + " at B=50",
                                repro);
                else
                    suite.warn("mean4 at B=" + std::to_string(B) + " is " + fmt(dev4) +
                               " from N_1(B); converges only for |I| >> B^2 (informational)");
            }
        }
    }

    // sup lower bound sits in the expected band around sqrt(12/pi^2)
    for (int i = 0; i < 3; ++i) {
        u64 B = g.zeta_band_b[i];
        double t1 = g.zeta_band_t1[i];
        std::string repro = "prodeq zeta supbound --b " + std::to_string(B) + " --t0 1 --t1 " +
                            fmt(t1);
        SupBound sb = sup_lower_bound(B, {g.zeta_interval_t0, t1}, threads);
        suite.check(sb.ratio_to_sqrt_blogb >= g.zeta_band_lo &&
                        sb.ratio_to_sqrt_blogb <= g.zeta_band_hi,
                    "band ratio " + fmt(sb.ratio_to_sqrt_blogb) + " at B=" + std::to_string(B),
                    repro);
        suite.check(sb.moments.sup_sampled + sb.moments.discretization_slack >= sb.lower_bound,
                    "sampled sup inconsistent with the moment bound at B=" + std::to_string(B),
                    repro);
    }

    return suite.finish();
}

std::vector<VerificationSummary> run_verify(const std::vector<std::string>& suites,
                                            const VerifyGrids& g, int threads) {
    std::vector<VerificationSummary> out;
    for (const std::string& name : suites) {
        if (name == "identities") out.push_back(verify_identities(g, threads));
        else if (name == "correlation") out.push_back(verify_correlation(g, threads));
        else if (name == "counting") out.push_back(verify_counting(g, threads));
        else if (name == "fc") out.push_back(verify_fc(g, threads));
        else if (name == "zeta") out.push_back(verify_zeta(g, threads));
        else throw std::invalid_argument("unknown verification suite: " + name);
    }
    return out;
}

}  // namespace prodeq
