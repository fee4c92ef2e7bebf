#include "prodeq/verify.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "prodeq/constants.hpp"
#include "prodeq/correlation.hpp"
#include "prodeq/counting.hpp"
#include "prodeq/fc_sets.hpp"
#include "prodeq/identities.hpp"
#include "prodeq/sieve.hpp"
#include "prodeq/tau_table.hpp"

#include "verify_util.hpp"

namespace prodeq {

VerificationSummary verify_identities(const VerifyGrids& g, int /*threads*/) {
    Suite suite("identities");
    SieveTable s(g.wilson_x, {2});

    // Busche-Ramanujan and Ramanujan (F) on the full product grid
    for (u64 a = 1; a * a <= g.br_product_max; ++a) {
        for (u64 b = a; a * b <= g.br_product_max; ++b) {
            ExactCount lhs = ExactCount(s.d(a)) * ExactCount(s.d(b));
            ExactCount br = busche_ramanujan_rhs(a, b, s);
            suite.check(br == lhs,
                        "busche_ramanujan(" + std::to_string(a) + "," + std::to_string(b) +
                            ") = " + br.str() + ", d(a)d(b) = " + lhs.str(),
                        "prodeq identity br --a " + std::to_string(a) + " --b " + std::to_string(b));
            ExactCount rf = ramanujan_f_rhs(a, b, s);
            ExactCount duv(s.d(a * b));
            suite.check(rf == duv,
                        "ramanujan_f(" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                            rf.str() + ", d(uv) = " + duv.str(),
                        "prodeq identity ramanujan --u " + std::to_string(a) + " --v " +
                            std::to_string(b));
        }
    }

    // sum_{d|n} mu(d) = [n=1]
    {
        std::vector<int> acc(g.moebius_max + 1, 0);
        for (u64 d = 1; d <= g.moebius_max; ++d) {
            int mu = s.mu(d);
            if (mu == 0) continue;
            for (u64 n = d; n <= g.moebius_max; n += d) acc[n] += mu;
        }
        bool ok = acc[1] == 1;
        u64 bad = 1;
        for (u64 n = 2; n <= g.moebius_max && ok; ++n)
            if (acc[n] != 0) { ok = false; bad = n; }
        suite.check(ok,
                    ok ? "sum_{d|n} mu(d) = delta(n) up to " + std::to_string(g.moebius_max)
                       : "sum_{d|n} mu(d) != delta at n = " + std::to_string(bad),
                    "prodeq verify --suite identities");
    }

    // tau_k tables: agree with d_k below the box, total mass B^k
    for (int k = 1; k <= 3; ++k) {
        for (u64 B = 1; B <= g.tau_box_max; ++B) {
            BoundedTauTable t(k, B);
            bool head_ok = true;
            for (u64 c = 1; c <= B && head_ok; ++c)
                head_ok = ExactCount(t.tau(c)) == dk_value(k, s.factorize(c));
            suite.check(head_ok,
                        "tau_k = d_k below the box, k=" + std::to_string(k) + " B=" +
                            std::to_string(B),
                        "prodeq verify --suite identities");
            suite.check(t.sum_all() == checked_pow(B, static_cast<unsigned>(k)),
                        "total tau_" + std::to_string(k) + " mass at B=" + std::to_string(B),
                        "prodeq verify --suite identities");
        }
    }

    // the d(a n^2) proposition: deviation bounded on the frozen grid
    {
        double worst = 0.0;
        for (u64 a : g.dan2_a_grid) {
            for (u64 x : g.dan2_x_grid) {
                double direct = sum_d_an2(a, x, SumDan2Method::direct, s).to_double();
                double rho_f = sum_d_an2(a, x, SumDan2Method::rho_formula, s).to_double();
                worst = std::max(worst, std::abs(direct - rho_f) / static_cast<double>(x));
            }
        }
        suite.check(worst <= g.dan2_ratio_bound,
                    "max |direct - rho_formula|/x = " + fmt(worst) + " (bound " +
                        fmt(g.dan2_ratio_bound) + ")",
                    "prodeq identity dan2 --a 12 --x 100000 --method rho");
    }

    // Wilson main term and the empirical secondary coefficient
    for (int v = 1; v <= g.wilson_v_max; ++v) {
        double sum = sum_d_nv(v, g.wilson_x, s).to_double();
        double a = wilson_alpha(v, s).to_double();
        double xd = static_cast<double>(g.wilson_x);
        double rel = std::abs(sum / (xd * std::log(xd)) / a - 1.0);
        suite.check(rel < g.wilson_rel_tol,
                    "wilson main term v=" + std::to_string(v) + " rel dev " + fmt(rel),
                    "prodeq identity wilson --v " + std::to_string(v) + " --x " +
                        std::to_string(g.wilson_x));
    }
    for (u64 v : {u64(1), u64(2), u64(4)}) {
        double b5 = wilson_beta_empirical(v, g.wilson_x / 10, s);
        double b6 = wilson_beta_empirical(v, g.wilson_x, s);
        suite.check(std::abs(b6 - b5) <= g.wilson_beta_stability,
                    "beta_empirical stability v=" + std::to_string(v) + ": " + fmt(b5) + " vs " +
                        fmt(b6),
                    "prodeq identity wilson --v " + std::to_string(v) + " --x " +
                        std::to_string(g.wilson_x));
        if (v == 1)
            suite.check(std::abs(b6) < 0.01, "beta_empirical(1) = " + fmt(b6) + ", expected ~0",
                        "prodeq identity wilson --v 1 --x " + std::to_string(g.wilson_x));
        double printed = wilson_beta_as_printed(v, s);
        if (std::abs(printed - b6) > 0.1)
            suite.warn("printed beta(" + std::to_string(v) + ") = " + fmt(printed) +
                       " disagrees with empirical " + fmt(b6) + " (recorded, expected)");
    }

    return suite.finish();
}

VerificationSummary verify_correlation(const VerifyGrids& g, int /*threads*/) {
    Suite suite("correlation");
    SieveTable s(std::max<u64>(g.br1_x_max * g.br1_nm_max, 1'000'000), {2, 3});

    // divisor lists up to the x limit, for the incremental BR1 walk
    std::vector<std::vector<std::uint32_t>> divs(g.br1_x_max + 1);
    for (u64 u = 1; u <= g.br1_x_max; ++u)
        for (u64 x = u; x <= g.br1_x_max; x += u) divs[x].push_back(static_cast<std::uint32_t>(u));

    // BR1 equals direct for every x <= x_max at once, via
    // br1(x) - br1(x-1) = sum_{u | x} d(u^2 n m)
    for (u64 m = 1; m <= g.br1_nm_max; ++m) {
        for (u64 n = 1; n <= m; ++n) {
            if (std::gcd(n, m) != 1) continue;
            Factorization fnm = merge_factorizations(s.factorize(n), s.factorize(m));
            std::vector<u64> e(g.br1_x_max + 1);
            for (u64 u = 1; u <= g.br1_x_max; ++u)
                e[u] =
                    dk_value_u64(2, merge_factorizations(square_factorization(s.factorize(u)), fnm));
            ExactCount direct, br1;
            bool all_eq = true;
            u64 first_bad = 0;
            for (u64 x = 1; x <= g.br1_x_max; ++x) {
                direct += ExactCount(s.d(x * n)) * ExactCount(s.d(x * m));
                for (std::uint32_t u : divs[x]) br1 += ExactCount(e[u]);
                if (all_eq && direct != br1) {
                    all_eq = false;
                    first_bad = x;
                }
            }
            suite.check(all_eq,
                        "br1 != direct at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " x=" + std::to_string(first_bad),
                        "prodeq correlation --k 2 --x " + std::to_string(all_eq ? 1 : first_bad) +
                            " --n " + std::to_string(n) + " --m " + std::to_string(m) +
                            " --method br1");
        }
    }

    // restricted route: below direct, equal exactly when the box covers the range
    {
        const std::pair<u64, u64> nm_grid[] = {{1, 1}, {1, 2}, {2, 3}, {1, 3}};
        for (u64 B = 1; B <= g.restr_box_max; ++B) {
            BoundedTauTable t(2, B);
            for (u64 x = 1; x <= g.restr_box_max; ++x) {
                for (auto [n, m] : nm_grid) {
                    CorrelationQuery q{2, x, n, m, B};
                    ExactCount restr = corr_restricted(q, t);
                    ExactCount direct = corr_direct(q, s);
                    bool eq_expected = B >= x * std::max(n, m);
                    std::string repro = "prodeq correlation --k 2 --x " + std::to_string(x) +
                                        " --n " + std::to_string(n) + " --m " + std::to_string(m) +
                                        " --box " + std::to_string(B) + " --method restricted";
                    suite.check(restr <= direct,
                                "restricted > direct at B=" + std::to_string(B) + " x=" +
                                    std::to_string(x),
                                repro);
                    suite.check((restr == direct) == eq_expected,
                                "restricted equality mismatch at B=" + std::to_string(B) + " x=" +
                                    std::to_string(x) + " n=" + std::to_string(n) + " m=" +
                                    std::to_string(m),
                                repro);
                }
            }
        }
    }

    // symmetry in (n, m)
    for (int k : {2, 3}) {
        for (u64 x : {u64(10), u64(100)}) {
            for (auto [n, m] : {std::pair<u64, u64>{2, 3}, {4, 9}, {6, 35}}) {
                ExactCount a = corr_direct({k, x, n, m, {}}, s);
                ExactCount b = corr_direct({k, x, m, n, {}}, s);
                suite.check(a == b, "corr_direct not symmetric at k=" + std::to_string(k),
                            "prodeq correlation --k " + std::to_string(k) + " --x " +
                                std::to_string(x) + " --n " + std::to_string(n) + " --m " +
                                std::to_string(m) + " --method direct");
            }
        }
    }

    // lower-bound skeleton: d_k(jn) d_k(jm) >= d_k(j)^2 termwise
    for (int k : {2, 3}) {
        bool ok = true;
        u64 bad_j = 0, bad_n = 0, bad_m = 0;
        for (u64 n = 1; n <= g.skeleton_nm_max && ok; ++n) {
            for (u64 m = 1; m <= g.skeleton_nm_max && ok; ++m) {
                for (u64 j = 1; j <= g.skeleton_x_max; ++j) {
                    u64 a = s.dk(k, j * n), b = s.dk(k, j * m), c = s.dk(k, j);
                    if (u128(a) * b < u128(c) * c) {
                        ok = false;
                        bad_j = j;
                        bad_n = n;
                        bad_m = m;
                        break;
                    }
                }
            }
        }
        suite.check(ok,
                    ok ? "d_k(jn)d_k(jm) >= d_k(j)^2 on the grid, k=" + std::to_string(k)
                       : "skeleton fails at k=" + std::to_string(k) + " j=" + std::to_string(bad_j) +
                             " n=" + std::to_string(bad_n) + " m=" + std::to_string(bad_m),
                    "prodeq verify --suite correlation");
    }

    // second-moment ratio stabilizes
    {
        double r3 = ramanujan_second_moment_ratio(1'000, s);
        double r4 = ramanujan_second_moment_ratio(10'000, s);
        double r5 = ramanujan_second_moment_ratio(100'000, s);
        double r6 = ramanujan_second_moment_ratio(1'000'000, s);
        suite.check(std::abs(r3 - r5) <= g.second_moment_band * std::max(r3, r5),
                    "second-moment ratios 1e3 vs 1e5: " + fmt(r3) + " vs " + fmt(r5),
                    "prodeq verify --suite correlation");
        double c1 = std::abs(r4 / r3 - 1.0);
        double c2 = std::abs(r5 / r4 - 1.0);
        double c3 = std::abs(r6 / r5 - 1.0);
        suite.check(c1 > c2 && c2 > c3,
                    "successive relative changes: " + fmt(c1) + ", " + fmt(c2) + ", " + fmt(c3),
                    "prodeq verify --suite correlation");
        double r2 = ramanujan_second_moment_ratio(100, s);
        suite.check(r2 > 0.0 && std::isfinite(r2), "ratio at x=100 positive finite",
                    "prodeq verify --suite correlation");
    }

    return suite.finish();
}

VerificationSummary verify_counting(const VerifyGrids& g, int threads) {
    Suite suite("counting");
    SieveTable s(1'000'000, {2});

    // two independent algorithms agree exactly
    for (int k = 1; k <= 3; ++k) {
        for (u64 B = 1; B <= g.oracle_eq_b_max; ++B) {
            ExactCount oracle = count_nk_oracle(k, B);
            ExactCount coprime = count_nk_coprime(k, B, threads);
            suite.check(oracle == coprime,
                        "N_" + std::to_string(k) + "(" + std::to_string(B) + "): oracle " +
                            oracle.str() + " vs coprime " + coprime.str(),
                        "prodeq count --k " + std::to_string(k) + " --b " + std::to_string(B) +
                            " --method coprime");
        }
    }
    for (u64 B = 1; B <= g.fast_eq_b_max; ++B) {
        ExactCount oracle = count_nk_oracle(1, B);
        ExactCount fast = count_n1_fast(B, s);
        suite.check(oracle == fast,
                    "N_1(" + std::to_string(B) + "): oracle " + oracle.str() + " vs fast " +
                        fast.str(),
                    "prodeq count --k 1 --b " + std::to_string(B) + " --method fast");
    }

    // monotone in B and in k
    {
        ExactCount prev1, prev2;
        bool mono_b = true, mono_k = true;
        for (u64 B = 1; B <= g.monotone_b_max; ++B) {
            ExactCount n1 = count_nk_oracle(1, B);
            ExactCount n2 = count_nk_oracle(2, B);
            if (B > 1 && (n1 < prev1 || n2 < prev2)) mono_b = false;
            if (n2 < n1) mono_k = false;
            prev1 = n1;
            prev2 = n2;
        }
        suite.check(mono_b, "N_k(B) nondecreasing in B",
                    "prodeq count --k 1 --b 30 --method oracle");
        suite.check(mono_k, "N_2(B) >= N_1(B)", "prodeq count --k 2 --b 30 --method oracle");
    }

    // #M_3(B) <= B #M(B)
    {
        bool ok = true;
        u64 bad = 0;
        for (u64 B = 2; B <= g.mk_ineq_b_max; ++B) {
            ProductSet m3(3, B), m2(2, B);
            if (m3.size() > B * m2.size()) {
                ok = false;
                bad = B;
            }
        }
        suite.check(ok,
                    ok ? "#M_3(B) <= B #M(B) up to " + std::to_string(g.mk_ineq_b_max)
                       : "#M_3 inequality fails at B = " + std::to_string(bad),
                    "prodeq verify --suite counting");
    }

    // restricted table identity for N_1, plus the unrestricted discrepancy log
    for (u64 B = 1; B <= g.tablecheck_b_max; ++B) {
        TableCheckResult r = n1_identity_tablecheck(B, s);
        suite.check(r.ok,
                    "N_1(" + std::to_string(B) + ") = " + r.n1.str() + " vs restricted sum " +
                        r.restricted_sum.str(),
                    "prodeq count --k 1 --b " + std::to_string(B) + " --method fast");
        if (B == 2)
            suite.warn("unrestricted reading at B=2 gives " + r.unrestricted_sum.str() +
                       " != N_1(2) = " + r.n1.str() + "; the box-restricted sum is the exact one");
    }

    // multiplication-table density in Ford's normalization
    {
        double lo = 1e300, hi = 0.0;
        for (u64 B : g.ford_grid) {
            double r = ford_ratio(B);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        suite.check(hi / lo <= g.ford_band, "ford ratios max/min = " + fmt(hi / lo),
                    "prodeq verify --suite counting");
        ProductSet m(2, 64);
        suite.check(m.size() < 64 * 64, "#M(B) < B^2 at B = 64", "prodeq verify --suite counting");
    }

    // N_1 asymptotic gap at desk scale
    for (u64 B : g.gap_grid) {
        N1Gap gap = n1_asymptotic_gap(B, s);
        suite.check(std::abs(gap.over_b15) <= 1.0,
                    "N_1 gap at B=" + std::to_string(B) + ": gap/B^1.5 = " + fmt(gap.over_b15),
                    "prodeq count --k 1 --b " + std::to_string(B) +
                        " --method fast --report-asymptotic");
    }

    // phi partial sums
    {
        double v2 = phi_over_m2_partial(2, s);
        suite.check(std::abs(v2 - 1.25) < 1e-12, "phi_over_m2(2) = " + fmt(v2),
                    "prodeq verify --suite counting");
        for (u64 x : {u64(1'000), u64(1'000'000)}) {
            double v = phi_over_m2_partial(x, s);
            double drift = std::abs(v - (6.0 / (kPi * kPi)) * std::log(static_cast<double>(x)));
            suite.check(drift <= g.phi_sum_tol,
                        "phi_over_m2(" + std::to_string(x) + ") drift " + fmt(drift),
                        "prodeq verify --suite counting");
        }
        suite.check(phi_over_m2_partial(1'000, s) < phi_over_m2_partial(2'000, s),
                    "phi_over_m2 monotone", "prodeq verify --suite counting");
    }

    return suite.finish();
}

}  // namespace prodeq
