// Versioned grid sizes and frozen tolerances for the verification suites.
// These are the defaults the release gate runs with; the CLI only allows
// enlarging them.

#pragma once

#include <cstdint>

namespace prodeq {

struct VerifyGrids {
    // identities
    std::uint64_t br_product_max = 10'000;     // Busche-Ramanujan / Ramanujan (F): all ab <= this
    std::uint64_t moebius_max = 100'000;       // sum_{d|n} mu(d) = [n=1] for n <= this
    std::uint64_t tau_box_max = 30;            // tau_k sanity for k in {1,2,3}, B in [1, this]
    std::uint64_t wilson_x = 1'000'000;
    int wilson_v_max = 10;
    double wilson_rel_tol = 0.05;
    double wilson_beta_stability = 0.05;       // |beta_emp(1e5) - beta_emp(1e6)|
    double dan2_ratio_bound = 16.0;            // fitted: observed max 13.75 on the grid below
    std::uint64_t dan2_x_grid[5] = {1'000, 3'162, 10'000, 31'623, 100'000};
    std::uint64_t dan2_a_grid[6] = {1, 2, 3, 4, 6, 12};

    // correlation
    std::uint64_t br1_nm_max = 50;             // coprime n, m <= this
    std::uint64_t br1_x_max = 1'000;           // every x <= this
    std::uint64_t restr_box_max = 30;          // monotone-restriction grid B, x <= this
    std::uint64_t skeleton_x_max = 500;        // d_k(jn)d_k(jm) >= d_k(j)^2 grid
    std::uint64_t skeleton_nm_max = 20;
    double second_moment_band = 0.25;          // x = 1e3 vs 1e5 ratio agreement

    // counting
    std::uint64_t oracle_eq_b_max = 20;        // k in {1,2,3}
    std::uint64_t fast_eq_b_max = 200;
    std::uint64_t monotone_b_max = 30;
    std::uint64_t mk_ineq_b_max = 50;          // #M_3(B) <= B #M(B)
    std::uint64_t tablecheck_b_max = 200;
    std::uint64_t ford_grid[3] = {100, 1'000, 10'000};
    double ford_band = 2.0;                    // max/min of ford ratios
    std::uint64_t gap_grid[3] = {1'000, 10'000, 100'000};
    double gap_slack_exponent = 1.5;           // |gap| <= B^this
    double phi_sum_tol = 1.0;                  // |sum - (6/pi^2) log x|

    // fc sets
    std::uint64_t fc_universe = 12;            // all FC subsets of [1, this]
    std::uint64_t family_agreement_b_max = 60;
    std::uint64_t sandwich_b_max = 210;        // B on multiples of the primorial
    std::uint64_t nf_b_max = 16;               // Theorem-1.3 grid
    int product_identity_k_max = 6;

    // zeta
    double zeta_interval_t0 = 1.0;
    double zeta_interval_t1 = 10'000.0;
    double zeta_short_t1 = 1'000.0;
    double zeta_mean2_tol = 0.05;
    double zeta_mean4_tol = 0.10;
    double zeta_hint_slack = 1.01;
    double zeta_band_lo = 0.8;
    double zeta_band_hi = 1.5;
    std::uint64_t zeta_band_b[3] = {50, 200, 1'000};
    // the off-diagonal product phases decohere only once |I| >> 1/min-gap,
    // so the longest sum gets a longer interval
    double zeta_band_t1[3] = {10'000.0, 10'000.0, 30'000.0};
};

}  // namespace prodeq
