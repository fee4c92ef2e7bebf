#include <doctest.h>

#include <cmath>

#include "prodeq/constants.hpp"
#include "prodeq/zeta_sums.hpp"

using namespace prodeq;

namespace {
const double pi_over_log2 = kPi / std::log(2.0);
}

TEST_CASE("zeta partial sum point values") {
    CHECK(zeta_sum(7, 0.0) == std::complex<double>(7.0, 0.0));
    for (double t : {0.0, 0.3, 2.0, pi_over_log2}) {
        double got = std::norm(zeta_sum(2, t));
        double want = 2.0 + 2.0 * std::cos(t * std::log(2.0));
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(std::abs(zeta_sum(2, pi_over_log2)) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::abs(zeta_sum(100, 5.0)) <= 100.0);
}

TEST_CASE("conjugate symmetry") {
    for (double t : {0.5, 3.7, 21.0}) {
        auto a = zeta_sum(30, t);
        auto b = zeta_sum(30, -t);
        CHECK(a.real() == doctest::Approx(b.real()));
        CHECK(a.imag() == doctest::Approx(-b.imag()));
    }
}

TEST_CASE("required step") {
    CHECK(required_step(1) == 0.5);
    CHECK(required_step(2) == doctest::Approx(std::min(0.5, 1.0 / (2 * std::log(2.0)))));
    CHECK(required_step(1000) == doctest::Approx(1.0 / (1000 * std::log(1000.0))));
}

TEST_CASE("degenerate interval moments at B = 1") {
    MomentEstimate m = interval_moments(1, {0.0, 10.0});
    CHECK(m.mean2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.mean4 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.sup_sampled == doctest::Approx(1.0));
    CHECK(m.discretization_slack == 0.0);  // log 1 = 0
    SupBound sb = sup_lower_bound(1, {0.0, 10.0});
    CHECK(sb.lower_bound == doctest::Approx(1.0));
}

TEST_CASE("coarse grids are rejected with the required resolution") {
    CHECK_THROWS_AS(interval_moments(100, {0.0, 1.0, 0.25}), std::invalid_argument);
    CHECK_THROWS_AS(interval_moments(2, {1.0, 1.0}), std::invalid_argument);  // empty interval
}

TEST_CASE("trapezoid moments agree with an independent quadrature oracle") {
    // oracle: midpoint rule at 4x resolution, straight loops over std::polar
    const u64 B = 5;
    const double t0 = 0.0, t1 = 50.0;
    double h = required_step(B) / 4.0;
    u64 n = static_cast<u64>(std::ceil((t1 - t0) / h));
    double hh = (t1 - t0) / static_cast<double>(n);
    double s2 = 0.0, s4 = 0.0;
    for (u64 j = 0; j < n; ++j) {
        double t = t0 + hh * (static_cast<double>(j) + 0.5);
        std::complex<double> S{0.0, 0.0};
        for (u64 v = 1; v <= B; ++v) S += std::polar(1.0, t * std::log(static_cast<double>(v)));
        double a2 = std::norm(S);
        s2 += a2;
        s4 += a2 * a2;
    }
    double mean2_oracle = s2 / static_cast<double>(n);
    double mean4_oracle = s4 / static_cast<double>(n);

    MomentEstimate m = interval_moments(B, {t0, t1});
    CHECK(m.mean2 == doctest::Approx(mean2_oracle).epsilon(1e-4));
    CHECK(m.mean4 == doctest::Approx(mean4_oracle).epsilon(1e-4));
}

TEST_CASE("thread count does not change the result") {
    MomentEstimate a = interval_moments(20, {1.0, 200.0}, 1);
    MomentEstimate b = interval_moments(20, {1.0, 200.0}, 2);
    CHECK(a.mean2 == b.mean2);
    CHECK(a.mean4 == b.mean4);
    CHECK(a.sup_sampled == b.sup_sampled);
}

TEST_CASE("moment consistency") {
    MomentEstimate m = interval_moments(10, {1.0, 500.0});
    CHECK(m.mean4 >= m.mean2 * m.mean2);  // power mean
    CHECK(m.sup_sampled * m.sup_sampled >= m.mean2 - m.discretization_slack);
    SupBound sb = sup_lower_bound(10, {1.0, 500.0});
    CHECK(sb.lower_bound <= m.sup_sampled + m.discretization_slack);
}
