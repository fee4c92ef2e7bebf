// Zeta partial sums S_B(t) = sum_{n<=B} n^{it} and their interval moments.
//
// The m-th interval means (1/|I|) int_I |S_B|^m dt (m = 2, 4) are evaluated by
// composite trapezoid on a uniform grid with step <= min(1/2, 1/(B log B));
// |S_B'(t)| <= sum_{n<=B} log n <= B log B, so that step resolves every
// oscillation.  sqrt(mean4/mean2) lower-bounds sup_I |S_B| up to the reported
// discretization slack.

#pragma once

#include <complex>
#include <cstdint>

#include "prodeq/exact.hpp"

namespace prodeq {

struct Interval {
    double t0;
    double t1;
    double step = 0.0;  // 0 means "use the required resolution for this B"
};

struct MomentEstimate {
    double mean2;
    double mean4;
    double sup_sampled;           // max |S| over the grid
    double discretization_slack;  // bound on sup drift between samples
    u64 samples;
    double step;
};

std::complex<double> zeta_sum(u64 B, double t);

// max step admissible for length-B sums
double required_step(u64 B);

MomentEstimate interval_moments(u64 B, const Interval& I, int threads = 1);

struct SupBound {
    double lower_bound;            // sqrt(mean4/mean2)
    double ratio_to_sqrt_blogb;    // lower_bound / sqrt(B log B); NaN for B = 1
    MomentEstimate moments;
};
SupBound sup_lower_bound(u64 B, const Interval& I, int threads = 1);

}  // namespace prodeq
