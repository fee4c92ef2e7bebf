#include "prodeq/zeta_sums.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "prodeq/parallel.hpp"

namespace prodeq {

std::complex<double> zeta_sum(u64 B, double t) {
    if (B < 1) throw std::invalid_argument("zeta_sum: B must be >= 1");
    double re = 0.0, im = 0.0;
    for (u64 n = 1; n <= B; ++n) {
        double ph = t * std::log(static_cast<double>(n));
        re += std::cos(ph);
        im += std::sin(ph);
    }
    return {re, im};
}

double required_step(u64 B) {
    if (B < 2) return 0.5;
    double bl = static_cast<double>(B) * std::log(static_cast<double>(B));
    return std::min(0.5, 1.0 / bl);
}

namespace {

struct ChunkMoments {
    double sum2 = 0.0, comp2 = 0.0;
    double sum4 = 0.0, comp4 = 0.0;
    double sup2 = 0.0;

    void add(double s2) {
        double s4 = s2 * s2;
        double y = s2 - comp2, t = sum2 + y;
        comp2 = (t - sum2) - y;
        sum2 = t;
        y = s4 - comp4;
        t = sum4 + y;
        comp4 = (t - sum4) - y;
        sum4 = t;
        if (s2 > sup2) sup2 = s2;
    }
};

}  // namespace

MomentEstimate interval_moments(u64 B, const Interval& I, int threads) {
    if (B < 1) throw std::invalid_argument("interval_moments: B must be >= 1");
    if (!(I.t0 < I.t1)) throw std::invalid_argument("interval_moments: need t0 < t1");
    double req = required_step(B);
    double step = I.step > 0.0 ? I.step : req;
    if (step > req * (1.0 + 1e-12))
        throw std::invalid_argument("interval_moments: grid too coarse, step must be <= " +
                                    std::to_string(req) + " for B = " + std::to_string(B));

    double span = I.t1 - I.t0;
    u64 nsteps = static_cast<u64>(std::ceil(span / step));
    if (nsteps < 2) nsteps = 2;
    double h = span / static_cast<double>(nsteps);  // actual step, <= requested

    std::vector<double> logs(B);
    double sum_logs = 0.0;
    for (u64 n = 1; n <= B; ++n) {
        logs[n - 1] = std::log(static_cast<double>(n));
        sum_logs += logs[n - 1];
    }

    // fixed chunk count so results do not depend on the thread count
    u64 nchunks = std::min<u64>(128, nsteps);
    std::vector<ChunkMoments> chunk(nchunks);
    double f_first = 0.0, f_last = 0.0;

    parallel_for_chunks(0, nchunks - 1, threads, [&](u64 ci) {
        u64 a = nsteps * ci / nchunks;
        u64 b = (ci + 1 == nchunks) ? nsteps + 1 : nsteps * (ci + 1) / nchunks;  // samples [a, b)
        std::vector<double> zr(B), zi(B), wr(B), wi(B);
        double ta = I.t0 + h * static_cast<double>(a);
        for (u64 n = 0; n < B; ++n) {
            double ph = ta * logs[n];
            zr[n] = std::cos(ph);
            zi[n] = std::sin(ph);
            double wp = h * logs[n];
            wr[n] = std::cos(wp);
            wi[n] = std::sin(wp);
        }
        ChunkMoments cm;
        for (u64 j = a; j < b; ++j) {
            double sr = 0.0, si = 0.0;
            for (u64 n = 0; n < B; ++n) {
                sr += zr[n];
                si += zi[n];
                double nr = zr[n] * wr[n] - zi[n] * wi[n];
                double ni = zr[n] * wi[n] + zi[n] * wr[n];
                zr[n] = nr;
                zi[n] = ni;
            }
            double s2 = sr * sr + si * si;
            cm.add(s2);
            if (j == 0) f_first = s2;
            if (j == nsteps) f_last = s2;
        }
        chunk[ci] = cm;
    });

    // combine in fixed chunk order
    double sum2 = 0.0, sum4 = 0.0, sup2 = 0.0;
    for (const ChunkMoments& cm : chunk) {
        sum2 += cm.sum2;
        sum4 += cm.sum4;
        sup2 = std::max(sup2, cm.sup2);
    }
    // composite trapezoid: h * (full sum - half the endpoints), divided by span
    double mean2 = (sum2 - 0.5 * (f_first + f_last)) * h / span;
    double mean4 = (sum4 - 0.5 * (f_first * f_first + f_last * f_last)) * h / span;

    MomentEstimate est;
    est.mean2 = mean2;
    est.mean4 = mean4;
    est.sup_sampled = std::sqrt(sup2);
    est.discretization_slack = 0.5 * h * sum_logs;
    est.samples = nsteps + 1;
    est.step = h;
    return est;
}

SupBound sup_lower_bound(u64 B, const Interval& I, int threads) {
    MomentEstimate est = interval_moments(B, I, threads);
    double lb = std::sqrt(est.mean4 / est.mean2);
    double denom = static_cast<double>(B) * std::log(static_cast<double>(B));
    double ratio = B >= 2 ? lb / std::sqrt(denom) : std::nan("");
    return {lb, ratio, est};
}

}  // namespace prodeq
