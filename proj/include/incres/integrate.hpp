#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "incres/types.hpp"

namespace incres::ode {

using Vec6 = std::array<double, 6>;

struct IntegrateOptions {
    double rel_tol = 1.0e-12;
    double abs_tol = 1.0e-12;
    double initial_step = 0.0;  ///< 0 selects the automatic starting step
    double max_step = std::numeric_limits<double>::infinity();
    double fixed_step = 0.0;    ///< > 0 disables error control (reproducible grids)
    std::size_t max_steps = 100'000'000;
};

struct IntegrateStats {
    std::size_t steps_taken = 0;
    std::size_t steps_rejected = 0;
};

inline Vec6 to_vec(const PolarNodalState& s) { return {s.r, s.theta, s.nu, s.R, s.Theta, s.N}; }
inline PolarNodalState to_state(const Vec6& y) { return {y[0], y[1], y[2], y[3], y[4], y[5]}; }

/// One accepted step, enough to interpolate inside [t0, t1].
struct StepRecord {
    double t0 = 0.0, t1 = 0.0;
    Vec6 y0{}, y1{};
    Vec6 f0{}, f1{};
};

/// Cubic Hermite interpolation of an accepted step at time t in [t0, t1].
inline Vec6 hermite(const StepRecord& rec, double t) {
    const double h = rec.t1 - rec.t0;
    const double s = (t - rec.t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    Vec6 y;
    for (std::size_t i = 0; i < 6; ++i)
        y[i] = h00 * rec.y0[i] + h10 * h * rec.f0[i] + h01 * rec.y1[i] + h11 * h * rec.f1[i];
    return y;
}

namespace detail {

// Dormand-Prince 5(4) coefficients (FSAL: stage 7 sits at the new point).
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// difference between the 5th- and 4th-order weights (error estimate)
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// Neumaier-compensated y += dy, carrying the rounding residue in comp.
inline void compensated_add(Vec6& y, const Vec6& dy, Vec6& comp) {
    for (std::size_t i = 0; i < 6; ++i) {
        const double term = dy[i] + comp[i];
        const double s = y[i] + term;
        if (std::abs(y[i]) >= std::abs(term))
            comp[i] = (y[i] - s) + term;
        else
            comp[i] = (term - s) + y[i];
        y[i] = s;
    }
}

}  // namespace detail

/**
 * @brief Adaptive Dormand-Prince 5(4) integration of dy/dt = rhs(y) from t0 to t1.
 *
 * PI (Lund-stabilized) step control holds the mixed abs/rel local error at
 * tolerance; updates use compensated summation so roundoff does not pollute
 * long runs.  After every accepted step the sink receives a StepRecord; the
 * final step is clipped to land on t1 exactly.  Autonomous right-hand side:
 * rhs(const Vec6&) -> Vec6.
 */
template <class Rhs, class Sink>
Vec6 integrate(Rhs&& rhs, Vec6 y, double t0, double t1, const IntegrateOptions& opt,
               Sink&& on_step, IntegrateStats* stats = nullptr) {
    using namespace detail;
    const double span = t1 - t0;
    if (span == 0.0) return y;
    const double dir = span > 0.0 ? 1.0 : -1.0;

    Vec6 k1 = rhs(y);
    Vec6 comp{};
    double t = t0;

    // starting step: Hairer's estimate from the first two derivative samples
    double h = opt.fixed_step > 0.0 ? opt.fixed_step : opt.initial_step;
    if (h <= 0.0) {
        double d0 = 0.0, d1 = 0.0;
        for (std::size_t i = 0; i < 6; ++i) {
            const double sc = opt.abs_tol + opt.rel_tol * std::abs(y[i]);
            d0 = std::max(d0, std::abs(y[i]) / sc);
            d1 = std::max(d1, std::abs(k1[i]) / sc);
        }
        double h0 = (d0 < 1.0e-5 || d1 < 1.0e-5) ? 1.0e-6 : 0.01 * d0 / d1;
        h0 = std::min(h0, std::abs(span));
        Vec6 y1;
        for (std::size_t i = 0; i < 6; ++i) y1[i] = y[i] + dir * h0 * k1[i];
        const Vec6 f1 = rhs(y1);
        double d2 = 0.0;
        for (std::size_t i = 0; i < 6; ++i) {
            const double sc = opt.abs_tol + opt.rel_tol * std::abs(y[i]);
            d2 = std::max(d2, std::abs(f1[i] - k1[i]) / sc);
        }
        d2 /= h0;
        const double dm = std::max(d1, d2);
        const double h1 = dm > 1.0e-15 ? std::pow(0.01 / dm, 1.0 / 6.0) : std::max(1.0e-6, h0 * 1.0e-3);
        h = std::min({100.0 * h0, h1, std::abs(span)});
    }
    h = std::min(h, opt.max_step);

    constexpr double safety = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    double facold = 1.0e-4;
    double tcomp = 0.0;  // compensation carry for the time accumulator
    bool last_rejected = false;
    IntegrateStats local_stats;

    while (dir * (t1 - t) > 0.0) {
        if (local_stats.steps_taken + local_stats.steps_rejected >= opt.max_steps)
            throw ConvergenceError("integrate: step budget exhausted at t = " + std::to_string(t));
        if (!(h > std::abs(t) * 1.0e-15 + 1.0e-300))
            throw ConvergenceError("integrate: step size underflow at t = " + std::to_string(t));

        bool clipped = false;
        if (dir * (t + dir * h - t1) > 0.0) {
            h = dir * (t1 - t);
            clipped = true;
        }
        const double hd = dir * h;

        Vec6 y2, y3, y4, y5, y6, ynew;
        for (std::size_t i = 0; i < 6; ++i) y2[i] = y[i] + hd * a21 * k1[i];
        const Vec6 k2 = rhs(y2);
        for (std::size_t i = 0; i < 6; ++i) y3[i] = y[i] + hd * (a31 * k1[i] + a32 * k2[i]);
        const Vec6 k3 = rhs(y3);
        for (std::size_t i = 0; i < 6; ++i)
            y4[i] = y[i] + hd * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        const Vec6 k4 = rhs(y4);
        for (std::size_t i = 0; i < 6; ++i)
            y5[i] = y[i] + hd * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        const Vec6 k5 = rhs(y5);
        for (std::size_t i = 0; i < 6; ++i)
            y6[i] = y[i] + hd * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        const Vec6 k6 = rhs(y6);

        Vec6 dy;
        for (std::size_t i = 0; i < 6; ++i) {
            dy[i] = hd * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
            ynew[i] = y[i] + dy[i];
        }
        const Vec6 k7 = rhs(ynew);

        double err = 0.0;
        if (opt.fixed_step <= 0.0) {
            for (std::size_t i = 0; i < 6; ++i) {
                const double ei = hd * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                        e6 * k6[i] + e7 * k7[i]);
                const double sc =
                    opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                err += (ei / sc) * (ei / sc);
            }
            err = std::sqrt(err / 6.0);
        }

        if (err <= 1.0) {
            double tnew;
            if (clipped) {
                tnew = t1;
                tcomp = 0.0;
            } else {  // Kahan-compensated t += hd
                const double term = hd + tcomp;
                tnew = t + term;
                tcomp = (t - tnew) + term;
            }
            const StepRecord rec{t, tnew, y, ynew, k1, k7};
            compensated_add(y, dy, comp);
            t = tnew;
            k1 = k7;  // FSAL
            ++local_stats.steps_taken;
            on_step(rec);

            if (opt.fixed_step <= 0.0) {
                const double fac11 = std::pow(std::max(err, 1.0e-20), expo1);
                double fac = fac11 / std::pow(facold, beta);
                fac = std::clamp(fac / safety, 0.1, 5.0);
                double hnew = h / fac;
                if (last_rejected) hnew = std::min(hnew, h);
                h = std::min(hnew, opt.max_step);
                facold = std::max(err, 1.0e-4);
            }
            last_rejected = false;
        } else {
            const double fac11 = std::pow(err, expo1);
            h = h / std::min(5.0, fac11 / safety);
            last_rejected = true;
            ++local_stats.steps_rejected;
        }
    }

    if (stats) *stats = local_stats;
    return y;
}

}  // namespace incres::ode
