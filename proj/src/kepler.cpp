#include "incres/kepler.hpp"

#include <cmath>

#include "incres/types.hpp"

namespace incres {

double solve_kepler(double mean_anomaly, double e) {
    if (!(e >= 0.0 && e < 1.0)) throw InvariantError("solve_kepler: requires 0 <= e < 1");
    if (e == 0.0) return mean_anomaly;

    // Work on the principal branch, restore the winding at the end.
    const double branch = std::floor(mean_anomaly / kTwoPi);
    const double M = mean_anomaly - branch * kTwoPi;

    double E = M + 0.85 * e * (std::sin(M) >= 0.0 ? 1.0 : -1.0);
    double lo = M - e, hi = M + e;  // f(E) = E - e sin E - M is increasing in E

    constexpr int kMaxIter = 50;
    constexpr double kResidualTol = 1.0e-14;
    for (int it = 0; it < kMaxIter; ++it) {
        const double sinE = std::sin(E);
        const double f = E - e * sinE - M;
        if (std::abs(f) <= kResidualTol) return E + branch * kTwoPi;
        if (f > 0.0) hi = E; else lo = E;

        const double fp = 1.0 - e * std::cos(E);
        double next = E - f / fp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
        if (next == E) return E + branch * kTwoPi;              // stalled at rounding
        E = next;
    }
    throw ConvergenceError("solve_kepler: no convergence after 50 iterations");
}

}  // namespace incres
