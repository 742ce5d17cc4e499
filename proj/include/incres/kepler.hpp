#pragma once

namespace incres {

/**
 * @brief Solve Kepler's equation E - e sin E = M for the eccentric anomaly.
 *
 * Newton iteration seeded with E0 = M + 0.85 e sign(sin M) and safeguarded by
 * bisection on the bracket [M - e, M + e]; robust through e = 0.99.  The
 * returned E satisfies |E - e sin E - M| <= 1e-13 and lies on the same
 * 2*pi branch as M.
 */
double solve_kepler(double mean_anomaly, double e);

}  // namespace incres
