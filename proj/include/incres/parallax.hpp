#pragma once

#include "incres/types.hpp"

namespace incres::parallax {

/// Factors shared by the transformation equations, all functions of the
/// prime state: kappa = -1/2 J2 (alpha/p')^2, p' = Theta'^2/mu,
/// c = cos i' = N/Theta', s = sin i'.
struct ParallaxContext {
    double kappa = 0.0;
    double p_prime = 0.0;
    double s = 0.0;
    double c = 0.0;
};

ParallaxContext make_context(const PhysicalModel& model, const PolarNodalState& prime);

/**
 * @brief Elimination-of-the-parallax map, prime -> original variables.
 *
 * First order in J2; the corrections are explicit functions of the prime
 * state needing only sin and cos of 2 theta'.  N passes through unchanged.
 */
PolarNodalState parallax_direct(const PhysicalModel& model, const PolarNodalState& prime);

/**
 * @brief Inverse map, original -> prime variables, by fixed-point iteration.
 *
 * prime <- original - delta(prime), started at prime = original; the
 * correction is O(J2) so the iteration contracts for |kappa| < 0.05.
 * Stops when successive iterates agree to 1e-14 per component (relative to
 * max(1, |component|)); throws ConvergenceError otherwise.
 */
PolarNodalState parallax_inverse(const PhysicalModel& model, const PolarNodalState& original,
                                 int* iterations = nullptr);

/// Closed-form main-problem propagation: map to prime variables, advance the
/// radial intermediary analytically, map back.  Accurate to O(J2^2).
PolarNodalState propagate_semianalytic(const PhysicalModel& model, const PolarNodalState& state0,
                                       double dt);

}  // namespace incres::parallax
