#pragma once

#include <cstddef>
#include <vector>

#include "incres/mainproblem.hpp"
#include "incres/types.hpp"

namespace incres::mainproblem {

struct TrajectorySample {
    double t = 0.0;
    PolarNodalState state;  // angles continuous (unwrapped)
    double energy = 0.0;
};

using TrajectorySamples = std::vector<TrajectorySample>;

/// Perigee passage (radial velocity crossing zero upward).
struct PerigeeCrossing {
    double t = 0.0;
    double theta = 0.0;  // argument of latitude at the crossing, unwrapped
};

struct PropagateOptions {
    double tol = 1.0e-12;          ///< abs+rel tolerance, accepted range [1e-14, 1e-6]
    std::size_t n_samples = 0;     ///< uniform samples over the span (0: endpoints only)
    bool record_perigees = false;
    double fixed_step = 0.0;       ///< > 0: reproducible fixed-step mode, no error control
    double r_floor = kDefaultRadiusFloor;
};

struct PropagationResult {
    TrajectorySamples samples;        ///< strictly increasing in time
    double energy_drift = 0.0;        ///< max |H(t)-H(0)| / |H(0)| at accepted steps
    double n_drift = 0.0;             ///< max |N(t)-N(0)|
    std::size_t steps_taken = 0;
    std::size_t steps_rejected = 0;
    std::vector<PerigeeCrossing> perigees;
};

/**
 * @brief High-accuracy numeric propagation of the main-problem flow.
 *
 * Adaptive Dormand-Prince 5(4) in polar-nodal variables.  Sample times are
 * landed exactly by clipping steps, so sampled states carry integrator (not
 * interpolation) accuracy; perigee crossings are located on the cubic
 * Hermite interpolant of accepted steps.  This is the truth oracle the
 * closed-form results are validated against.
 */
PropagationResult propagate_numeric(const PhysicalModel& model, const PolarNodalState& state0,
                                    double t_span, const PropagateOptions& opts = {});

}  // namespace incres::mainproblem
