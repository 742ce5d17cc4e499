#include "incres/propagate.hpp"

#include <algorithm>
#include <cmath>

#include "incres/integrate.hpp"

namespace incres::mainproblem {

namespace {

// Upward zero of the radial velocity inside an accepted step, by bisection
// on the Hermite interpolant.
PerigeeCrossing locate_perigee(const ode::StepRecord& rec) {
    double lo = rec.t0, hi = rec.t1;
    for (int it = 0; it < 80 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (ode::hermite(rec, mid)[3] < 0.0) lo = mid; else hi = mid;
    }
    const double t = 0.5 * (lo + hi);
    return {t, ode::hermite(rec, t)[1]};
}

}  // namespace

PropagationResult propagate_numeric(const PhysicalModel& model, const PolarNodalState& state0,
                                    double t_span, const PropagateOptions& opts) {
    model.validate();
    state0.validate();
    if (!std::isfinite(t_span) || !(t_span > 0.0))
        throw InvariantError("propagate_numeric: t_span must be finite and positive");
    if (opts.fixed_step <= 0.0 && !(opts.tol >= 1.0e-14 && opts.tol <= 1.0e-6))
        throw InvariantError("propagate_numeric: tol must lie in [1e-14, 1e-6]");

    const auto rhs = [&](const ode::Vec6& y) {
        const StateDerivative d = vector_field(model, ode::to_state(y), opts.r_floor);
        return ode::Vec6{d.dr, d.dtheta, d.dnu, d.dR, d.dTheta, d.dN};
    };

    PropagationResult result;
    const double e0 = hamiltonian_polar(model, state0, opts.r_floor);
    const double e0_scale = std::abs(e0) > 0.0 ? std::abs(e0) : 1.0;
    const double n0 = state0.N;

    double last_step = 0.0;
    const auto sink = [&](const ode::StepRecord& rec) {
        const double energy = hamiltonian_polar(model, ode::to_state(rec.y1), opts.r_floor);
        result.energy_drift = std::max(result.energy_drift, std::abs(energy - e0) / e0_scale);
        result.n_drift = std::max(result.n_drift, std::abs(rec.y1[5] - n0));
        if (opts.record_perigees && rec.y0[3] < 0.0 && rec.y1[3] >= 0.0)
            result.perigees.push_back(locate_perigee(rec));
        last_step = rec.t1 - rec.t0;
    };

    const std::size_t n = std::max<std::size_t>(opts.n_samples, 1);
    ode::Vec6 y = ode::to_vec(state0);
    result.samples.push_back({0.0, state0, e0});

    ode::IntegrateOptions iopt;
    iopt.rel_tol = iopt.abs_tol = opts.tol;
    iopt.fixed_step = opts.fixed_step;

    double t_prev = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double t_k = t_span * (static_cast<double>(k) / static_cast<double>(n));
        ode::IntegrateStats stats;
        iopt.initial_step = last_step;  // carry the step size across segments
        y = ode::integrate(rhs, y, t_prev, t_k, iopt, sink, &stats);
        result.steps_taken += stats.steps_taken;
        result.steps_rejected += stats.steps_rejected;
        const PolarNodalState s = ode::to_state(y);
        result.samples.push_back({t_k, s, hamiltonian_polar(model, s, opts.r_floor)});
        t_prev = t_k;
    }
    return result;
}

}  // namespace incres::mainproblem
