#include "incres/elements.hpp"

#include <cmath>

#include "incres/kepler.hpp"

namespace incres {

double true_from_eccentric_anomaly(double E, double e) {
    return 2.0 * std::atan2(std::sqrt(1.0 + e) * std::sin(0.5 * E),
                            std::sqrt(1.0 - e) * std::cos(0.5 * E));
}

double eccentric_from_true_anomaly(double f, double e) {
    return 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(0.5 * f),
                            std::sqrt(1.0 + e) * std::cos(0.5 * f));
}

PolarNodalState keplerian_to_polar_nodal(const PhysicalModel& model, const KeplerianElements& el) {
    model.validate();
    double e = el.e;
    if (e < 0.0) {
        // tiny negative values from upstream rounding are treated as circular
        if (e < -1.0e-14) throw InvariantError("keplerian_to_polar_nodal: negative eccentricity");
        e = 0.0;
    }
    if (e >= 1.0) throw UnboundOrbitError("keplerian_to_polar_nodal: requires e < 1");
    if (!(el.a > 0.0)) throw UnboundOrbitError("keplerian_to_polar_nodal: requires a > 0");

    double f = el.anomaly;
    switch (el.kind) {
        case AnomalyKind::True:
            break;
        case AnomalyKind::Eccentric:
            f = true_from_eccentric_anomaly(el.anomaly, e);
            break;
        case AnomalyKind::Mean:
            f = true_from_eccentric_anomaly(solve_kepler(el.anomaly, e), e);
            break;
    }

    const double p = el.a * (1.0 - e * e);
    PolarNodalState s;
    s.r = p / (1.0 + e * std::cos(f));
    s.theta = wrap_two_pi(el.argp + f);
    s.nu = wrap_two_pi(el.raan);
    s.R = std::sqrt(model.mu / p) * e * std::sin(f);
    s.Theta = std::sqrt(model.mu * p);
    s.N = s.Theta * std::cos(el.i);
    return s;
}

KeplerianElements polar_nodal_to_keplerian(const PhysicalModel& model, const PolarNodalState& state) {
    state.validate();
    const double p = state.Theta * state.Theta / model.mu;
    const double ecosf = p / state.r - 1.0;
    const double esinf = state.R * state.Theta / model.mu;
    const double e = std::hypot(ecosf, esinf);
    if (e >= 1.0) throw UnboundOrbitError("polar_nodal_to_keplerian: state is not elliptic");

    KeplerianElements el;
    el.e = e;
    el.a = p / (1.0 - e * e);
    const double c = std::clamp(state.N / state.Theta, -1.0, 1.0);
    el.i = std::acos(c);
    el.raan = wrap_two_pi(state.nu);
    const double f = (e < 1.0e-12) ? 0.0 : std::atan2(esinf, ecosf);
    el.argp = wrap_two_pi(state.theta - f);
    el.anomaly = wrap_two_pi(f);
    el.kind = AnomalyKind::True;
    return el;
}

CartesianState polar_nodal_to_cartesian(const PolarNodalState& state) {
    state.validate();
    const double c = std::clamp(state.N / state.Theta, -1.0, 1.0);
    const double s = std::sqrt((1.0 - c) * (1.0 + c));
    const double cth = std::cos(state.theta), sth = std::sin(state.theta);
    const double cnu = std::cos(state.nu), snu = std::sin(state.nu);

    // radial and transverse unit vectors of the instantaneous orbital frame
    const Vec3 u_r{cnu * cth - snu * sth * c, snu * cth + cnu * sth * c, sth * s};
    const Vec3 u_t{-cnu * sth - snu * cth * c, -snu * sth + cnu * cth * c, cth * s};

    CartesianState out;
    out.position = state.r * u_r;
    out.velocity = state.R * u_r + (state.Theta / state.r) * u_t;
    return out;
}

double inclination_of(const PolarNodalState& state) {
    if (!(state.Theta > 0.0)) throw InvariantError("inclination_of: Theta must be positive");
    const double c = state.N / state.Theta;
    if (std::abs(c) > 1.0 + 1.0e-12)
        throw InvariantError("inclination_of: |N| exceeds Theta beyond tolerance");
    return std::acos(std::clamp(c, -1.0, 1.0));
}

SigmaParameter sigma_of(const PhysicalModel& model, double Theta) {
    if (!(Theta > 0.0)) throw InvariantError("sigma_of: Theta must be positive");
    const double t2 = Theta * Theta;
    return SigmaParameter{model.j2 * model.alpha * model.alpha * model.mu * model.mu / (t2 * t2)};
}

}  // namespace incres
