#pragma once

#include "incres/types.hpp"

namespace incres {

/// Exact osculating conversion from Keplerian elements to polar-nodal variables.
/// Rejects non-elliptic input (a <= 0 or e >= 1).
PolarNodalState keplerian_to_polar_nodal(const PhysicalModel& model, const KeplerianElements& el);

/// Inverse of keplerian_to_polar_nodal; the anomaly comes back tagged True.
KeplerianElements polar_nodal_to_keplerian(const PhysicalModel& model, const PolarNodalState& state);

/// Rotate the in-plane state into inertial coordinates:
/// position = Rz(-nu) Rx(-i) Rz(-theta) (r, 0, 0)^T, velocity from (R, Theta/r, 0).
CartesianState polar_nodal_to_cartesian(const PolarNodalState& state);

/// Orbit inclination arccos(N/Theta) in [0, pi].
double inclination_of(const PolarNodalState& state);

/// sigma = j2 alpha^2 mu^2 / Theta^4, the series parameter of every closed form.
SigmaParameter sigma_of(const PhysicalModel& model, double Theta);

/// True anomaly from eccentric anomaly (elliptic).
double true_from_eccentric_anomaly(double E, double e);

/// Eccentric anomaly from true anomaly (elliptic).
double eccentric_from_true_anomaly(double f, double e);

/// Mean anomaly from eccentric anomaly.
inline double mean_from_eccentric_anomaly(double E, double e) { return E - e * std::sin(E); }

}  // namespace incres
