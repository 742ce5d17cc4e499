#pragma once

#include "incres/types.hpp"

namespace incres::mainproblem {

/// Radii below this floor (canonical units) raise SingularityError;
/// almost-rectilinear orbits are outside the model's validity.
inline constexpr double kDefaultRadiusFloor = 1.0e-9;

/// Time derivatives of the six polar-nodal coordinates.  dN is identically
/// zero: the polar angular-momentum component is an exact integral.
struct StateDerivative {
    double dr = 0.0;
    double dtheta = 0.0;
    double dnu = 0.0;
    double dR = 0.0;
    double dTheta = 0.0;
    double dN = 0.0;
};

/// Specific energy 1/2 v^2 - mu/r + J2 (mu/r)(alpha/r)^2 P2(z/r).
double hamiltonian_cartesian(const PhysicalModel& model, const CartesianState& cart,
                             double r_floor = kDefaultRadiusFloor);

/// The same energy in polar-nodal variables:
/// 1/2 (R^2 + Theta^2/r^2) - (mu/r) [1 + J2 (alpha/r)^2 (1/2 - 3/4 s^2 + 3/4 s^2 cos 2 theta)]
/// with s^2 = 1 - N^2/Theta^2.
double hamiltonian_polar(const PhysicalModel& model, const PolarNodalState& state,
                         double r_floor = kDefaultRadiusFloor);

/// Exact canonical vector field of hamiltonian_polar.  The J2 bracket depends
/// on (Theta, N) through s^2, so dtheta and dnu carry inclination terms.
StateDerivative vector_field(const PhysicalModel& model, const PolarNodalState& state,
                             double r_floor = kDefaultRadiusFloor);

}  // namespace incres::mainproblem
