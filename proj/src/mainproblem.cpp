#include "incres/mainproblem.hpp"

#include <cmath>

namespace incres::mainproblem {

namespace {

void check_radius(double r, double r_floor) {
    if (!(r >= r_floor))
        throw SingularityError("main problem: radius " + std::to_string(r) +
                               " below floor " + std::to_string(r_floor));
}

}  // namespace

double hamiltonian_cartesian(const PhysicalModel& model, const CartesianState& cart,
                             double r_floor) {
    const double r = cart.position.norm();
    check_radius(r, r_floor);
    const double v2 = dot(cart.velocity, cart.velocity);
    const double sphi = cart.position.z / r;                 // sin(latitude)
    const double p2 = 0.5 * (3.0 * sphi * sphi - 1.0);       // Legendre P2
    const double ar = model.alpha / r;
    return 0.5 * v2 - model.mu / r + model.j2 * (model.mu / r) * ar * ar * p2;
}

double hamiltonian_polar(const PhysicalModel& model, const PolarNodalState& state,
                         double r_floor) {
    check_radius(state.r, r_floor);
    const double r = state.r;
    const double c = state.N / state.Theta;
    const double s2 = (1.0 - c) * (1.0 + c);
    const double bracket = 0.5 - 0.75 * s2 * (1.0 - std::cos(2.0 * state.theta));
    const double tr = state.Theta / r;
    const double ar = model.alpha / r;
    return 0.5 * (state.R * state.R + tr * tr) -
           (model.mu / r) * (1.0 + model.j2 * ar * ar * bracket);
}

StateDerivative vector_field(const PhysicalModel& model, const PolarNodalState& state,
                             double r_floor) {
    check_radius(state.r, r_floor);
    const double r = state.r;
    const double Theta = state.Theta;
    const double N = state.N;
    const double c = N / Theta;
    const double s2 = (1.0 - c) * (1.0 + c);
    const double one_minus_cos2th = 1.0 - std::cos(2.0 * state.theta);
    const double bracket = 0.5 - 0.75 * s2 * one_minus_cos2th;

    const double K = model.mu * model.j2 * model.alpha * model.alpha;  // mu J2 alpha^2
    const double r2 = r * r;
    const double r3 = r2 * r;

    StateDerivative d;
    d.dr = state.R;
    d.dtheta = Theta / r2 + 1.5 * K * N * N / (r3 * Theta * Theta * Theta) * one_minus_cos2th;
    d.dnu = -1.5 * K * N / (r3 * Theta * Theta) * one_minus_cos2th;
    d.dR = Theta * Theta / r3 - model.mu / r2 - 3.0 * K * bracket / (r2 * r2);
    d.dTheta = -1.5 * (K / r3) * s2 * std::sin(2.0 * state.theta);
    d.dN = 0.0;
    return d;
}

}  // namespace incres::mainproblem
