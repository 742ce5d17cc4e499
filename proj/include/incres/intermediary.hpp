#pragma once

#include <vector>

#include "incres/types.hpp"

namespace incres::intermediary {

/**
 * @brief Integrals of the radial-intermediary flow.
 *
 * Q plays the role of an effective angular momentum in the quasi-Keplerian
 * radial problem, P drives the argument of latitude, dQdN = dQ/dN feeds the
 * closed-form node quadrature.  c = N/Theta, sigma = j2 (alpha/p)^2:
 *   Q = Theta sqrt(1 + sigma (1/2 - 3/2 c^2))
 *   P = Theta (1 - sigma (1/2 - 3 c^2))
 */
struct IntermediaryConstants {
    double Q = 0.0;
    double P = 0.0;
    double dQdN = 0.0;
    double sigma = 0.0;
};

/// Quasi-Keplerian integrals of a (prime-variable) state under the intermediary.
struct QuasiKeplerElements {
    double h = 0.0;       ///< specific energy 1/2 (R^2 + Q^2/r^2) - mu/r
    double e = 0.0;       ///< eccentricity, e^2 = 1 + 2 h Q^2 / mu^2
    double a_eff = 0.0;   ///< -mu / (2 h)
    double r_min = 0.0;   ///< perigee radius (Q^2/mu) / (1 + e)
    double theta0 = 0.0;  ///< latitude of perigee, theta - (P/Q) f, in [0, 2*pi)
    IntermediaryConstants constants;
    double Theta = 0.0;
    double N = 0.0;
    double mu = 0.0;
};

/// Ratio tagged by which pair of frequencies it compares.
enum class RatioKind { Apsidal, Latitude, Radial };

struct FrequencyRatio {
    double value = 1.0;
    RatioKind kind = RatioKind::Radial;
};

IntermediaryConstants constants(const PhysicalModel& model, double Theta, double N);

/// Integrals of the intermediary flow through a given prime state.
/// Throws UnboundOrbitError when h >= 0 or e >= 1.
QuasiKeplerElements elements_from_state(const PhysicalModel& model, const PolarNodalState& prime);

/// Closed-form trajectory in the orbital plane:
/// r(theta) = (Q^2/mu) / (1 + e cos[(Q/P)(theta - theta0)]).
double radius_at_theta(const QuasiKeplerElements& elems, double theta);

/// Propagate the intermediary flow in closed form by dt.  Input and output
/// are prime-variable states; theta and nu come back unwrapped (continuous
/// in dt) so multi-revolution comparisons need no angle bookkeeping.
PolarNodalState state_at_time(const PhysicalModel& model, const PolarNodalState& prime0,
                              double dt);

/// Anomalistic over draconitic frequency, n_r / n_theta = Q / P.
FrequencyRatio frequency_ratio(const IntermediaryConstants& c);

/// Point of the closed-form trajectory sampled for figure data.
struct RosettePoint {
    double theta = 0.0;  // unwrapped curve parameter
    double r = 0.0;
    double x = 0.0;      // r cos(theta)
    double y = 0.0;      // r sin(theta)
};

/// Sample r(theta) for Q/P = num/den with the canonical Q^2 = mu
/// normalization, from theta0 over `revs` latitude cycles.
std::vector<RosettePoint> sample_rosette(long num, long den, double e, double theta0,
                                         double revs, int samples_per_rev);

}  // namespace incres::intermediary
