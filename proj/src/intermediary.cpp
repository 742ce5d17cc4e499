#include "incres/intermediary.hpp"

#include <cmath>

#include "incres/elements.hpp"
#include "incres/kepler.hpp"

namespace incres::intermediary {

namespace {
constexpr double kCircularEccentricity = 1.0e-12;
}

IntermediaryConstants constants(const PhysicalModel& model, double Theta, double N) {
    if (!(Theta > 0.0)) throw InvariantError("intermediary::constants: Theta must be positive");
    if (std::abs(N) > Theta * (1.0 + 1.0e-12))
        throw InvariantError("intermediary::constants: |N| exceeds Theta");

    const double sigma = sigma_of(model, Theta).value;
    const double c = N / Theta;
    const double c2 = c * c;
    const double root = std::sqrt(1.0 + sigma * (0.5 - 1.5 * c2));

    IntermediaryConstants k;
    k.sigma = sigma;
    k.Q = Theta * root;
    k.P = Theta * (1.0 - sigma * (0.5 - 3.0 * c2));
    k.dQdN = -1.5 * sigma * c / root;
    return k;
}

QuasiKeplerElements elements_from_state(const PhysicalModel& model, const PolarNodalState& prime) {
    prime.validate();
    QuasiKeplerElements el;
    el.constants = constants(model, prime.Theta, prime.N);
    el.Theta = prime.Theta;
    el.N = prime.N;
    el.mu = model.mu;

    const double Q = el.constants.Q;
    el.h = 0.5 * (prime.R * prime.R + Q * Q / (prime.r * prime.r)) - model.mu / prime.r;
    if (!(el.h < 0.0))
        throw UnboundOrbitError("intermediary::elements_from_state: orbit is not bound (h >= 0)");

    const double e2 = 1.0 + 2.0 * el.h * Q * Q / (model.mu * model.mu);
    el.e = e2 > 0.0 ? std::sqrt(e2) : 0.0;
    if (el.e >= 1.0)
        throw UnboundOrbitError("intermediary::elements_from_state: e >= 1");
    el.a_eff = -model.mu / (2.0 * el.h);
    el.r_min = (Q * Q / model.mu) / (1.0 + el.e);

    if (el.e < kCircularEccentricity) {
        el.theta0 = wrap_two_pi(prime.theta);  // perigee undefined on a circle
    } else {
        const double ecosf = Q * Q / (model.mu * prime.r) - 1.0;
        const double esinf = prime.R * Q / model.mu;  // sign(f) = sign(R)
        const double f = std::atan2(esinf, ecosf);
        el.theta0 = wrap_two_pi(prime.theta - (el.constants.P / Q) * f);
    }
    return el;
}

double radius_at_theta(const QuasiKeplerElements& elems, double theta) {
    const double Q = elems.constants.Q;
    const double ratio = Q / elems.constants.P;
    return (Q * Q / elems.mu) / (1.0 + elems.e * std::cos(ratio * (theta - elems.theta0)));
}

PolarNodalState state_at_time(const PhysicalModel& model, const PolarNodalState& prime0,
                              double dt) {
    const QuasiKeplerElements el = elements_from_state(model, prime0);
    const double Q = el.constants.Q;
    const double P = el.constants.P;
    const double e = el.e;
    const double a = el.a_eff;
    const double n = std::sqrt(model.mu / (a * a * a));

    // anomalies at the reference state, principal branch
    double f0 = 0.0, M0 = 0.0;
    if (e >= kCircularEccentricity) {
        const double ecosf = Q * Q / (model.mu * prime0.r) - 1.0;
        const double esinf = prime0.R * Q / model.mu;
        f0 = std::atan2(esinf, ecosf);
        const double E0 = eccentric_from_true_anomaly(f0, e);
        M0 = mean_from_eccentric_anomaly(E0, e);
    }

    // advance the mean anomaly, solve on the principal branch, restore winding
    const double M = M0 + n * dt;
    const double winding = std::floor(M / kTwoPi);
    const double E = solve_kepler(M - winding * kTwoPi, e);
    double f = true_from_eccentric_anomaly(E, e);
    if (f < 0.0) f += kTwoPi;  // keep f on the same [0, 2*pi) branch as E
    const double f_total = f + winding * kTwoPi;

    const double cosE = std::cos(E);
    PolarNodalState out;
    out.r = a * (1.0 - e * cosE);
    out.R = std::sqrt(model.mu * a) * e * std::sin(E) / out.r;
    out.theta = prime0.theta + (P / Q) * (f_total - f0);
    out.nu = prime0.nu + el.constants.dQdN * (f_total - f0);
    out.Theta = prime0.Theta;
    out.N = prime0.N;
    return out;
}

FrequencyRatio frequency_ratio(const IntermediaryConstants& c) {
    return {c.Q / c.P, RatioKind::Radial};
}

std::vector<RosettePoint> sample_rosette(long num, long den, double e, double theta0,
                                         double revs, int samples_per_rev) {
    if (num <= 0 || den <= 0) throw InvariantError("sample_rosette: ratio must be positive");
    if (!(e >= 0.0 && e < 1.0)) throw InvariantError("sample_rosette: requires 0 <= e < 1");
    if (!(revs > 0.0) || samples_per_rev < 2)
        throw InvariantError("sample_rosette: bad sampling request");

    const double ratio = static_cast<double>(num) / static_cast<double>(den);
    const long total = std::lround(revs * samples_per_rev);
    std::vector<RosettePoint> pts;
    pts.reserve(static_cast<std::size_t>(total) + 1);
    for (long k = 0; k <= total; ++k) {
        const double dtheta = kTwoPi * revs * static_cast<double>(k) / static_cast<double>(total);
        const double theta = theta0 + dtheta;
        const double r = 1.0 / (1.0 + e * std::cos(ratio * dtheta));  // Q^2 = mu
        pts.push_back({theta, r, r * std::cos(theta), r * std::sin(theta)});
    }
    return pts;
}

}  // namespace incres::intermediary
