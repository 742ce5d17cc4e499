#include "incres/parallax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "incres/intermediary.hpp"

namespace incres::parallax {

namespace {
constexpr double kKappaContractionGuard = 0.05;
constexpr int kMaxInverseIterations = 10;
}  // namespace

ParallaxContext make_context(const PhysicalModel& model, const PolarNodalState& prime) {
    ParallaxContext ctx;
    ctx.p_prime = prime.Theta * prime.Theta / model.mu;
    const double ap = model.alpha / ctx.p_prime;
    ctx.kappa = -0.5 * model.j2 * ap * ap;
    ctx.c = prime.N / prime.Theta;
    ctx.s = std::sqrt(std::max(0.0, (1.0 - ctx.c) * (1.0 + ctx.c)));
    return ctx;
}

PolarNodalState parallax_direct(const PhysicalModel& model, const PolarNodalState& prime) {
    prime.validate();
    const ParallaxContext ctx = make_context(model, prime);
    const double kappa = ctx.kappa;
    const double p = ctx.p_prime;
    const double c2 = ctx.c * ctx.c;
    const double s2 = ctx.s * ctx.s;
    const double cos2th = std::cos(2.0 * prime.theta);
    const double sin2th = std::sin(2.0 * prime.theta);
    const double p_over_r = p / prime.r;
    const double pR_over_Th = p * prime.R / prime.Theta;

    PolarNodalState out = prime;
    out.r += p * kappa * (1.0 - 1.5 * s2 - 0.5 * s2 * cos2th);
    out.theta += kappa * ((0.75 - 1.25 * c2 - (1.0 - 3.0 * c2) * p_over_r) * sin2th +
                          pR_over_Th * (1.0 - 6.0 * c2 + (1.0 - 2.0 * c2) * cos2th));
    out.nu += kappa * ctx.c * ((0.5 - 2.0 * p_over_r) * sin2th + pR_over_Th * (3.0 + cos2th));
    out.R += (prime.Theta / p) * kappa * p_over_r * p_over_r * s2 * sin2th;
    out.Theta += prime.Theta * kappa * s2 * ((0.5 - 2.0 * p_over_r) * cos2th - pR_over_Th * sin2th);
    // N = N' exactly
    return out;
}

PolarNodalState parallax_inverse(const PhysicalModel& model, const PolarNodalState& original,
                                 int* iterations) {
    original.validate();
    {
        const ParallaxContext ctx = make_context(model, original);
        if (std::abs(ctx.kappa) >= kKappaContractionGuard)
            throw ConvergenceError("parallax_inverse: |kappa| too large for contraction");
    }

    const auto close_enough = [](const PolarNodalState& a, const PolarNodalState& b) {
        const auto ok = [](double u, double v) {
            return std::abs(u - v) < 1.0e-14 * std::max(1.0, std::abs(v));
        };
        return ok(a.r, b.r) && ok(a.theta, b.theta) && ok(a.nu, b.nu) && ok(a.R, b.R) &&
               ok(a.Theta, b.Theta);
    };

    PolarNodalState prime = original;
    double prev_gap = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= kMaxInverseIterations; ++it) {
        const PolarNodalState mapped = parallax_direct(model, prime);
        PolarNodalState next = prime;
        next.r = prime.r - (mapped.r - original.r);
        next.theta = prime.theta - (mapped.theta - original.theta);
        next.nu = prime.nu - (mapped.nu - original.nu);
        next.R = prime.R - (mapped.R - original.R);
        next.Theta = prime.Theta - (mapped.Theta - original.Theta);

        const double gap =
            std::max({std::abs(next.r - prime.r), std::abs(next.theta - prime.theta),
                      std::abs(next.nu - prime.nu), std::abs(next.R - prime.R),
                      std::abs(next.Theta - prime.Theta)});
        if (gap > 2.0 * prev_gap + 1.0e-30)
            throw ConvergenceError("parallax_inverse: fixed-point iteration diverges");
        prev_gap = std::max(gap, 1.0e-30);

        const bool done = close_enough(next, prime);
        prime = next;
        if (done) {
            if (iterations) *iterations = it;
            return prime;
        }
    }
    throw ConvergenceError("parallax_inverse: no convergence within 10 iterations");
}

PolarNodalState propagate_semianalytic(const PhysicalModel& model, const PolarNodalState& state0,
                                       double dt) {
    const PolarNodalState prime0 = parallax_inverse(model, state0);
    const PolarNodalState prime_t = intermediary::state_at_time(model, prime0, dt);
    return parallax_direct(model, prime_t);
}

}  // namespace incres::parallax
