#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "incres/elements.hpp"
#include "incres/intermediary.hpp"
#include "incres/mainproblem.hpp"
#include "incres/parallax.hpp"
#include "incres/propagate.hpp"

using namespace incres;
using namespace incres::parallax;

namespace {

double urand(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

PolarNodalState random_orbit_state(std::mt19937_64& rng) {
    KeplerianElements el;
    el.a = 0.9 + 1.1 * urand(rng);
    el.e = 0.6 * urand(rng);
    el.i = kPi * (0.02 + 0.96 * urand(rng));
    el.raan = kTwoPi * urand(rng);
    el.argp = kTwoPi * urand(rng);
    el.anomaly = kTwoPi * urand(rng);
    return keplerian_to_polar_nodal(PhysicalModel{1.0, 1.0, 0.0}, el);
}

double max_component_gap(const PolarNodalState& a, const PolarNodalState& b) {
    return std::max({std::abs(a.r - b.r), std::abs(a.theta - b.theta), std::abs(a.nu - b.nu),
                     std::abs(a.R - b.R), std::abs(a.Theta - b.Theta), std::abs(a.N - b.N)});
}

}  // namespace

TEST_CASE("j2 = 0 turns both maps into the identity") {
    const PhysicalModel kepler{1.0, 1.0, 0.0};
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; ++n) {
        const PolarNodalState s = random_orbit_state(rng);
        CHECK(max_component_gap(parallax_direct(kepler, s), s) == 0.0);
        CHECK(max_component_gap(parallax_inverse(kepler, s), s) == 0.0);
    }
}

TEST_CASE("equatorial circular prime state reproduces the symbolic corrections") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    PolarNodalState prime;
    prime.Theta = 1.1;
    prime.N = prime.Theta;  // s' = 0
    const double p = prime.Theta * prime.Theta / model.mu;
    prime.r = p;            // r' = p'
    prime.R = 0.0;
    prime.theta = 0.8;
    prime.nu = 2.1;

    const ParallaxContext ctx = make_context(model, prime);
    CHECK(ctx.s == 0.0);
    CHECK(ctx.c == 1.0);
    CHECK(ctx.p_prime == doctest::Approx(p).epsilon(1e-15));

    const PolarNodalState mapped = parallax_direct(model, prime);
    const double sin2th = std::sin(2.0 * prime.theta);
    CHECK(mapped.r - prime.r == doctest::Approx(ctx.kappa * p).epsilon(1e-13));
    CHECK(mapped.theta - prime.theta ==
          doctest::Approx(1.5 * ctx.kappa * sin2th).epsilon(1e-13));
    CHECK(mapped.nu - prime.nu ==
          doctest::Approx(-1.5 * ctx.kappa * sin2th).epsilon(1e-13));
    CHECK(mapped.R == prime.R);
    CHECK(mapped.Theta == prime.Theta);
}

TEST_CASE("N passes through both maps bit-for-bit") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    std::mt19937_64 rng(2);
    for (int n = 0; n < 200; ++n) {
        const PolarNodalState s = random_orbit_state(rng);
        CHECK(parallax_direct(model, s).N == s.N);
        CHECK(parallax_inverse(model, s).N == s.N);
    }
}

TEST_CASE("direct and inverse compose to the identity") {
    std::mt19937_64 rng(3);
    for (const double j2 : {1.0e-3, 1.0e-2}) {
        const PhysicalModel model{1.0, 1.0, j2};
        for (int n = 0; n < 200; ++n) {
            const PolarNodalState s = random_orbit_state(rng);
            CHECK(max_component_gap(parallax_direct(model, parallax_inverse(model, s)), s) <=
                  1.0e-13);
            CHECK(max_component_gap(parallax_inverse(model, parallax_direct(model, s)), s) <=
                  1.0e-13);
        }
    }
}

TEST_CASE("fixed-point inversion converges quickly and guards divergence") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};

    KeplerianElements el;
    el.a = 1.05;
    el.e = 0.1;
    el.i = 50.0 * kRadPerDeg;
    el.argp = 0.7;
    el.anomaly = 0.2;
    const PolarNodalState leo = keplerian_to_polar_nodal(model, el);
    int iterations = 0;
    parallax_inverse(model, leo, &iterations);
    CHECK(iterations <= 5);

    std::mt19937_64 rng(4);
    for (int n = 0; n < 200; ++n) {
        parallax_inverse(model, random_orbit_state(rng), &iterations);
        CHECK(iterations <= 7);
    }

    // |kappa| beyond the contraction guard is rejected up front
    const PhysicalModel heavy{1.0, 1.0, 0.2};
    PolarNodalState s;
    s.r = 1.0;
    s.Theta = 1.0;
    s.N = 0.5;
    CHECK_THROWS_AS(parallax_inverse(heavy, s), ConvergenceError);
}

TEST_CASE("main Hamiltonian equals the intermediary one in prime variables to O(J2^2)") {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 25; ++n) {
        const PolarNodalState s = random_orbit_state(rng);
        const auto gap = [&](double j2) {
            const PhysicalModel model{1.0, 1.0, j2};
            const PolarNodalState prime = parallax_inverse(model, s);
            const auto consts = intermediary::constants(model, prime.Theta, prime.N);
            const double h_int =
                0.5 * (prime.R * prime.R + consts.Q * consts.Q / (prime.r * prime.r)) -
                model.mu / prime.r;
            return std::abs(mainproblem::hamiltonian_polar(model, s) - h_int);
        };
        const double g1 = gap(1.0e-3);
        const double g2 = gap(0.5e-3);
        CHECK(g1 / g2 == doctest::Approx(4.0).epsilon(0.15));
    }
}

TEST_CASE("semi-analytic propagation is exact Kepler at j2 = 0") {
    const PhysicalModel kepler{1.0, 1.0, 0.0};
    std::mt19937_64 rng(6);
    const PolarNodalState s0 = random_orbit_state(rng);
    for (const double t : {0.3, 4.0, 20.0}) {
        const PolarNodalState sa = propagate_semianalytic(kepler, s0, t);
        const PolarNodalState cf = intermediary::state_at_time(kepler, s0, t);
        CHECK(max_component_gap(sa, cf) == 0.0);
    }
}

TEST_CASE("semi-analytic error against the numeric oracle shrinks 4x when J2 halves") {
    // light version of the order check: a quarter orbit, endpoint only
    KeplerianElements el;
    el.a = 1.0;
    el.e = 0.1;
    el.i = 50.0 * kRadPerDeg;
    el.raan = 0.3;
    el.argp = 0.7;
    el.anomaly = 0.2;
    const PolarNodalState s0 = keplerian_to_polar_nodal(PhysicalModel{1.0, 1.0, 0.0}, el);

    const auto endpoint_gap = [&](double j2) {
        const PhysicalModel model{1.0, 1.0, j2};
        mainproblem::PropagateOptions opts;
        opts.tol = 1.0e-12;
        const auto truth = mainproblem::propagate_numeric(model, s0, kTwoPi, opts);
        const PolarNodalState sa = propagate_semianalytic(model, s0, kTwoPi);
        const Vec3 dp = polar_nodal_to_cartesian(sa).position -
                        polar_nodal_to_cartesian(truth.samples.back().state).position;
        return dp.norm();
    };

    const double ratio = endpoint_gap(1.0e-3) / endpoint_gap(0.5e-3);
    CHECK(ratio >= 3.4);
    CHECK(ratio <= 4.6);
}
