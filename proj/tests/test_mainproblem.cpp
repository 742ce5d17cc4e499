#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "incres/elements.hpp"
#include "incres/mainproblem.hpp"
#include "incres/propagate.hpp"

using namespace incres;
using namespace incres::mainproblem;

namespace {

double urand(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

PolarNodalState random_state(std::mt19937_64& rng) {
    PolarNodalState s;
    s.r = 0.5 + 2.0 * urand(rng);
    s.theta = kTwoPi * urand(rng);
    s.nu = kTwoPi * urand(rng);
    s.R = -0.5 + urand(rng);
    s.Theta = 0.7 + 0.8 * urand(rng);
    s.N = s.Theta * std::cos(kPi * urand(rng));
    return s;
}

PolarNodalState inclined_eccentric(double e, double inc_deg, double f) {
    KeplerianElements el;
    el.a = 1.0;
    el.e = e;
    el.i = inc_deg * kRadPerDeg;
    el.raan = 0.3;
    el.argp = 0.7;
    el.anomaly = f;
    return keplerian_to_polar_nodal(PhysicalModel{1.0, 1.0, 0.0}, el);
}

}  // namespace

TEST_CASE("Cartesian Hamiltonian at reference points") {
    const PhysicalModel kepler{1.0, 1.0, 0.0};
    const PhysicalModel oblate{1.0, 1.0, 1.0e-3};

    CartesianState circ{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    CHECK(hamiltonian_cartesian(kepler, circ) == doctest::Approx(-0.5).epsilon(1e-15));

    CartesianState equator{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    CHECK(hamiltonian_cartesian(oblate, equator) == doctest::Approx(-1.0005).epsilon(1e-15));

    CartesianState pole{{0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
    CHECK(hamiltonian_cartesian(oblate, pole) == doctest::Approx(-0.999).epsilon(1e-15));

    CartesianState origin{{1.0e-10, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(hamiltonian_cartesian(oblate, origin), SingularityError);
}

TEST_CASE("polar Hamiltonian at reference points") {
    const PhysicalModel oblate{1.0, 1.0, 1.0e-3};
    CHECK(hamiltonian_polar(oblate, {1.0, 0.0, 0.0, 0.0, 1.0, 1.0}) ==
          doctest::Approx(-0.5005).epsilon(1e-15));
    CHECK(hamiltonian_polar(oblate, {1.0, kPi / 2.0, 0.0, 0.0, 1.0, 0.0}) ==
          doctest::Approx(-0.499).epsilon(1e-15));

    // j2 = 0 falls back to the Kepler energy for any state
    const PhysicalModel kepler{1.0, 1.0, 0.0};
    std::mt19937_64 rng(42);
    for (int n = 0; n < 50; ++n) {
        const PolarNodalState s = random_state(rng);
        const double expected =
            0.5 * (s.R * s.R + s.Theta * s.Theta / (s.r * s.r)) - 1.0 / s.r;
        CHECK(hamiltonian_polar(kepler, s) == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("the two Hamiltonian forms agree on random states") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    std::mt19937_64 rng(31337);
    for (int n = 0; n < 1000; ++n) {
        const PolarNodalState s = random_state(rng);
        const double hp = hamiltonian_polar(model, s);
        const double hc = hamiltonian_cartesian(model, polar_nodal_to_cartesian(s));
        CHECK(hc == doctest::Approx(hp).epsilon(1e-12));
    }
}

TEST_CASE("vector field of a circular Kepler orbit") {
    const PhysicalModel kepler{1.0, 1.0, 0.0};
    const double r = 1.21;  // Theta^2/mu with Theta = 1.1
    const StateDerivative d = vector_field(kepler, {r, 0.4, 0.2, 0.0, 1.1, 0.9});
    CHECK(d.dr == 0.0);
    CHECK(d.dR == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(d.dtheta == doctest::Approx(1.1 / (r * r)).epsilon(1e-15));
    CHECK(d.dnu == 0.0);
    CHECK(d.dTheta == 0.0);
    CHECK(d.dN == 0.0);
}

TEST_CASE("vector field matches central differences of the Hamiltonian") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    const double h = 1.0e-6;

    // mixed bound: relative 1e-6 with an absolute floor covering FD noise
    const auto close = [](double exact, double fd) {
        return std::abs(exact - fd) <= 1.0e-6 * (1.0 + std::abs(exact));
    };

    const auto check_state = [&](const PolarNodalState& s) {
        const StateDerivative d = vector_field(model, s);

        const auto diff = [&](auto bump) {
            PolarNodalState plus = s, minus = s;
            bump(plus, h);
            bump(minus, -h);
            return (hamiltonian_polar(model, plus) - hamiltonian_polar(model, minus)) / (2.0 * h);
        };

        // canonical pairs: dr = dH/dR, dtheta = dH/dTheta, dnu = dH/dN,
        //                  dR = -dH/dr, dTheta = -dH/dtheta, dN = -dH/dnu
        CHECK(close(d.dr, diff([](auto& q, double e) { q.R += e; })));
        CHECK(close(d.dtheta, diff([](auto& q, double e) { q.Theta += e; })));
        CHECK(close(d.dnu, diff([](auto& q, double e) { q.N += e; })));
        CHECK(close(-d.dR, diff([](auto& q, double e) { q.r += e; })));
        CHECK(close(-d.dTheta, diff([](auto& q, double e) { q.theta += e; })));
        CHECK(d.dN == 0.0);
    };

    std::mt19937_64 rng(2718);
    for (int n = 0; n < 100; ++n) {
        PolarNodalState s = random_state(rng);
        // keep |N| off the boundary so the symmetric N-bump stays valid
        s.N = 0.95 * s.N;
        check_state(s);
    }

    // equatorial state: dnu = dH/dN evaluated at N = Theta is the one-sided limit
    PolarNodalState eq{1.3, 0.8, 0.1, 0.05, 1.05, 1.05};
    const StateDerivative d = vector_field(model, eq);
    PolarNodalState minus = eq;
    minus.N -= h;
    const double one_sided =
        (hamiltonian_polar(model, eq) - hamiltonian_polar(model, minus)) / h;
    CHECK(std::abs(d.dnu - one_sided) <= 1.0e-5 * (1.0 + std::abs(d.dnu)));
}

TEST_CASE("numeric propagation closes a Kepler orbit") {
    const PhysicalModel kepler{1.0, 1.0, 0.0};
    PropagateOptions opts;
    opts.tol = 1.0e-12;

    // circular
    const PolarNodalState circ{1.0, 0.0, 0.0, 0.0, 1.0, 0.8};
    const auto res = propagate_numeric(kepler, circ, kTwoPi, opts);
    const PolarNodalState end = res.samples.back().state;
    CHECK(std::abs(end.r - circ.r) <= 10.0 * opts.tol);
    CHECK(std::abs(end.R - circ.R) <= 10.0 * opts.tol);
    CHECK(std::abs(end.theta - circ.theta - kTwoPi) <= 10.0 * opts.tol);

    // eccentric
    const PolarNodalState ecc = inclined_eccentric(0.3, 50.0, 0.4);
    const auto res2 = propagate_numeric(kepler, ecc, kTwoPi, opts);
    const PolarNodalState end2 = res2.samples.back().state;
    CHECK(std::abs(end2.r - ecc.r) <= 10.0 * opts.tol);
    CHECK(std::abs(end2.theta - ecc.theta - kTwoPi) <= 10.0 * opts.tol);
}

TEST_CASE("conserved quantities drift within bounds, Theta genuinely varies") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    const PolarNodalState s0 = inclined_eccentric(0.1, 50.0, 0.2);
    PropagateOptions opts;
    opts.tol = 1.0e-12;
    opts.n_samples = 100;
    const auto res = propagate_numeric(model, s0, 20.0 * kTwoPi, opts);

    CHECK(res.energy_drift <= 1.0e-10);
    CHECK(res.n_drift <= 1.0e-13 * s0.Theta);
    CHECK(res.steps_taken > 0);

    // Theta is NOT an integral of the main problem for inclined orbits
    double theta_swing = 0.0;
    for (const auto& sample : res.samples)
        theta_swing = std::max(theta_swing, std::abs(sample.state.Theta - s0.Theta));
    CHECK(theta_swing > 1.0e-5);

    // samples strictly increasing and landing the endpoints exactly
    for (std::size_t k = 1; k < res.samples.size(); ++k)
        CHECK(res.samples[k].t > res.samples[k - 1].t);
    CHECK(res.samples.front().t == 0.0);
    CHECK(res.samples.back().t == 20.0 * kTwoPi);
}

TEST_CASE("propagation input validation") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    const PolarNodalState s0 = inclined_eccentric(0.1, 50.0, 0.2);
    PropagateOptions opts;
    opts.tol = 1.0e-3;  // outside [1e-14, 1e-6]
    CHECK_THROWS_AS(propagate_numeric(model, s0, 1.0, opts), InvariantError);
    opts.tol = 1.0e-12;
    CHECK_THROWS_AS(propagate_numeric(model, s0, 0.0, opts), InvariantError);
    CHECK_THROWS_AS(propagate_numeric(model, s0, -1.0, opts), InvariantError);
}

TEST_CASE("an orbit dipping below the radius floor raises a singularity error") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    const PolarNodalState s0 = inclined_eccentric(0.5, 30.0, kPi);  // perigee at r = 0.5
    PropagateOptions opts;
    opts.tol = 1.0e-10;
    opts.r_floor = 0.6;
    CHECK_THROWS_AS(propagate_numeric(model, s0, kTwoPi, opts), SingularityError);
}

TEST_CASE("a nearly rectilinear plunge fails with a step-size diagnostic") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    PolarNodalState s;
    s.r = 0.1;
    s.R = -1.0;
    s.Theta = 1.0e-4;
    s.N = 1.0e-4;
    PropagateOptions opts;
    opts.tol = 1.0e-10;
    CHECK_THROWS_AS(propagate_numeric(model, s, 1.0, opts), ConvergenceError);
}

TEST_CASE("fixed-step mode reproduces itself exactly") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    const PolarNodalState s0 = inclined_eccentric(0.2, 40.0, 1.0);
    PropagateOptions opts;
    opts.fixed_step = 1.0e-2;
    opts.n_samples = 10;
    const auto a = propagate_numeric(model, s0, kTwoPi, opts);
    const auto b = propagate_numeric(model, s0, kTwoPi, opts);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        CHECK(a.samples[k].state.r == b.samples[k].state.r);
        CHECK(a.samples[k].state.theta == b.samples[k].state.theta);
        CHECK(a.samples[k].energy == b.samples[k].energy);
    }
    CHECK(a.steps_rejected == 0);
}

TEST_CASE("perigee crossings are located on the dense output") {
    const PhysicalModel model{1.0, 1.0, 1.0e-3};
    const PolarNodalState s0 = inclined_eccentric(0.3, 50.0, 0.4);
    PropagateOptions opts;
    opts.tol = 1.0e-12;
    opts.record_perigees = true;
    const auto res = propagate_numeric(model, s0, 3.2 * kTwoPi, opts);
    REQUIRE(res.perigees.size() == 3);
    // consecutive passages separated by roughly one anomalistic period
    for (std::size_t k = 1; k < res.perigees.size(); ++k) {
        const double dt = res.perigees[k].t - res.perigees[k - 1].t;
        CHECK(dt == doctest::Approx(kTwoPi).epsilon(0.01));
        const double dtheta = res.perigees[k].theta - res.perigees[k - 1].theta;
        CHECK(dtheta == doctest::Approx(kTwoPi).epsilon(0.01));
    }
}
