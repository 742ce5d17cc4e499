#include "incres/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "incres/elements.hpp"
#include "incres/integrate.hpp"
#include "incres/intermediary.hpp"
#include "incres/kepler.hpp"
#include "incres/mainproblem.hpp"
#include "incres/parallax.hpp"
#include "incres/propagate.hpp"
#include "incres/resonance.hpp"

namespace incres::validation {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Engine-only uniform in [0, 1): identical on every platform, unlike
// std::uniform_real_distribution.
double urand(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

PolarNodalState random_bound_state(std::mt19937_64& rng, double mu) {
    KeplerianElements el;
    el.a = 0.8 + 1.4 * urand(rng);
    el.e = 0.7 * urand(rng);
    el.i = kPi * (0.01 + 0.98 * urand(rng));
    el.raan = kTwoPi * urand(rng);
    el.argp = kTwoPi * urand(rng);
    el.anomaly = kTwoPi * urand(rng);
    el.kind = AnomalyKind::True;
    return keplerian_to_polar_nodal(PhysicalModel{mu, 1.0, 0.0}, el);
}

// Hamiltonian flow of the radial intermediary, used as the numeric oracle
// for the closed-form solution.
ode::Vec6 intermediary_rhs(const PhysicalModel& model, const ode::Vec6& y) {
    const auto k = intermediary::constants(model, y[4], y[5]);
    const double r2 = y[0] * y[0];
    return {y[3], k.P / r2, k.Q * k.dQdN / r2,
            k.Q * k.Q / (r2 * y[0]) - model.mu / r2, 0.0, 0.0};
}

// Integrate an arbitrary polar-nodal flow landing each grid time exactly.
template <class Rhs>
std::vector<PolarNodalState> integrate_on_grid(Rhs&& rhs, const PolarNodalState& s0,
                                               const std::vector<double>& times, double tol) {
    std::vector<PolarNodalState> out;
    out.reserve(times.size());
    ode::Vec6 y = ode::to_vec(s0);
    ode::IntegrateOptions opt;
    opt.rel_tol = opt.abs_tol = tol;
    double t_prev = times.front();
    out.push_back(s0);
    for (std::size_t k = 1; k < times.size(); ++k) {
        y = ode::integrate(rhs, y, t_prev, times[k], opt, [](const ode::StepRecord&) {});
        out.push_back(ode::to_state(y));
        t_prev = times[k];
    }
    return out;
}

std::vector<double> linspace(double t0, double t1, std::size_t n) {
    std::vector<double> ts(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        ts[k] = t0 + (t1 - t0) * (static_cast<double>(k) / static_cast<double>(n));
    return ts;
}

// Shared reference orbit for the propagation criteria: e = 0.1, i = 50 deg.
PolarNodalState reference_state(double mu) {
    KeplerianElements el;
    el.a = 1.0;
    el.e = 0.1;
    el.i = 50.0 * kRadPerDeg;
    el.raan = 0.3;
    el.argp = 0.7;
    el.anomaly = 0.2;
    el.kind = AnomalyKind::True;
    return keplerian_to_polar_nodal(PhysicalModel{mu, 1.0, 0.0}, el);
}

// Max Cartesian position gap between the semi-analytic propagation and the
// numeric truth over one orbit.
double semianalytic_position_error(double j2, const PolarNodalState& s0, double tol) {
    const PhysicalModel model{1.0, 1.0, j2};
    mainproblem::PropagateOptions popt;
    popt.tol = tol;
    popt.n_samples = 200;
    const auto truth = mainproblem::propagate_numeric(model, s0, kTwoPi, popt);
    const PolarNodalState prime0 = parallax::parallax_inverse(model, s0);
    double worst = 0.0;
    for (const auto& sample : truth.samples) {
        const PolarNodalState sa =
            parallax::parallax_direct(model, intermediary::state_at_time(model, prime0, sample.t));
        const Vec3 gap = polar_nodal_to_cartesian(sa).position -
                         polar_nodal_to_cartesian(sample.state).position;
        worst = std::max(worst, gap.norm());
    }
    return worst;
}

// Net argument-of-latitude drift across the recorded perigee passages
// (theta is unwrapped, so consecutive passages differ by ~2 pi).
double perigee_drift(const std::vector<mainproblem::PerigeeCrossing>& perigees) {
    if (perigees.size() < 2) throw Error("perigee_drift: need at least two passages");
    const double span = perigees.back().theta - perigees.front().theta;
    return std::abs(span - kTwoPi * static_cast<double>(perigees.size() - 1));
}

// Numeric main-problem perigee drift over 10 orbits at the critical
// inclination of sigma = j2 (Theta = 1 canonical).
double frozen_orbit_numeric_drift(double j2, double tol) {
    const PhysicalModel model{1.0, 1.0, j2};
    const double Theta = 1.0;
    const double sigma = sigma_of(model, Theta).value;
    const double inc = resonance::critical_inclination(sigma);
    const double e = 0.3;
    const double p = Theta * Theta / model.mu;
    const double a = p / (1.0 - e * e);
    const double f0 = 0.4;

    PolarNodalState s0;
    s0.r = p / (1.0 + e * std::cos(f0));
    s0.theta = 1.0 + f0;
    s0.nu = 0.2;
    s0.R = std::sqrt(model.mu / p) * e * std::sin(f0);
    s0.Theta = Theta;
    s0.N = Theta * std::cos(inc);

    mainproblem::PropagateOptions popt;
    popt.tol = tol;
    popt.record_perigees = true;
    const double t_span = 10.5 * kTwoPi * std::pow(a, 1.5);
    const auto run = mainproblem::propagate_numeric(model, s0, t_span, popt);
    if (run.perigees.size() < 10)
        throw Error("frozen_orbit_numeric_drift: expected at least 10 perigee passages");
    return perigee_drift(run.perigees);
}

struct Runner {
    Report report;
    Clock::time_point suite_start = Clock::now();

    void check(int id, const std::string& name, const std::function<std::string()>& body) {
        CriterionResult res;
        res.id = id;
        res.name = name;
        try {
            res.detail = body();
            res.passed = true;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = e.what();
        }
        report.criteria.push_back(res);
    }
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(msg);
}

}  // namespace

bool Report::all_passed() const {
    return std::all_of(criteria.begin(), criteria.end(),
                       [](const CriterionResult& c) { return c.passed; });
}

Report run_acceptance(const Options& opts) {
    Runner run;
    const double tol = opts.prop_tol;

    if (opts.kepler_subset) {
        // j2 = 0: the closed forms must all collapse onto the two-body problem.
        const PhysicalModel kepler{1.0, 1.0, 0.0};

        run.check(1, "kepler: hamiltonian equivalence (j2=0)", [&] {
            std::mt19937_64 rng(61803398);
            double worst = 0.0;
            for (int n = 0; n < 1000; ++n) {
                const PolarNodalState s = random_bound_state(rng, kepler.mu);
                const double hp = mainproblem::hamiltonian_polar(kepler, s);
                const double hc =
                    mainproblem::hamiltonian_cartesian(kepler, polar_nodal_to_cartesian(s));
                worst = std::max(worst, std::abs(hc - hp) / std::abs(hp));
            }
            require(worst <= 1.0e-12, fmt("relative gap %.3e > 1e-12", worst));
            return fmt("max relative gap %.3e", worst);
        });

        run.check(2, "kepler: numeric orbit closure (j2=0)", [&] {
            const PolarNodalState s0 = reference_state(kepler.mu);
            mainproblem::PropagateOptions popt;
            popt.tol = tol;
            const double period = kTwoPi;  // a = 1
            const auto res = mainproblem::propagate_numeric(kepler, s0, period, popt);
            const PolarNodalState end = res.samples.back().state;
            const double gap = std::max({std::abs(end.r - s0.r), std::abs(end.R - s0.R),
                                         std::abs(end.theta - s0.theta - kTwoPi),
                                         std::abs(end.nu - s0.nu)});
            require(gap <= 10.0 * tol, fmt("closure gap %.3e > 10 tol", gap));
            return fmt("closure gap %.3e", gap);
        });

        run.check(3, "kepler: parallax maps reduce to identity (j2=0)", [&] {
            std::mt19937_64 rng(27182818);
            double worst = 0.0;
            for (int n = 0; n < 200; ++n) {
                const PolarNodalState s = random_bound_state(rng, kepler.mu);
                const PolarNodalState fwd = parallax::parallax_direct(kepler, s);
                const PolarNodalState inv = parallax::parallax_inverse(kepler, s);
                worst = std::max({worst, std::abs(fwd.r - s.r), std::abs(inv.r - s.r),
                                  std::abs(fwd.theta - s.theta), std::abs(inv.theta - s.theta),
                                  std::abs(fwd.Theta - s.Theta), std::abs(inv.Theta - s.Theta)});
            }
            require(worst == 0.0, fmt("identity violated by %.3e", worst));
            return "direct and inverse are exact identities";
        });

        run.check(4, "kepler: semi-analytic propagation is two-body (j2=0)", [&] {
            const PolarNodalState s0 = reference_state(kepler.mu);
            mainproblem::PropagateOptions popt;
            popt.tol = tol / 10.0;  // the 1e-12 identity bound needs a tighter oracle
            popt.n_samples = 50;
            const auto truth = mainproblem::propagate_numeric(kepler, s0, kTwoPi, popt);
            double worst = 0.0;
            for (const auto& sample : truth.samples) {
                const PolarNodalState sa = parallax::propagate_semianalytic(kepler, s0, sample.t);
                worst = std::max({worst, std::abs(sa.r - sample.state.r),
                                  std::abs(sa.theta - sample.state.theta),
                                  std::abs(sa.nu - sample.state.nu),
                                  std::abs(sa.R - sample.state.R)});
            }
            require(worst <= 1.0e-12, fmt("gap vs numeric %.3e > 1e-12", worst));
            return fmt("max gap vs numeric %.3e", worst);
        });

        run.check(5, "kepler: resonance algebra degenerates (sigma=0)", [&] {
            for (double inc = 0.0; inc <= 90.0; inc += 7.5)
                require(resonance::frequency_ratio_of_inclination(0.0, inc * kRadPerDeg).value ==
                            1.0,
                        "frequency ratio must be exactly 1 at sigma=0");
            const auto rows = resonance::scan_resonances(0.0, 100, 0.5, 1.5);
            require(rows.size() == 1 && rows[0].k.num == 1 && rows[0].k.den == 1,
                    "scan at sigma=0 must yield the single 1:1 row");
            return "ratios collapse to 1, scan yields only 1:1";
        });

        run.report.elapsed_seconds = seconds_since(run.suite_start);
        return run.report;
    }

    // ----- full acceptance suite --------------------------------------------

    run.check(1, "sigma=0.1 resonance table", [&] {
        const auto t0 = Clock::now();
        const struct {
            long num, den;
            double expect_deg, alt_deg;
        } table[] = {{19, 25, 3.75, 3.75}, {4, 5, 23.66, 23.66}, {1, 1, 63.43, 63.44},
                     {14, 13, 86.34, 86.34}};
        double worst = 0.0;
        for (const auto& row : table) {
            const auto res =
                resonance::inclination_from_frequency_ratio(0.1, {row.num, row.den});
            const double dev =
                std::min(std::abs(res.i_deg - row.expect_deg), std::abs(res.i_deg - row.alt_deg));
            worst = std::max(worst, dev);
            require(dev <= 0.01, fmt("k=%g/... off by %.4f deg", double(row.num), dev));
        }
        const auto rows = resonance::scan_resonances(0.1, 25, 0.7, 1.1);
        for (const auto& row : table) {
            const bool found = std::any_of(rows.begin(), rows.end(), [&](const auto& r) {
                return r.k.num == row.num && r.k.den == row.den;
            });
            require(found, "scan(den<=25) must contain all four paper ratios");
        }
        const double dt = seconds_since(t0);
        require(dt < 1.0, fmt("table took %.3f s >= 1 s", dt));
        return fmt("max deviation %.4f deg in %.3f s", worst, dt);
    });

    run.check(2, "critical-inclination limit", [&] {
        const double ic_deg = resonance::critical_inclination(0.0) * kDegPerRad;
        require(std::abs(ic_deg - 63.434949) <= 1.0e-6,
                fmt("i_c(0) = %.8f deg, off by %.2e", ic_deg, std::abs(ic_deg - 63.434949)));
        for (int order = 0; order <= 2; ++order)
            require(resonance::critical_cos2i_series(0.0, order) == 0.2,
                    "series at sigma=0 must equal 1/5 exactly");
        return fmt("i_c(0) = %.7f deg, series(0) = 1/5 exactly", ic_deg);
    });

    run.check(3, "series coefficients by central differences", [&] {
        const double h = 1.0e-4;
        const double f_plus = resonance::critical_cos2i(h);
        const double f_minus = resonance::critical_cos2i(-h);
        const double f_zero = resonance::critical_cos2i(0.0);
        const double d1 = (f_plus - f_minus) / (2.0 * h);
        const double d2_half = 0.5 * (f_plus - 2.0 * f_zero + f_minus) / (h * h);
        const double err1 = std::abs(d1 - (-1.0 / 750.0));
        const double err2 = std::abs(d2_half - 1.0 / 9375.0);
        require(err1 <= 1.0e-9, fmt("first coefficient off by %.3e > 1e-9", err1));
        require(err2 <= 1.0e-6, fmt("second coefficient off by %.3e > 1e-6", err2));
        return fmt("|d1 + 1/750| = %.2e, |d2/2 - 1/9375| = %.2e", err1, err2);
    });

    run.check(4, "consistency of Q/P=1 inversion with the critical closed form", [&] {
        double worst = 0.0;
        for (int j = 0; j < 100; ++j) {
            const double lg = -6.0 + (std::log10(0.2) + 6.0) * j / 99.0;
            const double sigma = std::pow(10.0, lg);
            worst = std::max(worst, std::abs(resonance::resonant_cos2i(sigma, 1.0) -
                                             resonance::critical_cos2i(sigma)));
        }
        require(worst <= 1.0e-12, fmt("cos^2 gap %.3e > 1e-12", worst));
        return fmt("max cos^2 gap %.3e over 100 log-spaced sigma", worst);
    });

    run.check(5, "Hamiltonian equivalence, Cartesian vs polar-nodal", [&] {
        const PhysicalModel model{1.0, 1.0, 1.0e-3};
        std::mt19937_64 rng(31415926);
        double worst = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const PolarNodalState s = random_bound_state(rng, model.mu);
            const double hp = mainproblem::hamiltonian_polar(model, s);
            const double hc =
                mainproblem::hamiltonian_cartesian(model, polar_nodal_to_cartesian(s));
            worst = std::max(worst, std::abs(hc - hp) / std::abs(hp));
        }
        require(worst <= 1.0e-12, fmt("relative gap %.3e > 1e-12", worst));
        return fmt("max relative gap %.3e over 1000 states", worst);
    });

    run.check(6, "oracle quality over 100 orbits", [&] {
        const PhysicalModel model{1.0, 1.0, 1.0e-3};
        const PolarNodalState s0 = reference_state(model.mu);
        mainproblem::PropagateOptions popt;
        popt.tol = tol;
        const auto res = mainproblem::propagate_numeric(model, s0, 100.0 * kTwoPi, popt);
        require(res.energy_drift <= 1.0e-10,
                fmt("energy drift %.3e > 1e-10", res.energy_drift));
        require(res.n_drift <= 1.0e-13 * s0.Theta,
                fmt("N drift %.3e > 1e-13 Theta", res.n_drift));
        return fmt("energy drift %.3e, N drift %.3e", res.energy_drift, res.n_drift);
    });

    run.check(7, "intermediary closed form vs numeric flow", [&] {
        const PhysicalModel model{1.0, 1.0, 0.1};  // sigma = 0.1 at Theta = 1
        PolarNodalState s0;
        const double e = 0.3, f0 = 0.6, inc = 55.0 * kRadPerDeg;
        s0.Theta = 1.0;
        s0.N = std::cos(inc);
        s0.r = 1.0 / (1.0 + e * std::cos(f0));
        s0.R = e * std::sin(f0);
        s0.theta = 0.9;
        s0.nu = 0.1;
        const auto el = intermediary::elements_from_state(model, s0);
        const double t_r = kTwoPi * std::sqrt(std::pow(el.a_eff, 3) / model.mu);
        const auto times = linspace(0.0, 10.0 * t_r, 50);
        const auto rhs = [&](const ode::Vec6& y) { return intermediary_rhs(model, y); };
        const auto numeric = integrate_on_grid(rhs, s0, times, 1.0e-13 * (tol / 1.0e-12));
        double dr = 0.0, dth = 0.0, dnu = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k) {
            const PolarNodalState cf = intermediary::state_at_time(model, s0, times[k]);
            dr = std::max(dr, std::abs(cf.r - numeric[k].r));
            dth = std::max(dth, std::abs(cf.theta - numeric[k].theta));
            dnu = std::max(dnu, std::abs(cf.nu - numeric[k].nu));
        }
        require(dr <= 1.0e-9, fmt("max |dr| %.3e > 1e-9", dr));
        require(dth <= 1.0e-9, fmt("max |dtheta| %.3e > 1e-9", dth));
        require(dnu <= 1.0e-9, fmt("max |dnu| %.3e > 1e-9", dnu));
        return fmt("max gaps: dr %.2e, dtheta %.2e", dr, std::max(dth, dnu));
    });

    run.check(8, "rosette closure and frozen ellipse", [&] {
        // Q/P = 4/5 curve (Fig. 3 geometry) closes after 5 latitude cycles.
        const auto pts = intermediary::sample_rosette(4, 5, 0.8, 0.75 * kPi, 5.0, 256);
        const auto& first = pts.front();
        const auto& last = pts.back();
        const double gap = std::hypot(last.x - first.x, last.y - first.y);
        require(gap <= 1.0e-12, fmt("4/5 closure gap %.3e > 1e-12", gap));

        // Q/P = 1 flow at the critical inclination: a frozen ellipse.
        const PhysicalModel model{1.0, 1.0, 0.1};
        const double inc = resonance::critical_inclination(0.1);
        PolarNodalState s0;
        s0.Theta = 1.0;
        s0.N = std::cos(inc);
        const auto consts = intermediary::constants(model, s0.Theta, s0.N);
        require(std::abs(consts.Q / consts.P - 1.0) <= 1.0e-12, "Q/P must be 1 at i_c");
        const double e = 0.8;
        const double pq = consts.Q * consts.Q / model.mu;
        s0.r = pq / (1.0 + e);  // perigee
        s0.R = 0.0;
        s0.theta = 0.75 * kPi;
        s0.nu = 0.0;
        const auto el = intermediary::elements_from_state(model, s0);
        const double t_r = kTwoPi * std::pow(el.a_eff, 1.5);
        double worst = 0.0;
        for (int k = 0; k <= 40; ++k) {
            const PolarNodalState st =
                intermediary::state_at_time(model, s0, 3.0 * t_r * k / 40.0);
            const auto elt = intermediary::elements_from_state(model, st);
            // theta - f must stay pinned at theta0 and r must match the conic
            const double dperigee = std::abs(wrap_pi(elt.theta0 - el.theta0));
            const double dconic = std::abs(st.r - intermediary::radius_at_theta(el, st.theta));
            worst = std::max({worst, dperigee, dconic});
        }
        require(worst <= 1.0e-12, fmt("frozen-ellipse deviation %.3e > 1e-12", worst));
        return fmt("closure gap %.2e, frozen-ellipse deviation %.2e", gap, worst);
    });

    run.check(9, "parallax accuracy is second order in J2", [&] {
        const PolarNodalState s0 = reference_state(1.0);
        const double eps1 = semianalytic_position_error(1.0e-3, s0, tol);
        const double eps2 = semianalytic_position_error(0.5e-3, s0, tol);
        const double ratio = eps1 / eps2;
        require(ratio >= 3.4 && ratio <= 4.6, fmt("halving ratio %.3f outside [3.4, 4.6]", ratio));

        const PhysicalModel model{1.0, 1.0, 1.0e-3};
        std::mt19937_64 rng(14142135);
        double worst = 0.0;
        for (int n = 0; n < 100; ++n) {
            const PolarNodalState s = random_bound_state(rng, model.mu);
            const PolarNodalState back =
                parallax::parallax_direct(model, parallax::parallax_inverse(model, s));
            worst = std::max({worst, std::abs(back.r - s.r), std::abs(back.theta - s.theta),
                              std::abs(back.nu - s.nu), std::abs(back.R - s.R),
                              std::abs(back.Theta - s.Theta), std::abs(back.N - s.N)});
        }
        require(worst <= 1.0e-13, fmt("roundtrip error %.3e > 1e-13", worst));
        return fmt("halving ratio %.3f, roundtrip %.2e", ratio, worst);
    });

    run.check(10, "frozen perigee at the 1:1 resonance", [&] {
        // intermediary side: theta0 pinned along the flow at i_c(sigma = 1e-2)
        const PhysicalModel model{1.0, 1.0, 1.0e-2};
        const double sigma = 1.0e-2;
        const double inc = resonance::critical_inclination(sigma);
        const double e = 0.3, f0 = 0.4;
        PolarNodalState s0;
        s0.Theta = 1.0;
        s0.N = std::cos(inc);
        s0.r = 1.0 / (1.0 + e * std::cos(f0));
        s0.R = e * std::sin(f0);
        s0.theta = 1.0 + f0;
        s0.nu = 0.2;
        const auto el = intermediary::elements_from_state(model, s0);
        const double t_r = kTwoPi * std::pow(el.a_eff, 1.5);
        double drift = 0.0;
        for (int k = 0; k <= 50; ++k) {
            const auto elt = intermediary::elements_from_state(
                model, intermediary::state_at_time(model, s0, 10.0 * t_r * k / 50.0));
            drift = std::max(drift, std::abs(wrap_pi(elt.theta0 - el.theta0)));
        }
        require(drift <= 1.0e-12, fmt("intermediary perigee drift %.3e > 1e-12", drift));

        // numeric side: full main-problem drift must scale as J2^2
        const double d1 = frozen_orbit_numeric_drift(1.0e-2, tol);
        const double d2 = frozen_orbit_numeric_drift(0.5e-2, tol);
        const double ratio = d1 / d2;
        require(ratio >= 3.0 && ratio <= 5.0, fmt("halving ratio %.3f outside [3, 5]", ratio));
        return fmt("intermediary drift %.2e, numeric halving ratio %.3f", drift, ratio);
    });

    run.check(11, "performance floor", [&] {
        std::mt19937_64 rng(16180339);
        constexpr int n = 1'000'000;
        std::vector<double> ms(n), es(n);
        for (int k = 0; k < n; ++k) {
            ms[k] = kTwoPi * urand(rng);
            es[k] = 0.9 * urand(rng);
        }
        const auto t0 = Clock::now();
        double checksum = 0.0;
        for (int k = 0; k < n; ++k) checksum += solve_kepler(ms[k], es[k]);
        const double dt = seconds_since(t0);
        double worst_residual = 0.0;
        for (int k = 0; k < n; k += 97) {
            const double E = solve_kepler(ms[k], es[k]);
            worst_residual = std::max(worst_residual, std::abs(E - es[k] * std::sin(E) - ms[k]));
        }
        require(checksum != 0.0, "checksum sanity");
        require(worst_residual <= 1.0e-13, fmt("residual %.3e > 1e-13", worst_residual));
        require(dt < 1.0, fmt("1e6 solves took %.3f s >= 1 s", dt));
        const double total = seconds_since(run.suite_start);
        require(total < 60.0, fmt("suite at %.1f s >= 60 s", total));
        return fmt("1e6 solves in %.3f s, residual <= %.1e", dt, worst_residual);
    });

    run.report.elapsed_seconds = seconds_since(run.suite_start);
    return run.report;
}

void print_report(std::ostream& os, const Report& report) {
    for (const auto& c : report.criteria) {
        char head[64];
        std::snprintf(head, sizeof head, "[%2d] %s  ", c.id, c.passed ? "PASS" : "FAIL");
        os << head << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << '\n';
    }
    const std::size_t passed = static_cast<std::size_t>(
        std::count_if(report.criteria.begin(), report.criteria.end(),
                      [](const CriterionResult& c) { return c.passed; }));
    char line[96];
    std::snprintf(line, sizeof line, "%zu/%zu criteria passed in %.2f s\n", passed,
                  report.criteria.size(), report.elapsed_seconds);
    os << line;
}

}  // namespace incres::validation
