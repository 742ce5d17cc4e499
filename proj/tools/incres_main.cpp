// incres -- closed-form inclination-resonance toolbox for the J2 main
// problem: critical-inclination algebra, Deprit's radial intermediary,
// elimination of the parallax, and a numeric truth oracle.
//
// stdout carries data (CSV or JSON), stderr carries diagnostics.
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "incres/config.hpp"
#include "incres/csv.hpp"
#include "incres/elements.hpp"
#include "incres/intermediary.hpp"
#include "incres/mainproblem.hpp"
#include "incres/parallax.hpp"
#include "incres/propagate.hpp"
#include "incres/resonance.hpp"
#include "incres/types.hpp"
#include "incres/validate.hpp"

namespace {

using namespace incres;

struct OutputTarget {
    std::string path;     // empty: stdout
    std::string format = "csv";

    template <class WriteCsv, class WriteJson>
    void emit(WriteCsv&& csv, WriteJson&& json) const {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw Error("cannot open output file '" + path + "'");
            os = &file;
        }
        if (format == "json")
            json(*os);
        else
            csv(*os);
    }
};

void add_output_flags(CLI::App* cmd, OutputTarget& out) {
    cmd->add_option("-o,--output", out.path, "Write to file instead of stdout");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

resonance::RationalRatio parse_ratio(const std::string& text) {
    const auto slash = text.find('/');
    try {
        resonance::RationalRatio k;
        if (slash == std::string::npos) {
            k.num = std::stol(text);
            k.den = 1;
        } else {
            k.num = std::stol(text.substr(0, slash));
            k.den = std::stol(text.substr(slash + 1));
        }
        if (k.num <= 0 || k.den <= 0) throw std::invalid_argument("not positive");
        return k;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--ratio", "expected a positive rational like 4/5");
    }
}

std::string fmt_deg(double rad) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10f", rad * kDegPerRad);
    return buf;
}

// ---------------------------------------------------------------------------
// critical
// ---------------------------------------------------------------------------

struct CriticalArgs {
    std::optional<double> sigma;
    std::optional<double> j2;
    std::optional<double> p;
};

int run_critical(const CriticalArgs& args, const PhysicalModel& model) {
    double sigma = 0.0;
    if (args.sigma) {
        sigma = *args.sigma;
    } else {
        const double p = *args.p;
        sigma = *args.j2 * model.alpha * model.alpha / (p * p);
    }

    const double cos2 = resonance::critical_cos2i(sigma);
    const double ic = resonance::critical_inclination(sigma);
    std::printf("sigma             = %.16e\n", sigma);
    std::printf("cos^2 i_c         = %.16e\n", cos2);
    std::printf("i_c exact         = %s deg\n", fmt_deg(ic).c_str());
    std::printf("i_c retrograde    = %s deg\n", fmt_deg(kPi - ic).c_str());
    for (int order = 0; order <= 2; ++order) {
        const double c2s = resonance::critical_cos2i_series(sigma, order);
        const double is = std::acos(std::sqrt(c2s));
        std::printf("i_c series o(%d)   = %s deg\n", order, fmt_deg(is).c_str());
    }
    const double c2s = resonance::critical_cos2i_series(sigma, 2);
    std::printf("exact - series(2) = %.3e deg\n",
                (ic - std::acos(std::sqrt(c2s))) * kDegPerRad);
    return 0;
}

// ---------------------------------------------------------------------------
// resonances
// ---------------------------------------------------------------------------

int run_resonances(double sigma, long max_den, std::pair<double, double> window,
                   const OutputTarget& out) {
    const auto rows = resonance::scan_resonances(sigma, max_den, window.first, window.second);
    out.emit([&](std::ostream& os) { io::write_resonances_csv(os, rows); },
             [&](std::ostream& os) { io::write_resonances_json(os, rows); });
    std::cerr << rows.size() << " resonant inclinations for sigma=" << sigma
              << ", den<=" << max_den << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// rosette
// ---------------------------------------------------------------------------

int run_rosette(const std::string& ratio_text, double e, double theta0_deg, double revs,
                int samples_per_rev, const OutputTarget& out) {
    const auto ratio = parse_ratio(ratio_text);
    const auto pts = intermediary::sample_rosette(ratio.num, ratio.den, e,
                                                  theta0_deg * kRadPerDeg, revs, samples_per_rev);
    out.emit([&](std::ostream& os) { io::write_rosette_csv(os, pts); },
             [&](std::ostream& os) { io::write_rosette_json(os, pts); });
    return 0;
}

// ---------------------------------------------------------------------------
// diagram
// ---------------------------------------------------------------------------

struct DiagramArgs {
    std::string kind;
    double sigma = 1.0e-3;
    double sigma_max = 0.1;
    int points = 101;
    std::vector<double> inclinations_deg = {3.75, 23.66, 63.44, 86.34};
};

int run_diagram(const DiagramArgs& args, const OutputTarget& out) {
    if (args.kind == "k-sigma") {
        std::vector<io::KSigmaPoint> pts;
        for (const double i_deg : args.inclinations_deg) {
            for (int j = 0; j < args.points; ++j) {
                const double sigma = args.sigma_max * j / (args.points - 1);
                const double k =
                    resonance::frequency_ratio_of_inclination(sigma, i_deg * kRadPerDeg).value;
                pts.push_back({sigma, i_deg, k});
            }
        }
        out.emit([&](std::ostream& os) { io::write_ksigma_csv(os, pts); },
                 [&](std::ostream& os) { io::write_ksigma_json(os, pts); });
        return 0;
    }

    const bool apsidal = args.kind == "apsidal";
    const double lo = apsidal ? -0.75 * args.sigma : 1.0 - 0.75 * args.sigma;
    const double hi = apsidal ? 3.0 * args.sigma : 1.0 + 3.0 * args.sigma;
    std::vector<io::DiagramPoint> pts;
    for (int j = 0; j < args.points; ++j) {
        const double ratio = lo + (hi - lo) * j / (args.points - 1);
        const double inc = apsidal
                               ? resonance::inclination_from_apsidal_ratio(args.sigma, ratio)
                               : resonance::inclination_from_latitude_ratio(args.sigma, ratio);
        pts.push_back({ratio, inc * kDegPerRad});
    }
    out.emit([&](std::ostream& os) { io::write_diagram_csv(os, pts); },
             [&](std::ostream& os) { io::write_diagram_json(os, pts); });
    return 0;
}

// ---------------------------------------------------------------------------
// propagate
// ---------------------------------------------------------------------------

struct PropagateArgs {
    std::string method;
    double a = 1.0;
    double ecc = 0.0;
    double inc_deg = 0.0;
    double raan_deg = 0.0;
    double argp_deg = 0.0;
    double anomaly_deg = 0.0;
    std::string anomaly_kind = "true";
    std::optional<double> time;
    std::optional<double> orbits;
    double tol = 1.0e-12;
    std::size_t samples = 200;
    double fixed_step = 0.0;
};

AnomalyKind parse_anomaly_kind(const std::string& text) {
    if (text == "true") return AnomalyKind::True;
    if (text == "eccentric") return AnomalyKind::Eccentric;
    if (text == "mean") return AnomalyKind::Mean;
    throw CLI::ValidationError("--anom-kind", "expected true|eccentric|mean");
}

int run_propagate(const PropagateArgs& args, const PhysicalModel& model,
                  const OutputTarget& out) {
    KeplerianElements el;
    el.a = args.a;
    el.e = args.ecc;
    el.i = args.inc_deg * kRadPerDeg;
    el.raan = args.raan_deg * kRadPerDeg;
    el.argp = args.argp_deg * kRadPerDeg;
    el.anomaly = args.anomaly_deg * kRadPerDeg;
    el.kind = parse_anomaly_kind(args.anomaly_kind);
    const PolarNodalState s0 = keplerian_to_polar_nodal(model, el);

    double t_span = 0.0;
    if (args.time)
        t_span = *args.time;
    else
        t_span = *args.orbits * kTwoPi * std::pow(args.a, 1.5) / std::sqrt(model.mu);

    mainproblem::TrajectorySamples samples;
    if (args.method == "numeric") {
        mainproblem::PropagateOptions popt;
        popt.tol = args.tol;
        popt.n_samples = args.samples;
        popt.fixed_step = args.fixed_step;
        auto result = mainproblem::propagate_numeric(model, s0, t_span, popt);
        std::fprintf(stderr,
                     "numeric: steps=%zu rejected=%zu energy_drift=%.3e N_drift=%.3e\n",
                     result.steps_taken, result.steps_rejected, result.energy_drift,
                     result.n_drift);
        samples = std::move(result.samples);
    } else {
        const bool semianalytic = args.method == "semianalytic";
        const PolarNodalState prime0 =
            semianalytic ? parallax::parallax_inverse(model, s0) : s0;
        for (std::size_t k = 0; k <= args.samples; ++k) {
            const double t = t_span * (static_cast<double>(k) / static_cast<double>(args.samples));
            PolarNodalState st = intermediary::state_at_time(model, prime0, t);
            double energy;
            if (semianalytic) {
                st = parallax::parallax_direct(model, st);
                energy = mainproblem::hamiltonian_polar(model, st);
            } else {
                energy = intermediary::elements_from_state(model, st).h;
            }
            samples.push_back({t, st, energy});
        }
    }

    out.emit([&](std::ostream& os) { io::write_trajectory_csv(os, samples); },
             [&](std::ostream& os) { io::write_trajectory_json(os, samples); });
    return 0;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int run_validate(double tol, std::optional<double> j2) {
    validation::Options vopt;
    vopt.prop_tol = tol;
    if (j2) {
        if (*j2 != 0.0)
            throw CLI::ValidationError(
                "--j2", "only --j2 0 (Kepler subset) is supported; the full suite "
                        "pins its own J2 values");
        vopt.kepler_subset = true;
    }
    const auto report = validation::run_acceptance(vopt);
    validation::print_report(std::cout, report);
    return report.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inclination resonances of the J2 main problem: closed forms and oracles"};
    app.require_subcommand(1);

    PhysicalModel model;
    try {
        model = model_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    // critical
    CriticalArgs crit;
    auto* cmd_critical = app.add_subcommand("critical", "Critical inclination for a given sigma");
    auto* opt_sigma = cmd_critical->add_option("--sigma", crit.sigma, "Oblateness strength sigma")
                          ->check(CLI::NonNegativeNumber);
    auto* opt_j2 = cmd_critical->add_option("--j2", crit.j2, "J2 coefficient")
                       ->check(CLI::NonNegativeNumber)
                       ->excludes(opt_sigma);
    cmd_critical->add_option("--p", crit.p, "Semilatus rectum (canonical length)")
        ->check(CLI::PositiveNumber)
        ->needs(opt_j2);
    opt_j2->needs(cmd_critical->get_option("--p"));

    // resonances
    double res_sigma = 0.1;
    long res_max_den = 25;
    std::pair<double, double> res_window{0.5, 1.5};
    OutputTarget res_out;
    auto* cmd_resonances =
        app.add_subcommand("resonances", "Scan rational frequency ratios for real inclinations");
    cmd_resonances->add_option("--sigma", res_sigma, "Oblateness strength sigma")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd_resonances->add_option("--max-den", res_max_den, "Largest denominator to enumerate")
        ->check(CLI::Range(1L, 10000L))
        ->capture_default_str();
    cmd_resonances->add_option("--window", res_window, "Ratio window [lo hi]")
        ->capture_default_str();
    add_output_flags(cmd_resonances, res_out);

    // rosette
    std::string ros_ratio = "1/1";
    double ros_e = 0.8, ros_theta0 = 135.0, ros_revs = 0.0;
    int ros_samples = 720;
    OutputTarget ros_out;
    auto* cmd_rosette = app.add_subcommand("rosette", "Closed-form trajectory r(theta), Q^2 = mu");
    cmd_rosette->add_option("--ratio", ros_ratio, "Q/P as a rational, e.g. 4/5")
        ->capture_default_str();
    cmd_rosette->add_option("--e", ros_e, "Eccentricity in [0,1)")
        ->check(CLI::Range(0.0, 0.999999))
        ->capture_default_str();
    cmd_rosette->add_option("--theta0-deg", ros_theta0, "Latitude of perigee [deg]")
        ->capture_default_str();
    cmd_rosette->add_option("--revs", ros_revs,
                            "Latitude cycles to sample (default: until closure)");
    cmd_rosette->add_option("--samples-per-rev", ros_samples, "Angular resolution")
        ->check(CLI::Range(8, 100000))
        ->capture_default_str();
    add_output_flags(cmd_rosette, ros_out);

    // diagram
    DiagramArgs dia;
    OutputTarget dia_out;
    auto* cmd_diagram = app.add_subcommand("diagram", "Resonance-diagram data for the figures");
    cmd_diagram->add_option("--kind", dia.kind, "apsidal | latitude | k-sigma")
        ->required()
        ->check(CLI::IsMember({"apsidal", "latitude", "k-sigma"}));
    cmd_diagram->add_option("--sigma", dia.sigma, "sigma for apsidal/latitude kinds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_diagram->add_option("--sigma-max", dia.sigma_max, "sigma range end for k-sigma")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_diagram->add_option("--points", dia.points, "Points per curve")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    cmd_diagram->add_option("--inclinations", dia.inclinations_deg,
                            "Inclination list [deg] for k-sigma");
    add_output_flags(cmd_diagram, dia_out);

    // propagate
    PropagateArgs prop;
    OutputTarget prop_out;
    auto* cmd_propagate = app.add_subcommand("propagate", "Propagate and emit a trajectory CSV");
    cmd_propagate->add_option("--method", prop.method, "numeric | intermediary | semianalytic")
        ->required()
        ->check(CLI::IsMember({"numeric", "intermediary", "semianalytic"}));
    cmd_propagate->add_option("--a", prop.a, "Semi-major axis")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_propagate->add_option("--ecc", prop.ecc, "Eccentricity")
        ->check(CLI::Range(0.0, 0.999999))->capture_default_str();
    cmd_propagate->add_option("--inc", prop.inc_deg, "Inclination [deg]")->capture_default_str();
    cmd_propagate->add_option("--raan", prop.raan_deg, "Node [deg]")->capture_default_str();
    cmd_propagate->add_option("--argp", prop.argp_deg, "Argument of perigee [deg]")
        ->capture_default_str();
    cmd_propagate->add_option("--anom", prop.anomaly_deg, "Anomaly [deg]")->capture_default_str();
    cmd_propagate->add_option("--anom-kind", prop.anomaly_kind, "true | eccentric | mean")
        ->check(CLI::IsMember({"true", "eccentric", "mean"}))
        ->capture_default_str();
    auto* opt_time = cmd_propagate->add_option("--time", prop.time, "Span [canonical time]");
    cmd_propagate->add_option("--orbits", prop.orbits, "Span [orbital periods]")
        ->excludes(opt_time);
    cmd_propagate->add_option("--tol", prop.tol, "Propagation tolerance")
        ->capture_default_str();
    cmd_propagate->add_option("--samples", prop.samples, "Output samples")
        ->check(CLI::Range(std::size_t{1}, std::size_t{10'000'000}))
        ->capture_default_str();
    cmd_propagate->add_option("--fixed-step", prop.fixed_step,
                              "Fixed step size (reproducible golden outputs)");
    add_output_flags(cmd_propagate, prop_out);

    // validate
    double val_tol = 1.0e-12;
    std::optional<double> val_j2;
    auto* cmd_validate = app.add_subcommand("validate", "Run the validation suite");
    cmd_validate->add_option("--tol", val_tol, "Propagation tolerance fed to the oracle checks")
        ->capture_default_str();
    cmd_validate->add_option("--j2", val_j2, "0 selects the Kepler-identity subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_critical->parsed()) {
            if (!crit.sigma && !(crit.j2 && crit.p))
                throw CLI::ValidationError("critical",
                                           "supply exactly one of --sigma or --j2 with --p");
            return run_critical(crit, model);
        }
        if (cmd_resonances->parsed())
            return run_resonances(res_sigma, res_max_den, res_window, res_out);
        if (cmd_rosette->parsed()) {
            if (ros_revs <= 0.0) ros_revs = static_cast<double>(parse_ratio(ros_ratio).den);
            return run_rosette(ros_ratio, ros_e, ros_theta0, ros_revs, ros_samples, ros_out);
        }
        if (cmd_diagram->parsed()) return run_diagram(dia, dia_out);
        if (cmd_propagate->parsed()) {
            if (!prop.time && !prop.orbits)
                throw CLI::ValidationError("propagate", "supply --time or --orbits");
            return run_propagate(prop, model, prop_out);
        }
        if (cmd_validate->parsed()) return run_validate(val_tol, val_j2);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const incres::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
