#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace incres::validation {

struct Options {
    double prop_tol = 1.0e-12;   ///< tolerance handed to the numeric propagator
    bool kepler_subset = false;  ///< j2 = 0: run only the Kepler-identity checks
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<CriterionResult> criteria;
    double elapsed_seconds = 0.0;

    bool all_passed() const;
};

/// Run the full validation suite (canonical units).  Every tolerance is
/// fixed in code; Options only changes the inputs fed to the propagator.
Report run_acceptance(const Options& opts = {});

/// One pass/fail line per criterion plus a summary line.
void print_report(std::ostream& os, const Report& report);

}  // namespace incres::validation
