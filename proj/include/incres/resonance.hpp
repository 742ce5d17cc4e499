#pragma once

#include <vector>

#include "incres/intermediary.hpp"
#include "incres/types.hpp"

namespace incres::resonance {

using intermediary::FrequencyRatio;
using intermediary::RatioKind;

/// Positive rational in lowest terms.
struct RationalRatio {
    long num = 1;
    long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Inclination at which a rational frequency ratio k = n_r/n_theta is met.
/// Only cos^2 i is determined, so both branches are reported.
struct ResonantInclination {
    RationalRatio k;
    double cos2i = 0.0;
    double i_deg = 0.0;        ///< prograde branch, [0, 90]
    double i_retro_deg = 0.0;  ///< retrograde supplement, 180 - i_deg
};

/// Mean apsidal-rotation rate over mean motion, (3/4) sigma (5 cos^2 i - 1).
FrequencyRatio apsidal_rate_ratio(double sigma, double inclination);

/// Inverse of apsidal_rate_ratio; throws NoRealInclination when the ratio is
/// not reachable at this sigma.  Returns the prograde inclination in [0, pi/2].
double inclination_from_apsidal_ratio(double sigma, double ratio);

/// Same map through the latitude/anomaly rates n_theta/n_f; the abscissa is
/// the apsidal one shifted right by one unit.
double inclination_from_latitude_ratio(double sigma, double ratio);

/// Anomalistic over draconitic frequency of the radial intermediary,
/// sqrt(1 + sigma(1/2 - 3/2 cos^2 i)) / (1 - sigma(1/2 - 3 cos^2 i)).
/// Matches Q/P from intermediary::constants on shared inputs.
FrequencyRatio frequency_ratio_of_inclination(double sigma, double inclination);

/// cos^2 i solving frequency_ratio_of_inclination(sigma, i) = k, evaluated in
/// a conjugate form that stays exact through k = 1 and sigma -> 0.
/// Throws NoRealInclination outside [0, 1] (the usual case for small sigma).
double resonant_cos2i(double sigma, double k);

/// resonant_cos2i packaged with both inclination branches.
ResonantInclination inclination_from_frequency_ratio(double sigma, const RationalRatio& k);

/// Coefficient of 1/sigma in the series of resonant_cos2i around sigma = 0:
/// (sqrt(1 + 24 k^2) - 1 - 4 k^2) / (12 k^2).  Vanishes only at k = 1, which
/// is why the 1:1 resonance is the one deep resonance for small oblateness.
double series_leading_coefficient(double k);

/// cos^2 of the critical (1:1) inclination as a function of sigma.  The
/// conjugate form 1/6 + 1/(15 (1 + sqrt(1 + 4 sigma/25))) carries the
/// sigma -> 0 limit (exactly 1/5) with no special casing and extends to the
/// small negative sigma needed by derivative checks.
double critical_cos2i(double sigma);

/// Power series of critical_cos2i: 1/5 - sigma/750 + sigma^2/9375, truncated
/// at the requested order (0, 1 or 2).
double critical_cos2i_series(double sigma, int order);

/// Critical inclination angle (prograde branch, radians).
double critical_inclination(double sigma);

/**
 * @brief Enumerate rational frequency ratios that map to real inclinations.
 *
 * Coprime num/den with den <= max_denominator and value inside
 * [k_lo, k_hi], filtered to cos^2 i in [0, 1] and sorted by ascending
 * prograde inclination.  sigma = 0 degenerates to the single ratio 1:1
 * (reported at the limiting critical inclination).
 */
std::vector<ResonantInclination> scan_resonances(double sigma, long max_denominator,
                                                 double k_lo, double k_hi);

}  // namespace incres::resonance
