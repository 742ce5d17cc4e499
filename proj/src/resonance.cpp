#include "incres/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace incres::resonance {

namespace {

constexpr double kCos2Clamp = 1.0e-12;

// Clamp cos^2 i values that rounding pushed just outside [0, 1];
// anything further out has no real inclination.
double clamp_cos2(double cos2, const char* what) {
    if (cos2 < 0.0) {
        if (cos2 >= -kCos2Clamp) return 0.0;
        throw NoRealInclination(std::string(what) + ": cos^2 i = " + std::to_string(cos2));
    }
    if (cos2 > 1.0) {
        if (cos2 <= 1.0 + kCos2Clamp) return 1.0;
        throw NoRealInclination(std::string(what) + ": cos^2 i = " + std::to_string(cos2));
    }
    return cos2;
}

}  // namespace

FrequencyRatio apsidal_rate_ratio(double sigma, double inclination) {
    if (!(sigma >= 0.0)) throw InvariantError("apsidal_rate_ratio: sigma must be non-negative");
    const double c = std::cos(inclination);
    return {0.75 * sigma * (5.0 * c * c - 1.0), RatioKind::Apsidal};
}

double inclination_from_apsidal_ratio(double sigma, double ratio) {
    if (!(sigma > 0.0)) throw InvariantError("inclination_from_apsidal_ratio: sigma must be positive");
    const double cos2 = clamp_cos2((1.0 + (4.0 / 3.0) * ratio / sigma) / 5.0,
                                   "inclination_from_apsidal_ratio");
    return std::acos(std::sqrt(cos2));
}

double inclination_from_latitude_ratio(double sigma, double ratio) {
    if (!(sigma > 0.0)) throw InvariantError("inclination_from_latitude_ratio: sigma must be positive");
    const double cos2 = clamp_cos2((1.0 + (4.0 / 3.0) * (ratio - 1.0) / sigma) / 5.0,
                                   "inclination_from_latitude_ratio");
    return std::acos(std::sqrt(cos2));
}

FrequencyRatio frequency_ratio_of_inclination(double sigma, double inclination) {
    if (!(sigma >= 0.0))
        throw InvariantError("frequency_ratio_of_inclination: sigma must be non-negative");
    const double c = std::cos(inclination);
    const double c2 = c * c;
    return {std::sqrt(1.0 + sigma * (0.5 - 1.5 * c2)) / (1.0 - sigma * (0.5 - 3.0 * c2)),
            RatioKind::Radial};
}

double resonant_cos2i(double sigma, double k) {
    if (!(sigma > 0.0)) throw InvariantError("resonant_cos2i: sigma must be positive");
    if (!(k > 0.0)) throw InvariantError("resonant_cos2i: k must be positive");
    const double k2 = k * k;
    // Conjugate rewrite of (sqrt(1 + 4(6+sigma)k^2) - 1 - 2(2-sigma)k^2) / (12 sigma k^2):
    // the numerator becomes sigma(6-sigma) - (2-sigma)^2 (k^2-1), exact at k = 1.
    const double delta = (k - 1.0) * (k + 1.0);  // k^2 - 1 without cancellation
    const double root = std::sqrt(1.0 + 4.0 * (6.0 + sigma) * k2);
    const double numerator = sigma * (6.0 - sigma) - (2.0 - sigma) * (2.0 - sigma) * delta;
    const double denominator = 3.0 * sigma * (root + 1.0 + 2.0 * (2.0 - sigma) * k2);
    return clamp_cos2(numerator / denominator, "resonant_cos2i");
}

ResonantInclination inclination_from_frequency_ratio(double sigma, const RationalRatio& k) {
    ResonantInclination out;
    out.k = k;
    out.cos2i = resonant_cos2i(sigma, k.value());
    out.i_deg = std::acos(std::sqrt(out.cos2i)) * kDegPerRad;
    out.i_retro_deg = 180.0 - out.i_deg;
    return out;
}

double series_leading_coefficient(double k) {
    if (!(k > 0.0)) throw InvariantError("series_leading_coefficient: k must be positive");
    const double k2 = k * k;
    // (sqrt(1+24k^2) - 1 - 4k^2)/(12k^2) rewritten on the conjugate, with
    // 1 - k^2 factored so the root of g at k = 1 is exact.
    const double root = std::sqrt(1.0 + 24.0 * k2);
    const double one_minus_k2 = -(k - 1.0) * (k + 1.0);
    return (16.0 * k2 * one_minus_k2 / (root + 1.0 + 4.0 * k2)) / (12.0 * k2);
}

double critical_cos2i(double sigma) {
    const double w = std::sqrt(1.0 + 4.0 * sigma / 25.0);
    return 1.0 / 6.0 + 1.0 / (15.0 * (1.0 + w));
}

double critical_cos2i_series(double sigma, int order) {
    if (order < 0 || order > 2) throw InvariantError("critical_cos2i_series: order must be 0..2");
    double v = 1.0 / 5.0;
    if (order >= 1) v -= sigma / 750.0;
    if (order >= 2) v += sigma * sigma / 9375.0;
    return v;
}

double critical_inclination(double sigma) {
    if (!(sigma >= 0.0)) throw InvariantError("critical_inclination: sigma must be non-negative");
    return std::acos(std::sqrt(critical_cos2i(sigma)));
}

std::vector<ResonantInclination> scan_resonances(double sigma, long max_denominator,
                                                 double k_lo, double k_hi) {
    if (!(sigma >= 0.0)) throw InvariantError("scan_resonances: sigma must be non-negative");
    if (max_denominator < 1 || max_denominator > 10'000)
        throw InvariantError("scan_resonances: max_denominator must lie in [1, 1e4]");
    if (!(k_lo > 0.0 && k_hi >= k_lo)) throw InvariantError("scan_resonances: bad k window");

    std::vector<ResonantInclination> hits;

    if (sigma == 0.0) {
        // Kepler limit: every inclination is 1:1 resonant; report the single
        // ratio at the limiting critical inclination.
        if (k_lo <= 1.0 && 1.0 <= k_hi) {
            ResonantInclination r;
            r.k = {1, 1};
            r.cos2i = critical_cos2i(0.0);
            r.i_deg = std::acos(std::sqrt(r.cos2i)) * kDegPerRad;
            r.i_retro_deg = 180.0 - r.i_deg;
            hits.push_back(r);
        }
        return hits;
    }

    // k is decreasing in cos^2 i, so the attainable ratios live in
    // [k(i=0), k(i=90 deg)]; a small margin absorbs rounding at the edges.
    const double k_min = std::sqrt(1.0 - sigma) / (1.0 + 2.5 * sigma) - 1.0e-9;
    const double k_max = std::sqrt(1.0 + 0.5 * sigma) / (1.0 - 0.5 * sigma) + 1.0e-9;
    const double lo = std::max(k_lo, k_min);
    const double hi = std::min(k_hi, k_max);

    for (long den = 1; den <= max_denominator; ++den) {
        const long n_first = static_cast<long>(std::ceil(lo * static_cast<double>(den)));
        const long n_last = static_cast<long>(std::floor(hi * static_cast<double>(den)));
        for (long num = std::max(n_first, 1L); num <= n_last; ++num) {
            if (std::gcd(num, den) != 1) continue;
            try {
                hits.push_back(inclination_from_frequency_ratio(sigma, {num, den}));
            } catch (const NoRealInclination&) {
                // most rationals map outside [0, 1]; skip them
            }
        }
    }

    std::sort(hits.begin(), hits.end(), [](const ResonantInclination& a, const ResonantInclination& b) {
        if (a.i_deg != b.i_deg) return a.i_deg < b.i_deg;
        if (a.k.den != b.k.den) return a.k.den < b.k.den;
        return a.k.num < b.k.num;
    });
    return hits;
}

}  // namespace incres::resonance
