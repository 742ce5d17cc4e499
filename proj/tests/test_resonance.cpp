#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "incres/intermediary.hpp"
#include "incres/resonance.hpp"

using namespace incres;
using namespace incres::resonance;

namespace {

double urand(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

const double kCriticalDeg = 63.4349488229220106;  // arccos(1/sqrt(5))

}  // namespace

TEST_CASE("apsidal rate ratio") {
    const double sigma = 1.0e-3;
    CHECK(apsidal_rate_ratio(sigma, 0.0).value == doctest::Approx(3.0 * sigma).epsilon(1e-15));
    CHECK(apsidal_rate_ratio(sigma, kPi / 2.0).value ==
          doctest::Approx(-0.75 * sigma).epsilon(1e-12));
    // frozen perigee at the critical inclination
    const double ic = std::acos(1.0 / std::sqrt(5.0));
    CHECK(std::abs(apsidal_rate_ratio(sigma, ic).value) < 1.0e-15);
    CHECK(apsidal_rate_ratio(sigma, 0.0).kind == RatioKind::Apsidal);

    // strictly decreasing in inclination on [0, 90] deg
    double prev = apsidal_rate_ratio(sigma, 0.0).value;
    for (int d = 1; d <= 90; ++d) {
        const double cur = apsidal_rate_ratio(sigma, d * kRadPerDeg).value;
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("inclination from the apsidal and latitude ratios") {
    const double sigma = 1.0e-3;
    CHECK(inclination_from_apsidal_ratio(sigma, 0.0) * kDegPerRad ==
          doctest::Approx(kCriticalDeg).epsilon(1e-12));
    CHECK(inclination_from_apsidal_ratio(sigma, 3.0 * sigma) == doctest::Approx(0.0).scale(1.0));
    CHECK(inclination_from_apsidal_ratio(sigma, 7.5e-4) * kDegPerRad ==
          doctest::Approx(50.7684795164077).epsilon(1e-12));

    CHECK(inclination_from_latitude_ratio(sigma, 1.0) * kDegPerRad ==
          doctest::Approx(kCriticalDeg).epsilon(1e-12));
    CHECK(inclination_from_latitude_ratio(sigma, 1.0 + 3.0 * sigma) ==
          doctest::Approx(0.0).scale(1.0));
    CHECK(inclination_from_latitude_ratio(sigma, 1.0 - 0.75 * sigma) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-12));

    // the latitude map is the apsidal map shifted right by one unit
    std::mt19937_64 rng(8);
    for (int n = 0; n < 200; ++n) {
        const double ratio = -0.75 * sigma + 3.75 * sigma * urand(rng);
        CHECK(inclination_from_latitude_ratio(sigma, ratio + 1.0) ==
              inclination_from_apsidal_ratio(sigma, ratio));
    }

    CHECK_THROWS_AS(inclination_from_apsidal_ratio(sigma, 4.0 * sigma), NoRealInclination);
    CHECK_THROWS_AS(inclination_from_apsidal_ratio(sigma, -sigma), NoRealInclination);
    CHECK_THROWS_AS(inclination_from_apsidal_ratio(0.0, 0.0), InvariantError);
}

TEST_CASE("frequency ratio of inclination and its inverse") {
    CHECK(frequency_ratio_of_inclination(0.0, 0.7).value == 1.0);
    CHECK(frequency_ratio_of_inclination(0.1, 0.0).value ==
          doctest::Approx(0.758946638440411).epsilon(1e-13));
    CHECK(frequency_ratio_of_inclination(0.1, critical_inclination(0.1)).value ==
          doctest::Approx(1.0).epsilon(1e-12));

    // depends on cos^2 i only: prograde/retrograde symmetry is exact
    std::mt19937_64 rng(9);
    for (int n = 0; n < 100; ++n) {
        const double sigma = 0.2 * urand(rng);
        const double inc = 0.5 * kPi * urand(rng);
        CHECK(frequency_ratio_of_inclination(sigma, inc).value ==
              frequency_ratio_of_inclination(sigma, kPi - inc).value);
    }
}

TEST_CASE("resonant inclination from a rational ratio (paper table at sigma = 0.1)") {
    const struct {
        long num, den;
        double cos2, i_deg;
    } rows[] = {
        {19, 25, 0.995711666708695, 3.75472200010429},
        {4, 5, 0.838896884579728, 23.6642599926853},
        {1, 1, 0.199867722784718, 63.4444236559153},
        {14, 13, 0.00408335794815771, 86.3362370609604},
    };
    for (const auto& row : rows) {
        const auto res = inclination_from_frequency_ratio(0.1, {row.num, row.den});
        CHECK(res.cos2i == doctest::Approx(row.cos2).epsilon(1e-12));
        CHECK(res.i_deg == doctest::Approx(row.i_deg).epsilon(1e-12));
        CHECK(res.i_retro_deg == doctest::Approx(180.0 - row.i_deg).epsilon(1e-12));
        CHECK(std::cos(res.i_deg * kRadPerDeg) * std::cos(res.i_deg * kRadPerDeg) ==
              doctest::Approx(res.cos2i).epsilon(1e-12));
    }

    // small sigma leaves k = 1.1 with a hugely negative leading term
    CHECK_THROWS_AS(resonant_cos2i(1.0e-3, 1.1), NoRealInclination);
    CHECK_THROWS_AS(resonant_cos2i(0.0, 1.0), InvariantError);
}

TEST_CASE("roundtrip inclination -> ratio -> inclination") {
    std::mt19937_64 rng(10);
    for (int n = 0; n < 500; ++n) {
        const double sigma = std::pow(10.0, -4.0 + 3.3 * urand(rng));  // [1e-4, 0.2]
        const double inc = 0.5 * kPi * urand(rng);
        const double cos2 = std::cos(inc) * std::cos(inc);
        const double k = frequency_ratio_of_inclination(sigma, inc).value;
        CHECK(resonant_cos2i(sigma, k) == doctest::Approx(cos2).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("series leading coefficient g(k)") {
    CHECK(series_leading_coefficient(1.0) == 0.0);
    CHECK(series_leading_coefficient(0.1) == doctest::Approx(0.612940604716703).epsilon(1e-13));
    CHECK(series_leading_coefficient(0.1) > 0.0);
    CHECK(series_leading_coefficient(0.1) < 1.0);
    CHECK(series_leading_coefficient(1.1) ==
          doctest::Approx(-0.0247330687040022).epsilon(1e-12));
    // the sigma^-1 term of the series reproduces -24.7 at k = 1.1, sigma = 1e-3
    CHECK(series_leading_coefficient(1.1) / 1.0e-3 == doctest::Approx(-24.733).epsilon(1e-4));
}

TEST_CASE("critical inclination closed form and series") {
    CHECK(critical_inclination(0.0) * kDegPerRad ==
          doctest::Approx(kCriticalDeg).epsilon(1e-12));
    CHECK(critical_cos2i(0.0) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(critical_cos2i(0.1) == doctest::Approx(0.199867722784717525).epsilon(1e-14));
    CHECK(critical_inclination(0.1) * kDegPerRad ==
          doctest::Approx(63.4444236559152774).epsilon(1e-12));
    CHECK(critical_inclination(0.01) * kDegPerRad ==
          doctest::Approx(63.4359030013179473).epsilon(1e-12));

    // series: exact coefficients and closeness to the closed form
    CHECK(critical_cos2i_series(0.0, 0) == 0.2);
    CHECK(critical_cos2i_series(0.3, 1) == 0.2 - 0.3 / 750.0);
    CHECK(critical_cos2i_series(0.3, 2) == 0.2 - 0.3 / 750.0 + 0.09 / 9375.0);
    CHECK(std::abs(critical_cos2i(0.1) - critical_cos2i_series(0.1, 2)) < 1.0e-6);
    CHECK(critical_cos2i_series(0.1, 2) == doctest::Approx(0.19986773333333333).epsilon(1e-15));
    CHECK_THROWS_AS(critical_cos2i_series(0.1, 3), InvariantError);

    // central differences at sigma = 0 recover the printed coefficients
    const double h = 1.0e-4;
    const double d1 = (critical_cos2i(h) - critical_cos2i(-h)) / (2.0 * h);
    CHECK(std::abs(d1 + 1.0 / 750.0) <= 1.0e-9);
    const double d2 =
        0.5 * (critical_cos2i(h) - 2.0 * critical_cos2i(0.0) + critical_cos2i(-h)) / (h * h);
    CHECK(std::abs(d2 - 1.0 / 9375.0) <= 1.0e-6);
}

TEST_CASE("consistency between the k=1 inversion and the critical closed form") {
    for (int j = 0; j < 100; ++j) {
        const double sigma = std::pow(10.0, -6.0 + (std::log10(0.2) + 6.0) * j / 99.0);
        CHECK(std::abs(resonant_cos2i(sigma, 1.0) - critical_cos2i(sigma)) <= 1.0e-12);
    }
}

TEST_CASE("Eq. (25) equals Q/P from the intermediary constants") {
    std::mt19937_64 rng(12);
    for (int n = 0; n < 200; ++n) {
        const double sigma = 0.2 * urand(rng);
        const double inc = kPi * urand(rng);
        const PhysicalModel model{1.0, 1.0, sigma};  // Theta = 1 makes sigma = j2
        const auto consts = intermediary::constants(model, 1.0, std::cos(inc));
        CHECK(frequency_ratio_of_inclination(sigma, inc).value ==
              doctest::Approx(consts.Q / consts.P).epsilon(1e-14));
    }
}

TEST_CASE("resonance scan") {
    // sigma = 0.1 catches the four paper ratios among the den <= 25 rationals
    const auto rows = scan_resonances(0.1, 25, 0.7, 1.1);
    const auto find = [&](long num, long den) {
        for (const auto& r : rows)
            if (r.k.num == num && r.k.den == den) return true;
        return false;
    };
    CHECK(find(19, 25));
    CHECK(find(4, 5));
    CHECK(find(1, 1));
    CHECK(find(14, 13));

    for (std::size_t j = 0; j < rows.size(); ++j) {
        CHECK(std::gcd(rows[j].k.num, rows[j].k.den) == 1);
        CHECK(rows[j].cos2i >= 0.0);
        CHECK(rows[j].cos2i <= 1.0);
        if (j > 0) CHECK(rows[j].i_deg >= rows[j - 1].i_deg);
    }

    // small sigma: only ratios within O(sigma) of 1 survive
    for (const auto& r : scan_resonances(1.0e-3, 1000, 0.5, 1.5))
        CHECK(std::abs(r.k.value() - 1.0) < 0.01);

    // Kepler limit: single 1:1 row at the limiting critical inclination
    const auto kepler_rows = scan_resonances(0.0, 1000, 0.5, 1.5);
    REQUIRE(kepler_rows.size() == 1);
    CHECK(kepler_rows[0].k.num == 1);
    CHECK(kepler_rows[0].k.den == 1);
    CHECK(kepler_rows[0].i_deg == doctest::Approx(kCriticalDeg).epsilon(1e-12));

    CHECK_THROWS_AS(scan_resonances(0.1, 100000, 0.5, 1.5), InvariantError);
    CHECK_THROWS_AS(scan_resonances(-0.1, 100, 0.5, 1.5), InvariantError);
}
