#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace incres {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kDegPerRad = 180.0 / kPi;
inline constexpr double kRadPerDeg = kPi / 180.0;

/// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

/// Reduce an angle to (-pi, pi].
inline double wrap_pi(double angle) {
    double a = wrap_two_pi(angle);
    return a > kPi ? a - kTwoPi : a;
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for every numerical/domain failure raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A state or parameter set violates a type invariant (e.g. |N| > Theta).
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Orbit is not bound (h >= 0 or e >= 1) where a bound orbit is required.
class UnboundOrbitError : public Error {
public:
    using Error::Error;
};

/// Radius fell below the configured floor (near-rectilinear orbit).
class SingularityError : public Error {
public:
    using Error::Error;
};

/// An iteration (Kepler solve, fixed point, step control) failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A resonance condition has no real inclination (cos^2 i outside [0, 1]).
class NoRealInclination : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Small 3-vector
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/**
 * @brief Gravity-field parameters of the oblate primary.
 *
 * Canonical units (mu = alpha = 1) are the default so that the dimensionless
 * oblateness strength sigma = j2 (alpha/p)^2 can be read off directly.
 * SI values may be loaded from a config file instead.
 */
struct PhysicalModel {
    double mu = 1.0;     ///< gravitational parameter [length^3 / time^2]
    double alpha = 1.0;  ///< equatorial radius of the primary [length]
    double j2 = 1.0e-3;  ///< second zonal harmonic coefficient [-]

    void validate() const {
        if (!(mu > 0.0)) throw InvariantError("PhysicalModel: mu must be positive");
        if (!(alpha > 0.0)) throw InvariantError("PhysicalModel: alpha must be positive");
        if (!(j2 >= 0.0)) throw InvariantError("PhysicalModel: j2 must be non-negative");
    }
};

/**
 * @brief Canonical polar-nodal (Whittaker) variables (r, theta, nu, R, Theta, N).
 *
 * r      radial distance, theta  argument of latitude, nu  node angle,
 * R      radial velocity, Theta  angular-momentum modulus, N  its polar
 * component.  cos i = N / Theta.  Angles are radians; propagation keeps
 * them continuous (unwrapped), reporting layers reduce to [0, 2*pi).
 */
struct PolarNodalState {
    double r = 1.0;
    double theta = 0.0;
    double nu = 0.0;
    double R = 0.0;
    double Theta = 1.0;
    double N = 1.0;

    /// Same state with theta and nu reduced to [0, 2*pi).
    PolarNodalState normalized_angles() const {
        PolarNodalState s = *this;
        s.theta = wrap_two_pi(theta);
        s.nu = wrap_two_pi(nu);
        return s;
    }

    void validate() const {
        if (!(r > 0.0)) throw InvariantError("PolarNodalState: r must be positive");
        if (!(Theta > 0.0)) throw InvariantError("PolarNodalState: Theta must be positive");
        if (std::abs(N) > Theta * (1.0 + 1.0e-12))
            throw InvariantError("PolarNodalState: |N| exceeds Theta");
    }
};

/// Inertial position/velocity pair.
struct CartesianState {
    Vec3 position;
    Vec3 velocity;
};

enum class AnomalyKind { True, Eccentric, Mean };

/**
 * @brief Classical orbital elements with an explicit anomaly tag.
 *
 * Angles in radians.  Only elliptic states (a > 0, 0 <= e < 1) are handled.
 */
struct KeplerianElements {
    double a = 1.0;      ///< semi-major axis
    double e = 0.0;      ///< eccentricity
    double i = 0.0;      ///< inclination
    double raan = 0.0;   ///< right ascension of the ascending node
    double argp = 0.0;   ///< argument of perigee
    double anomaly = 0.0;
    AnomalyKind kind = AnomalyKind::True;

    double semilatus_rectum() const { return a * (1.0 - e * e); }
};

/// Dimensionless oblateness strength sigma = j2 * alpha^2 / p^2 with p = Theta^2/mu.
struct SigmaParameter {
    double value = 0.0;
};

}  // namespace incres
