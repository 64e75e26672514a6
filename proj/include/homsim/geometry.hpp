#pragma once

#include <cmath>

namespace homsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

/// A point in the transverse plane of a paraxial beam (meters).
struct TransversePoint {
    double x = 0.0;
    double y = 0.0;

    double rho() const { return std::hypot(x, y); }
    double phi() const { return std::atan2(y, x); }

    /// Mirror map (x, y) -> (x, -y).
    TransversePoint reflected() const { return {x, -y}; }
};

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

}  // namespace homsim
