#pragma once

#include <cmath>
#include <numbers>

namespace jamsim::constants {

inline constexpr double kMuEarth = 398600.4418;        // [km^3/s^2] gravitational parameter
inline constexpr double kEarthRadiusKm = 6378.137;     // [km] spherical Earth
inline constexpr double kSiderealDayS = 86164.0905;    // [s]
inline constexpr double kSpeedOfLight = 299792458.0;   // [m/s]
inline constexpr double kBoltzmann = 1.380649e-23;     // [J/K]

inline constexpr double kEarthRotationRate =
    2.0 * std::numbers::pi / kSiderealDayS;            // [rad/s]

// GEO radius from Kepler's third law: a = (mu (T/2pi)^2)^(1/3) = 42164.1696 km
inline const double kGeoRadiusKm =
    std::cbrt(kMuEarth * (kSiderealDayS / (2.0 * std::numbers::pi)) *
              (kSiderealDayS / (2.0 * std::numbers::pi)));

}  // namespace jamsim::constants
