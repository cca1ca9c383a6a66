#pragma once

#include <cstdint>
#include <vector>

#include "jamsim/vec3.hpp"

namespace jamsim::orbital {

// Classical elements for analytic two-body propagation. No perturbations:
// time-variant relative motion comes purely from element differences.
struct KeplerianElements {
    double semi_major_axis_km = 0.0;
    double eccentricity = 0.0;      // [0, 1)
    double inclination_rad = 0.0;
    double raan_rad = 0.0;
    double arg_perigee_rad = 0.0;
    double mean_anomaly_epoch_rad = 0.0;
    double epoch_s = 0.0;           // simulation time origin of mean anomaly
};

struct EciState {
    Vec3 position_km;
    Vec3 velocity_km_s;
};

struct GroundStation {
    double latitude_rad = 0.0;
    double longitude_rad = 0.0;
    double altitude_km = 0.0;
};

// Half-open [start, end): both endpoints lie on the sampling grid, end is
// one step past the last qualifying epoch, so start < end always holds.
struct AccessInterval {
    double start_s = 0.0;
    double end_s = 0.0;
};

// Kepler's equation E - e sin E = M by Newton iteration to 1e-12.
// Throws NumericalError after 50 iterations without convergence.
double solve_kepler(double mean_anomaly_rad, double eccentricity);

// Two-body state at time t (ECI frame: +x through longitude 0 at t=0,
// +z through the north pole, Earth rotating at the sidereal rate).
EciState propagate(const KeplerianElements& elements, double t_s);

// Geostationary slot pinned to an Earth-fixed longitude.
EciState geo_slot_state(double longitude_rad, double t_s);

// Spherical-Earth station position rotating at the sidereal rate.
Vec3 ground_station_eci(const GroundStation& gs, double t_s);

// `count` points uniform in the ball of `radius_km` around `target_km`
// (inverse-CDF on radius, r = R u^(1/3), uniform direction).
std::vector<Vec3> sample_voi(const Vec3& target_km, double radius_km, int count,
                             std::uint64_t seed);

// Randomized attacker elements: a in GEO +/- 3000 km, i in [0, 5 deg],
// e in [0, 0.01], raan/argp uniform. Initial mean longitude is placed within
// +/- 0.12 rad of the longitude-0 GEO slot so trajectories cross the VOI.
KeplerianElements random_attacker_elements(std::uint64_t seed);

// True iff the segment p1-p2 does not intersect the Earth sphere.
bool line_of_sight(const Vec3& p1_km, const Vec3& p2_km);

double range_km(const Vec3& p1_km, const Vec3& p2_km);

// Maximal runs of sampled epochs in [t0, t1] where the attacker has line of
// sight to the GEO slot and range <= r_voi. Empty result is not an error.
std::vector<AccessInterval> access_intervals(const KeplerianElements& attacker,
                                             double target_longitude_rad,
                                             double t0_s, double t1_s,
                                             double step_s, double r_voi_km);

}  // namespace jamsim::orbital
