#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jamsim/orbital.hpp"
#include "jamsim/signal.hpp"
#include "jamsim/vec3.hpp"

namespace jamsim::scenario {

// Defaults follow the simulation parameter table: 14 GHz / 1 MHz / 4QAM,
// 40/30 dBi, 100 W both links, 290 K, 5000 positions x 200 samples,
// 5000 km VOI. 2262 of 5000 records are jammed so the train/test class
// sizes (2191/1809 + 547/453) come out exactly.
struct StationaryConfig {
    signal::RfLinkConfig link;
    double jam_power_w = 100.0;
    double attacker_gain_dbi = 30.0;  // not in the parameter table; peer GEO satellite
    int n_positions = 5000;
    int samples_per_position = 200;
    double voi_radius_km = 5000.0;
    int jammed_count = 2262;
    double target_longitude_rad = 0.0;
    std::uint64_t seed = 1;
};

struct StationaryRecord {
    int position_id = 0;
    Vec3 attacker_pos_km;  // ECI at t=0
    signal::SignalFeatures features;
    int is_jammed = 0;
};

struct TimeVariantConfig {
    signal::RfLinkConfig link;
    double jam_power_w = 100.0;
    double attacker_gain_dbi = 30.0;
    int n_trajectories = 100;
    double duration_s = 86400.0;
    double epoch_step_s = 60.0;
    int jam_period_epochs = 20;
    double jam_duty = 0.5;
    double voi_radius_km = 5000.0;
    int samples_per_epoch = 200;
    double target_longitude_rad = 0.0;
    std::uint64_t seed = 1;
};

struct EpochRecord {
    int trajectory_id = 0;
    double epoch_s = 0.0;
    double range_km = 0.0;
    signal::SignalFeatures features;
    double snr_db = 0.0;
    int is_jammed = 0;
};

struct TrajectoryData {
    int trajectory_id = 0;
    std::uint64_t seed = 0;
    orbital::KeplerianElements elements;
    std::vector<EpochRecord> records;  // empty when the orbit never enters the VOI
};

// Epoch k jammed iff (k mod period) < round(duty * period); jammed-first.
std::vector<int> schedule_periodic_jamming(int n_epochs, int period_epochs,
                                           double duty);

std::vector<StationaryRecord> gen_stationary(const StationaryConfig& config);

std::vector<TrajectoryData> gen_timevariant(const TimeVariantConfig& config);

// CSV serialization. Floats are written in full round-trip precision,
// LF line endings. Readers validate the exact header and report parse
// failures with 1-based line numbers.
std::string stationary_csv(const std::vector<StationaryRecord>& records);
void write_stationary_csv(const std::vector<StationaryRecord>& records,
                          const std::string& path);
std::vector<StationaryRecord> read_stationary_csv(const std::string& path);

std::string timevariant_csv(const std::vector<EpochRecord>& records);
void write_timevariant_csv(const std::vector<EpochRecord>& records,
                           const std::string& path);
std::vector<EpochRecord> read_timevariant_csv(const std::string& path);

// Manifest for a time-variant run: one row per trajectory file with its
// derived seed and record counts.
struct ManifestEntry {
    int trajectory_id = 0;
    std::string file;
    std::uint64_t seed = 0;
    int n_epochs = 0;
    int n_jammed = 0;
};

std::string manifest_csv(const std::vector<ManifestEntry>& entries);
void write_manifest_csv(const std::vector<ManifestEntry>& entries,
                        const std::string& path);
std::vector<ManifestEntry> read_manifest_csv(const std::string& path);

// Classifier feature order, shared by the stationary and time-variant
// pipelines (and therefore by the cross-domain experiment).
inline constexpr int kClassifierFeatureCount = 6;
extern const char* const kClassifierFeatureNames[kClassifierFeatureCount];
std::array<double, kClassifierFeatureCount> classifier_row(
    const signal::SignalFeatures& f);

}  // namespace jamsim::scenario
