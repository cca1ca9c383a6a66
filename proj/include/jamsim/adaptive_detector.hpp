#pragma once

#include <span>
#include <utility>
#include <vector>

namespace jamsim::adaptive {

// Window parameters. Defaults are the output of `jamsim calibrate` on the
// default time-variant dataset (also recorded in configs/default.conf).
struct AdaptiveConfig {
    int window = 10;          // W, trailing epochs (excludes the current one)
    double alpha = 0.25;      // threshold multiplier
    double beta_db = 100.0;   // rate-of-change threshold
    int min_warmup = 5;       // epochs predicted 0 before enough history
};

struct EpochDecision {
    double threshold_sjnr_db = 0.0;  // mu - alpha sigma
    double threshold_rss_db = 0.0;   // mu + alpha sigma
    double delta_sjnr_db = 0.0;      // |x(k) - x(k-1)|
    double delta_rss_db = 0.0;
    bool flag_threshold = false;
    bool flag_rate = false;
    int predicted = 0;               // flag_threshold OR flag_rate
};

struct DetectionTrace {
    std::vector<EpochDecision> epochs;
};

// Mean and population std over the trailing window [max(0, k-W), k-1],
// strictly before k. Requires k >= 1.
std::pair<double, double> moving_stats(std::span<const double> series, int k,
                                       int window);

// Thr_SJNR = mu - alpha sigma, Thr_RSS = mu + alpha sigma.
std::pair<double, double> thresholds(double mean_sjnr, double std_sjnr,
                                     double mean_rss, double std_rss,
                                     double alpha);

// |x(k) - x(k-1)|. Requires k >= 1.
double delta_at(std::span<const double> series, int k);

// Per-epoch OR of the threshold and rate conditions (strict inequalities).
// Epoch 0 and epochs with fewer than min_warmup prior samples are predicted 0.
// Throws on length mismatch.
DetectionTrace detect(std::span<const double> sjnr_series_db,
                      std::span<const double> rss_series_db,
                      const AdaptiveConfig& config);

struct LabeledSeries {
    std::vector<double> sjnr_db;
    std::vector<double> rss_db;
    std::vector<int> labels;
};

struct CalibrationRow {
    AdaptiveConfig config;
    double mean_f1 = 0.0;     // mean per-trajectory F1 (jammed positive)
    int scored = 0;           // trajectories with defined F1
};

struct CalibrationResult {
    AdaptiveConfig best;
    std::vector<CalibrationRow> table;  // one row per grid point
};

// Exhaustive grid search maximizing mean per-trajectory F1; ties go to the
// lexicographically smallest (W, alpha, beta).
CalibrationResult calibrate(const std::vector<LabeledSeries>& trajectories,
                            std::span<const int> windows,
                            std::span<const double> alphas,
                            std::span<const double> betas, int min_warmup);

}  // namespace jamsim::adaptive
