#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jamsim/stationary_detector.hpp"

namespace jamsim::eval {

// Positive class = jammed throughout.
struct ConfusionMatrix {
    long long tp = 0;
    long long fp = 0;
    long long fn = 0;
    long long tn = 0;

    long long total() const { return tp + fp + fn + tn; }
};

// Metrics with zero denominators are reported as nullopt, never as 0.
struct ClassMetrics {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
};

struct BinaryReport {
    ClassMetrics jammed;
    ClassMetrics non_jammed;  // the same formulas after swapping the labels
    std::optional<double> accuracy;
};

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred);
BinaryReport class_metrics(const ConfusionMatrix& cm);

struct RocCurve {
    std::vector<std::pair<double, double>> points;  // (fpr, tpr), (0,0) .. (1,1)
    double auc = 0.0;
};

// Threshold sweep over distinct scores (ties grouped), trapezoidal AUC.
// Requires scores in [0,1] and both classes present.
RocCurve roc(std::span<const int> y_true, std::span<const double> scores);

struct TrajectoryMetrics {
    std::optional<double> accuracy;
    std::optional<double> f1;  // jammed class
};

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0;  // population
    int used = 0;
    int excluded = 0;     // trajectories where the metric was undefined
};

struct TrajectorySummary {
    MetricSummary accuracy;
    MetricSummary f1;
    int n_trajectories = 0;
};

TrajectorySummary aggregate_trajectories(const std::vector<TrajectoryMetrics>& per_trajectory);

struct TrajectoryFeatures {
    stationary::Matrix x;     // epochs x 6 classifier features
    std::vector<int> labels;
};

// Applies the stationary-trained standardize -> project -> forest pipeline to
// each trajectory and aggregates per-trajectory accuracy/F1. Throws on an
// empty trajectory list.
TrajectorySummary cross_domain_eval(const stationary::PcaModel& pca,
                                    const stationary::ForestModel& forest,
                                    const std::vector<TrajectoryFeatures>& trajectories,
                                    std::vector<TrajectoryMetrics>* per_trajectory_out = nullptr);

}  // namespace jamsim::eval
