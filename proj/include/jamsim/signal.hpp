#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace jamsim::signal {

using ComplexSample = std::complex<double>;  // baseband amplitude, sqrt(W) scale

struct RfLinkConfig {
    double frequency_hz = 14e9;
    double bandwidth_hz = 1e6;
    double tx_power_w = 100.0;         // ground station transmit power
    double tx_gain_dbi = 40.0;         // ground station antenna
    double rx_gain_dbi = 30.0;         // satellite receive antenna
    double noise_temperature_k = 290.0;
};

// The per-record feature set. The first six (rss .. distance) feed the
// classifier; sjnr_at_target is kept as a dataset column.
struct SignalFeatures {
    double rss_w = 0.0;                   // empirical mean |r_k|^2
    double total_received_power_w = 0.0;  // analytic signal+noise(+jam)
    double total_amplitude_mean = 0.0;    // mean |r_k| [sqrt(W)]
    double total_amplitude_std = 0.0;     // population std of |r_k|
    double total_phase_variance = 0.0;    // population var of arg(r_k), (-pi,pi]
    double distance_to_target_km = 0.0;
    double sjnr_at_target_db = 0.0;
};

// (4 pi d f / c)^2, dimensionless power ratio.
double fspl_linear(double distance_m, double frequency_hz);

// kTB thermal noise.
double noise_power_w(double temperature_k, double bandwidth_hz);

// P g_t g_r / FSPL with gains given in dBi.
double received_power_w(double tx_power_w, double tx_gain_dbi, double rx_gain_dbi,
                        double distance_m, double frequency_hz);

// 10 log10(S / (N + J)). With jam_rx_w = 0 this is the plain SNR.
double sjnr_db(double signal_rx_w, double jam_rx_w, double noise_w);

// Symbols uniform over {(+-1 +- j)/sqrt(2)} * sqrt(avg_power): every symbol
// has |s|^2 == avg_power exactly.
std::vector<ComplexSample> qam4_burst(int count, double avg_power_w,
                                      std::uint64_t seed);

// r_k = s_k + n_k + f j_k: independent 4QAM bursts for signal and jammer,
// circular complex Gaussian noise (variance/2 per quadrature). The three
// streams use sub-seeds derived from `seed`, so the signal realization does
// not depend on the jammed flag.
std::vector<ComplexSample> synthesize_received(double signal_rx_w, double jam_rx_w,
                                               double noise_w, int count,
                                               bool jammed, std::uint64_t seed);

// Mean squared magnitude. Throws on an empty burst.
double rss_w(std::span<const ComplexSample> samples);

// Requires >= 2 samples.
SignalFeatures extract_features(std::span<const ComplexSample> samples,
                                double distance_to_target_km,
                                double analytic_sjnr_db,
                                double analytic_total_power_w);

}  // namespace jamsim::signal
