#pragma once

// Monte Carlo harness: per-trial channel/symbol/noise sampling, coefficient
// selection, decoding, and error-rate aggregation over an SNR sweep with a
// least-squares diversity-order fit.
//
// Determinism contract: every trial draws from the substream
// substream_seed(cfg.seed, point index, trial index), so results are
// bit-identical for a given SimConfig regardless of thread count or
// scheduling. Aggregation is a commutative sum of counts.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cf/rng.hpp"

namespace cf {

enum class DecoderKind { exact_ml, ida, joint };

const char* to_string(DecoderKind kind);
std::optional<DecoderKind> decoder_kind_from_string(const std::string& name);

struct SimConfig {
  int s_m = 5;
  std::vector<double> snr_db_points;        // strictly increasing
  long long trials_per_point = 1;
  std::uint64_t seed = 1;
  DecoderKind decoder = DecoderKind::ida;
  std::optional<long long> max_error_events;  // early stop, off by default
  int threads = 1;
};

struct PointResult {
  double snr_db = 0.0;
  long long trials = 0;
  long long errors = 0;
  double error_rate = 0.0;
  long long ambiguous_count = 0;
};

struct SimResult {
  std::vector<PointResult> points;
  std::optional<double> fitted_diversity;  // absent when the fit window is empty
  std::uint64_t seed = 0;
};

// Full record of one trial; the simulator aggregates the two flags.
struct TrialRecord {
  double h1 = 0.0, h2 = 0.0;
  long long x1 = 0, x2 = 0;
  double z = 0.0, y = 0.0;
  std::array<long long, 2> a{0, 0};
  double rate_bits = 0.0;
  long long lambda_true = 0;
  long long lambda_hat = 0;         // lambda decoders
  long long x1_hat = 0, x2_hat = 0; // joint decoder
  bool error = false;
  bool ambiguous = false;
};

// One trial at linear SNR. Draw order (pinned): h1, h2, x1, x2, z.
// Noise realization: sigma^2 = 1/snr (unit-spaced integer symbols against
// the unit-variance channel model; the same SNR parameterizes the Gram
// matrix of the coefficient search).
TrialRecord run_trial(Sampler& rng, int s_m, double snr_linear, DecoderKind kind);

// Sweep all configured points. Early stopping (when enabled) cuts each
// point at the first trial index where the cumulative error count reaches
// the cap, evaluated in trial-index order — still scheduling-independent.
SimResult run_sweep(const SimConfig& cfg);

// Negated least-squares slope of log10(error_rate) vs log10(snr) over the
// upper half of the grid, using points with >= 10 error events and a
// nonzero rate. Absent when fewer than two points qualify.
std::optional<double> fit_diversity(const std::vector<PointResult>& points);

// Ambiguous-trial fraction per point. Precondition: an exact_ml or ida run
// (the joint decoder has no ambiguity notion).
std::vector<double> ambiguity_census(const SimResult& result);
std::vector<double> ambiguity_census(const SimConfig& cfg);

}  // namespace cf
