#include "cf/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cf/decoder.hpp"

namespace cf {

const char* to_string(DecoderKind kind) {
  switch (kind) {
    case DecoderKind::exact_ml: return "exact_ml";
    case DecoderKind::ida: return "ida";
    case DecoderKind::joint: return "joint";
  }
  return "?";
}

std::optional<DecoderKind> decoder_kind_from_string(const std::string& name) {
  if (name == "exact_ml") return DecoderKind::exact_ml;
  if (name == "ida") return DecoderKind::ida;
  if (name == "joint") return DecoderKind::joint;
  return std::nullopt;
}

TrialRecord run_trial(Sampler& rng, int s_m, double snr_linear, DecoderKind kind) {
  if (!(snr_linear > 0.0))
    throw InvalidInputError("run_trial: snr must be positive");
  const Constellation cons(s_m);
  const double sigma2 = 1.0 / snr_linear;

  TrialRecord rec;
  rec.h1 = rng.normal();
  rec.h2 = rng.normal();
  rec.x1 = rng.symbol(s_m);
  rec.x2 = rng.symbol(s_m);
  rec.z = rng.normal() * std::sqrt(sigma2);
  rec.y = rec.h1 * static_cast<double>(rec.x1) +
          rec.h2 * static_cast<double>(rec.x2) + rec.z;

  const ChannelState ch(std::vector<double>{rec.h1, rec.h2}, snr_linear, sigma2);
  const CoeffResult best = best_coefficients(ch);
  rec.a = {best.a[0], best.a[1]};
  rec.rate_bits = best.rate_bits;
  rec.lambda_true = best.a[0] * rec.x1 + best.a[1] * rec.x2;

  if (kind == DecoderKind::joint) {
    const DecoderSetup setup(ch, extended_gcd(rec.a[0], rec.a[1]), cons);
    const auto [x1_hat, x2_hat] = decode_joint(setup, rec.y);
    rec.x1_hat = x1_hat;
    rec.x2_hat = x2_hat;
    rec.error = x1_hat != rec.x1 || x2_hat != rec.x2;
    return rec;
  }

  const DecoderSetup setup(ch, extended_gcd(rec.a[0], rec.a[1]), cons);
  const DecodeResult res = kind == DecoderKind::exact_ml
                               ? decode_ml(setup, rec.y)
                               : decode_ida(setup, rec.y);
  rec.lambda_hat = res.lambda;
  rec.ambiguous = res.ambiguous;
  rec.error = res.lambda != rec.lambda_true;
  return rec;
}

namespace {

struct Counts {
  long long errors = 0;
  long long ambiguous = 0;
};

void validate(const SimConfig& cfg) {
  if (cfg.snr_db_points.empty())
    throw InvalidInputError("run_sweep: need at least one SNR point");
  for (std::size_t i = 1; i < cfg.snr_db_points.size(); ++i)
    if (!(cfg.snr_db_points[i] > cfg.snr_db_points[i - 1]))
      throw InvalidInputError("run_sweep: snr_db points must be strictly increasing");
  if (cfg.trials_per_point < 1)
    throw InvalidInputError("run_sweep: trials_per_point must be >= 1");
  if (cfg.max_error_events && *cfg.max_error_events < 1)
    throw InvalidInputError("run_sweep: max_error_events must be >= 1");
  if (cfg.threads < 1)
    throw InvalidInputError("run_sweep: threads must be >= 1");
}

// Runs trials [first, last) of one point into per-trial flag bytes
// (bit 0: error, bit 1: ambiguous).
void run_slice(const SimConfig& cfg, std::size_t point, double snr_linear,
               long long first, long long last, unsigned char* flags) {
  for (long long t = first; t < last; ++t) {
    Sampler rng(substream_seed(cfg.seed, point, static_cast<std::uint64_t>(t)));
    const TrialRecord rec = run_trial(rng, cfg.s_m, snr_linear, cfg.decoder);
    flags[t - first] = static_cast<unsigned char>((rec.error ? 1 : 0) |
                                                  (rec.ambiguous ? 2 : 0));
  }
}

PointResult run_point(const SimConfig& cfg, std::size_t point) {
  const double snr_db = cfg.snr_db_points[point];
  const double snr_linear = std::pow(10.0, snr_db / 10.0);

  PointResult out;
  out.snr_db = snr_db;

  // Work in chunks so early stopping stays tied to the trial index, not to
  // scheduling: flags are produced in parallel, consumed in index order.
  const long long chunk = 8192;
  std::vector<unsigned char> flags(static_cast<std::size_t>(chunk));
  long long done = 0;
  bool stopped = false;
  while (done < cfg.trials_per_point && !stopped) {
    const long long len = std::min(chunk, cfg.trials_per_point - done);
    const int workers =
        static_cast<int>(std::min<long long>(cfg.threads, std::max<long long>(len, 1)));
    if (workers <= 1) {
      run_slice(cfg, point, snr_linear, done, done + len, flags.data());
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      const long long stride = (len + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        const long long lo = done + w * stride;
        const long long hi = std::min(done + len, lo + stride);
        if (lo >= hi) break;
        pool.emplace_back([&cfg, point, snr_linear, lo, hi, &flags, done] {
          run_slice(cfg, point, snr_linear, lo, hi, flags.data() + (lo - done));
        });
      }
      for (std::thread& th : pool) th.join();
    }
    for (long long i = 0; i < len; ++i) {
      out.errors += flags[static_cast<std::size_t>(i)] & 1;
      out.ambiguous_count += (flags[static_cast<std::size_t>(i)] >> 1) & 1;
      ++out.trials;
      if (cfg.max_error_events && out.errors >= *cfg.max_error_events) {
        stopped = true;
        break;
      }
    }
    done += len;
  }
  out.error_rate = static_cast<double>(out.errors) / static_cast<double>(out.trials);
  return out;
}

}  // namespace

SimResult run_sweep(const SimConfig& cfg) {
  validate(cfg);
  SimResult res;
  res.seed = cfg.seed;
  res.points.reserve(cfg.snr_db_points.size());
  for (std::size_t p = 0; p < cfg.snr_db_points.size(); ++p)
    res.points.push_back(run_point(cfg, p));
  res.fitted_diversity = fit_diversity(res.points);
  return res;
}

std::optional<double> fit_diversity(const std::vector<PointResult>& points) {
  const std::size_t n = points.size();
  std::vector<std::pair<double, double>> pts;  // (log10 snr, log10 rate)
  for (std::size_t i = n / 2; i < n; ++i) {
    const PointResult& p = points[i];
    if (p.errors >= 10 && p.error_rate > 0.0)
      pts.emplace_back(p.snr_db / 10.0, std::log10(p.error_rate));
  }
  if (pts.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return -slope;
}

std::vector<double> ambiguity_census(const SimResult& result) {
  std::vector<double> out;
  out.reserve(result.points.size());
  for (const PointResult& p : result.points)
    out.push_back(p.trials > 0
                      ? static_cast<double>(p.ambiguous_count) /
                            static_cast<double>(p.trials)
                      : 0.0);
  return out;
}

std::vector<double> ambiguity_census(const SimConfig& cfg) {
  if (cfg.decoder == DecoderKind::joint)
    throw InvalidInputError(
        "ambiguity_census: defined for the exact_ml and ida decoders");
  return ambiguity_census(run_sweep(cfg));
}

}  // namespace cf
