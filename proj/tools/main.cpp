// cfsim: compute-and-forward relay simulator.
//
// Subcommands:
//   rate        best integer coefficients and computation rate for a channel
//   likelihood  per-lambda decoder profile as CSV (plot-ready)
//   simulate    Monte Carlo SNR sweep, CSV + manifest output
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 numerical error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cf/decoder.hpp"
#include "cf/io.hpp"
#include "cf/lattice.hpp"
#include "cf/simulator.hpp"
#include "cf/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

std::string join_coeffs(const std::vector<long long>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

struct RateArgs {
  std::vector<double> h;
  double snr_db = 0.0;
};

int cmd_rate(const RateArgs& args) {
  const double snr = std::pow(10.0, args.snr_db / 10.0);
  // noise variance is not used by the rate computation; any positive value
  // satisfies the channel invariants
  const cf::ChannelState ch(args.h, snr, 1.0);
  const cf::CoeffResult best = cf::best_coefficients(ch);
  std::cout << "a = " << join_coeffs(best.a) << '\n'
            << "quadratic_form = " << cf::format_double(best.quadratic_form) << '\n'
            << "rate_bits = " << cf::format_double(best.rate_bits) << '\n'
            << "rate_clamped = "
            << cf::format_double(std::max(0.0, best.rate_bits)) << '\n';
  return kExitOk;
}

struct LikelihoodArgs {
  std::vector<double> h;
  double snr_db = 0.0;
  int s_m = 5;
  std::optional<long long> x1, x2;
  std::optional<double> y;
  std::optional<std::uint64_t> seed;
};

int cmd_likelihood(const LikelihoodArgs& args) {
  const double snr = std::pow(10.0, args.snr_db / 10.0);
  const double sigma2 = 1.0 / snr;
  const cf::ChannelState ch(args.h, snr, sigma2);
  const cf::Constellation cons(args.s_m);

  double y = 0.0;
  if (args.y) {
    y = *args.y;
  } else {
    if (!args.x1 || !args.x2)
      throw CLI::ValidationError("likelihood", "need --x1/--x2 or --y");
    if (!cons.contains(*args.x1) || !cons.contains(*args.x2))
      throw CLI::ValidationError("likelihood", "x1 and x2 must lie in the constellation");
    double z = 0.0;  // noiseless unless a seed requests a reproducible draw
    if (args.seed) {
      cf::Sampler rng(cf::substream_seed(*args.seed, 0, 0));
      z = rng.normal() * std::sqrt(sigma2);
    }
    y = ch.h(0) * static_cast<double>(*args.x1) +
        ch.h(1) * static_cast<double>(*args.x2) + z;
  }

  const cf::CoeffResult best = cf::best_coefficients(ch);
  const cf::DecoderSetup setup(ch, cf::extended_gcd(best.a[0], best.a[1]), cons);
  std::cerr << "a = " << join_coeffs(best.a) << '\n';

  std::cout << "lambda,score_ml,metric_ida\n";
  for (const cf::LambdaScore& e : cf::likelihood_profile(setup, y)) {
    const cf::KRange range = cf::feasible_k_range(setup.coeffs, e.lambda, cons);
    double metric = std::numeric_limits<double>::infinity();
    for (long long k = range.lo; k <= range.hi; ++k)
      metric = std::min(metric,
                        std::abs(y - setup.beta * static_cast<double>(e.lambda) +
                                 static_cast<double>(k) * setup.alpha));
    std::cout << e.lambda << ',' << cf::format_double(e.score) << ','
              << cf::format_double(metric) << '\n';
  }
  return kExitOk;
}

struct SimulateArgs {
  int s_m = 5;
  double snr_start = 20.0, snr_stop = 40.0, snr_step = 2.5;
  long long trials = 10000;
  std::string decoder = "ida";
  std::uint64_t seed = 1;
  std::string out;
  std::optional<long long> max_error_events;
  int threads = 1;
};

int cmd_simulate(const SimulateArgs& args) {
  cf::SimConfig cfg;
  cfg.s_m = args.s_m;
  cfg.trials_per_point = args.trials;
  cfg.seed = args.seed;
  cfg.decoder = *cf::decoder_kind_from_string(args.decoder);
  cfg.max_error_events = args.max_error_events;
  cfg.threads = args.threads;
  if (!(args.snr_step > 0.0) || args.snr_stop < args.snr_start)
    throw CLI::ValidationError("simulate", "need snr-db-stop >= snr-db-start and step > 0");
  const auto count = static_cast<long long>(
      std::floor((args.snr_stop - args.snr_start) / args.snr_step + 1e-9)) + 1;
  for (long long i = 0; i < count; ++i)
    cfg.snr_db_points.push_back(args.snr_start + static_cast<double>(i) * args.snr_step);

  const cf::SimResult result = cf::run_sweep(cfg);

  std::ofstream csv(args.out, std::ios::binary);
  if (!csv) {
    std::cerr << "error: cannot open " << args.out << " for writing\n";
    return kExitIo;
  }
  cf::write_sweep_csv(csv, result);
  csv.flush();
  if (!csv) {
    std::cerr << "error: failed writing " << args.out << '\n';
    return kExitIo;
  }

  cf::RunManifest manifest;
  manifest.command = "simulate";
  manifest.version = cf::kVersion;
  manifest.timestamp = cf::utc_timestamp();
  manifest.seed = args.seed;
  manifest.params = {
      {"sm", std::to_string(args.s_m)},
      {"snr_db_start", cf::format_double(args.snr_start)},
      {"snr_db_stop", cf::format_double(args.snr_stop)},
      {"snr_db_step", cf::format_double(args.snr_step)},
      {"trials", std::to_string(args.trials)},
      {"decoder", args.decoder},
      {"max_error_events", args.max_error_events
                               ? std::to_string(*args.max_error_events)
                               : std::string("none")},
      {"threads", std::to_string(args.threads)},
      {"out", args.out},
  };
  std::ofstream mf(args.out + ".manifest", std::ios::binary);
  if (!mf) {
    std::cerr << "error: cannot open " << args.out << ".manifest for writing\n";
    return kExitIo;
  }
  cf::write_manifest(mf, manifest);

  std::cout << "fitted_diversity = "
            << (result.fitted_diversity
                    ? cf::format_double(*result.fitted_diversity)
                    : std::string("n/a"))
            << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compute-and-forward relay simulator"};
  app.set_help_flag("--help", "print usage");  // frees -h for channel gains
  app.set_version_flag("--version", cf::kVersion);
  app.require_subcommand(1);

  RateArgs rate_args;
  CLI::App* rate = app.add_subcommand("rate", "best coefficients and computation rate");
  rate->set_help_flag("--help", "print usage");
  rate->add_option("--h", rate_args.h, "channel gains, comma separated")
      ->required()
      ->delimiter(',')
      ->expected(2, 64);
  rate->add_option("--snr-db", rate_args.snr_db, "SNR in dB")->required();

  LikelihoodArgs lik_args;
  CLI::App* lik = app.add_subcommand("likelihood", "per-lambda decoder profile (CSV)");
  lik->set_help_flag("--help", "print usage");
  lik->add_option("--h", lik_args.h, "channel gains, comma separated")
      ->required()
      ->delimiter(',')
      ->expected(2);
  lik->add_option("--snr-db", lik_args.snr_db, "SNR in dB")->required();
  lik->add_option("--sm", lik_args.s_m, "constellation bound s_m")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* x1 = lik->add_option("--x1", lik_args.x1, "transmitted symbol of source 1");
  auto* x2 = lik->add_option("--x2", lik_args.x2, "transmitted symbol of source 2");
  auto* yopt = lik->add_option("--y", lik_args.y, "explicit observation (no sampling)");
  lik->add_option("--seed", lik_args.seed, "draw the noise reproducibly");
  x1->needs(x2);
  x2->needs(x1);
  yopt->excludes(x1);

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo SNR sweep");
  sim->set_help_flag("--help", "print usage");
  sim->add_option("--sm", sim_args.s_m, "constellation bound s_m")
      ->required()
      ->check(CLI::PositiveNumber);
  sim->add_option("--snr-db-start", sim_args.snr_start, "sweep start (dB)")->required();
  sim->add_option("--snr-db-stop", sim_args.snr_stop, "sweep stop (dB)")->required();
  sim->add_option("--snr-db-step", sim_args.snr_step, "sweep step (dB)")
      ->required()
      ->check(CLI::PositiveNumber);
  sim->add_option("--trials", sim_args.trials, "trials per SNR point")
      ->required()
      ->check(CLI::PositiveNumber);
  sim->add_option("--decoder", sim_args.decoder, "exact_ml | ida | joint")
      ->required()
      ->check(CLI::IsMember({"exact_ml", "ida", "joint"}));
  sim->add_option("--seed", sim_args.seed, "RNG seed (default 1)");
  sim->add_option("--out", sim_args.out, "output CSV path")->required();
  sim->add_option("--max-error-events", sim_args.max_error_events,
                  "stop a point after this many errors")
      ->check(CLI::PositiveNumber);
  sim->add_option("--threads", sim_args.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rate->parsed()) return cmd_rate(rate_args);
    if (lik->parsed()) return cmd_likelihood(lik_args);
    if (sim->parsed()) return cmd_simulate(sim_args);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cf::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cf::NoSolutionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cf::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
