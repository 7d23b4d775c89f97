#include "cf/decoder.hpp"

#include <cmath>
#include <limits>

namespace cf {

namespace {

struct LambdaMetric {
  long long lambda = 0;
  double metric = std::numeric_limits<double>::infinity();
  long long k = 0;
};

// Best |y - beta*lambda + k*alpha| over the feasible k interval; smallest k
// wins exact ties (scan order keeps it deterministic).
LambdaMetric best_k(const DecoderSetup& setup, double y, long long lambda) {
  const KRange range = feasible_k_range(setup.coeffs, lambda, setup.cons);
  LambdaMetric out{lambda, std::numeric_limits<double>::infinity(), 0};
  const double base = y - setup.beta * static_cast<double>(lambda);
  for (long long k = range.lo; k <= range.hi; ++k) {
    const double m = std::abs(base + static_cast<double>(k) * setup.alpha);
    if (m < out.metric) {
      out.metric = m;
      out.k = k;
    }
  }
  return out;
}

// Prefer smaller |lambda|, then smaller lambda.
bool lambda_preferred(long long cand, long long incumbent) {
  const long long ac = std::llabs(cand), ai = std::llabs(incumbent);
  return ac < ai || (ac == ai && cand < incumbent);
}

}  // namespace

DecoderSetup::DecoderSetup(ChannelState ch_in, EquationCoeffs coeffs_in,
                           Constellation cons_in)
    : ch(std::move(ch_in)), coeffs(coeffs_in), cons(cons_in) {
  if (ch.dimension() != 2)
    throw InvalidInputError("DecoderSetup: decoding is defined for two sources");
  if (coeffs.g <= 0 || coeffs.a1 * coeffs.u1 + coeffs.a2 * coeffs.u2 != coeffs.g)
    throw InvalidInputError("DecoderSetup: Bezout identity does not hold");
  const double g = static_cast<double>(coeffs.g);
  alpha = (ch.h(1) * static_cast<double>(coeffs.a1) -
           ch.h(0) * static_cast<double>(coeffs.a2)) / g;
  beta = (ch.h(0) * static_cast<double>(coeffs.u1) +
          ch.h(1) * static_cast<double>(coeffs.u2)) / g;
  xi = {ch.h(0) - static_cast<double>(coeffs.a1),
        ch.h(1) - static_cast<double>(coeffs.a2)};
}

std::vector<LambdaScore> likelihood_profile(const DecoderSetup& setup, double y) {
  const double inv_two_sigma2 = 1.0 / (2.0 * setup.ch.noise_variance);
  std::vector<LambdaScore> profile;
  for (long long lambda : lambda_alphabet(setup.coeffs, setup.cons)) {
    const KRange range = feasible_k_range(setup.coeffs, lambda, setup.cons);
    const double base = y - setup.beta * static_cast<double>(lambda);
    double score = 0.0;
    for (long long k = range.lo; k <= range.hi; ++k) {
      const double r = base + static_cast<double>(k) * setup.alpha;
      score += std::exp(-r * r * inv_two_sigma2);
    }
    profile.push_back({lambda, score});
  }
  return profile;
}

DecodeResult decode_ml(const DecoderSetup& setup, double y) {
  const std::vector<LambdaScore> profile = likelihood_profile(setup, y);

  double s_best = 0.0;
  for (const LambdaScore& e : profile) s_best = std::max(s_best, e.score);

  // Tie window is relative; with an all-zero profile everything ties.
  const double floor_score = s_best * (1.0 - kScoreTieRel);
  long long lambda_hat = 0;
  double s_second = 0.0;
  bool have = false;
  int tied = 0;
  for (const LambdaScore& e : profile) {
    if (e.score >= floor_score) {
      ++tied;
      if (!have || lambda_preferred(e.lambda, lambda_hat)) {
        lambda_hat = e.lambda;
        have = true;
      }
    }
  }
  for (const LambdaScore& e : profile) {
    if (e.lambda != lambda_hat) s_second = std::max(s_second, e.score);
  }

  DecodeResult res;
  res.lambda = lambda_hat;
  res.ambiguous = tied > 1;
  res.runner_up_gap = s_best > 0.0 ? (s_best - s_second) / s_best : 0.0;
  const LambdaMetric lm = best_k(setup, y, lambda_hat);
  res.metric = lm.metric;
  res.k = lm.k;
  return res;
}

DecodeResult decode_ida(const DecoderSetup& setup, double y) {
  std::vector<LambdaMetric> metrics;
  double m_best = std::numeric_limits<double>::infinity();
  for (long long lambda : lambda_alphabet(setup.coeffs, setup.cons)) {
    metrics.push_back(best_k(setup, y, lambda));
    m_best = std::min(m_best, metrics.back().metric);
  }

  const double ceiling = m_best + kMetricTieAbs;
  const LambdaMetric* chosen = nullptr;
  double m_second = std::numeric_limits<double>::infinity();
  int tied = 0;
  for (const LambdaMetric& lm : metrics) {
    if (lm.metric <= ceiling) {
      ++tied;
      if (chosen == nullptr || lambda_preferred(lm.lambda, chosen->lambda))
        chosen = &lm;
    }
  }
  for (const LambdaMetric& lm : metrics) {
    if (lm.lambda != chosen->lambda) m_second = std::min(m_second, lm.metric);
  }

  DecodeResult res;
  res.lambda = chosen->lambda;
  res.metric = chosen->metric;
  res.k = chosen->k;
  res.ambiguous = tied > 1;
  res.runner_up_gap =
      std::isinf(m_second) ? 0.0 : m_second - m_best;
  return res;
}

std::pair<long long, long long> decode_joint(const DecoderSetup& setup, double y) {
  const double h1 = setup.ch.h(0), h2 = setup.ch.h(1);
  double best = std::numeric_limits<double>::infinity();
  std::pair<long long, long long> arg{0, 0};
  for (long long x1 = -setup.cons.s_m; x1 <= setup.cons.s_m; ++x1) {
    for (long long x2 = -setup.cons.s_m; x2 <= setup.cons.s_m; ++x2) {
      const double r = y - h1 * static_cast<double>(x1) - h2 * static_cast<double>(x2);
      const double m = r * r;
      if (m < best) {
        best = m;
        arg = {x1, x2};
      }
    }
  }
  return arg;
}

}  // namespace cf
