#pragma once

// Recovery of the equation value lambda from the scalar observation y.
// Two routes: exact maximum likelihood over the lambda alphabet, and the
// fast search phrased as an inhomogeneous Diophantine approximation,
// |y - beta*lambda + k*alpha| minimized over the constellation-feasible
// (lambda, k) pairs. Both decode the two-source (N = 2) equation.

#include <utility>
#include <vector>

#include "cf/diophantine.hpp"
#include "cf/lattice.hpp"

namespace cf {

// Ties (and the ambiguous flag) per the flat-profile phenomenon:
// likelihood scores within 1e-9 relative, metrics within 1e-9 absolute.
inline constexpr double kScoreTieRel = 1e-9;
inline constexpr double kMetricTieAbs = 1e-9;

// Everything the decoders need, precomputed from (channel, coefficients,
// constellation):
//   beta  = (h1*u1 + h2*u2)/g   scales lambda in the metric,
//   alpha = (h2*a1 - h1*a2)/g   scales k (channel/coefficient misalignment),
//   xi_i  = h_i - a_i           residual channel after integer matching.
// The load-bearing identity (tested, not assumed):
//   beta*lambda - k*alpha = h1*x1 + h2*x2 for (x1,x2) = solution_family(lambda,k).
struct DecoderSetup {
  ChannelState ch;
  EquationCoeffs coeffs;
  Constellation cons;
  double alpha = 0.0;
  double beta = 0.0;
  std::pair<double, double> xi{0.0, 0.0};

  DecoderSetup(ChannelState ch_in, EquationCoeffs coeffs_in,
               Constellation cons_in);
};

struct LambdaScore {
  long long lambda = 0;
  double score = 0.0;
};

struct DecodeResult {
  long long lambda = 0;         // decoded equation value
  double metric = 0.0;          // achieved |y - beta*lambda + k*alpha|
  long long k = 0;              // solution-family index achieving the metric
  bool ambiguous = false;       // more than one lambda inside the tie window
  double runner_up_gap = 0.0;   // best-vs-second gap: relative (scores) for
                                // decode_ml, absolute (metrics) for decode_ida
};

// One score per alphabet lambda (ascending):
//   score(lambda) = sum over feasible k of exp(-(y - beta*lambda + k*alpha)^2 / (2 sigma^2)).
// The constant equiprobable prior is dropped; only ratios matter.
std::vector<LambdaScore> likelihood_profile(const DecoderSetup& setup, double y);

// argmax of likelihood_profile. Within the tie window the smallest |lambda|
// wins, then the smallest lambda.
DecodeResult decode_ml(const DecoderSetup& setup, double y);

// argmin of |y - beta*lambda + k*alpha| over feasible (lambda, k); same
// tie-break as decode_ml with the absolute metric window.
DecodeResult decode_ida(const DecoderSetup& setup, double y);

// Baseline that decodes both symbols: argmin over S x S of
// (y - h1*x1 - h2*x2)^2, lexicographic tie-break.
std::pair<long long, long long> decode_joint(const DecoderSetup& setup, double y);

}  // namespace cf
