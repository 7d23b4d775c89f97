#pragma once

// Rate-maximizing coefficient selection: Gram matrix of the channel,
// computation rate of an integer combination, and the shortest-vector
// search that maximizes it.

#include <Eigen/Dense>
#include <vector>

#include "cf/errors.hpp"

namespace cf {

// Real channel to one relay: gains h, linear SNR, noise variance sigma^2.
struct ChannelState {
  Eigen::VectorXd h;
  double snr = 0.0;             // linear power ratio, not dB
  double noise_variance = 0.0;  // sigma^2

  ChannelState(const std::vector<double>& h_in, double snr_in,
               double noise_variance_in);

  int dimension() const { return static_cast<int>(h.size()); }
};

// Positive-definite Gram matrix G = I - snr/(1 + snr*|h|^2) * h h^T.
class GramLattice {
 public:
  explicit GramLattice(Eigen::MatrixXd g);

  const Eigen::MatrixXd& matrix() const { return g_; }
  int dimension() const { return static_cast<int>(g_.rows()); }

  // a^T G a, evaluated directly.
  double quadratic_form(const std::vector<long long>& a) const;

 private:
  Eigen::MatrixXd g_;
};

// Result of the coefficient search.
struct CoeffResult {
  std::vector<long long> a;    // sign-canonical: first nonzero component > 0
  double quadratic_form = 0.0; // a^T G a
  double rate_bits = 0.0;      // computation rate, log base 2
};

GramLattice build_gram(const ChannelState& ch);

// Computation rate in bits: log2 of the reciprocal quadratic form, computed
// from the channel directly (not via build_gram). May be negative; callers
// clamp at zero for achievability reporting.
double computation_rate(const ChannelState& ch, const std::vector<long long>& a);

// Exact shortest nonzero vector of the lattice with Gram matrix G, by
// Fincke-Pohst sphere enumeration seeded with radius min_i G_ii (the best
// unit vector). Tie policy: forms within 1e-12 relative are tied; ties
// resolve to the sign-canonical vector that is smallest in
// last-component-first (colexicographic) order.
CoeffResult shortest_vector(const GramLattice& lat);

// build_gram |> shortest_vector, with rate_bits from computation_rate.
CoeffResult best_coefficients(const ChannelState& ch);

}  // namespace cf
