#include "cf/lattice.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>

namespace cf {

namespace {

constexpr double kFormTieRel = 1e-12;  // quadratic forms this close count as tied

bool is_finite(const Eigen::VectorXd& v) {
  return v.allFinite();
}

void canonicalize_sign(std::vector<long long>& a) {
  for (long long c : a) {
    if (c > 0) return;
    if (c < 0) break;
  }
  for (long long& c : a) c = -c;
}

// Tie order after sign canonicalization: compare components from the last
// down to the first. Matches the unit-vector convention (e_1 before e_2).
bool colex_less(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

ChannelState::ChannelState(const std::vector<double>& h_in, double snr_in,
                           double noise_variance_in)
    : h(Eigen::Map<const Eigen::VectorXd>(h_in.data(),
                                          static_cast<Eigen::Index>(h_in.size()))),
      snr(snr_in),
      noise_variance(noise_variance_in) {
  if (h.size() < 2)
    throw InvalidInputError("ChannelState: need at least two channel gains");
  if (!is_finite(h))
    throw InvalidInputError("ChannelState: channel gains must be finite");
  if (!(snr > 0.0) || !std::isfinite(snr))
    throw InvalidInputError("ChannelState: snr must be positive and finite");
  if (!(noise_variance > 0.0) || !std::isfinite(noise_variance))
    throw InvalidInputError("ChannelState: noise variance must be positive");
}

GramLattice::GramLattice(Eigen::MatrixXd g) : g_(std::move(g)) {
  if (g_.rows() < 2 || g_.rows() != g_.cols())
    throw InvalidInputError("GramLattice: matrix must be square, N >= 2");
  const double scale = g_.cwiseAbs().maxCoeff();
  if (!g_.allFinite() || !((g_ - g_.transpose()).cwiseAbs().maxCoeff() <=
                           1e-12 * std::max(scale, 1.0)))
    throw InvalidInputError("GramLattice: matrix must be finite and symmetric");
}

double GramLattice::quadratic_form(const std::vector<long long>& a) const {
  if (static_cast<int>(a.size()) != dimension())
    throw InvalidInputError("quadratic_form: dimension mismatch");
  double q = 0.0;
  for (int i = 0; i < dimension(); ++i)
    for (int j = 0; j < dimension(); ++j)
      q += g_(i, j) * static_cast<double>(a[i]) * static_cast<double>(a[j]);
  return q;
}

GramLattice build_gram(const ChannelState& ch) {
  const int n = ch.dimension();
  const double c = ch.snr / (1.0 + ch.snr * ch.h.squaredNorm());
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
  // Fill the upper triangle and mirror so symmetry is exact, not approximate.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = (i == j ? 1.0 : 0.0) - c * ch.h(i) * ch.h(j);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return GramLattice(std::move(g));
}

double computation_rate(const ChannelState& ch, const std::vector<long long>& a) {
  if (static_cast<int>(a.size()) != ch.dimension())
    throw InvalidInputError("computation_rate: dimension mismatch");
  double norm_a = 0.0;
  double h_dot_a = 0.0;
  bool nonzero = false;
  for (int i = 0; i < ch.dimension(); ++i) {
    const auto ai = static_cast<double>(a[i]);
    nonzero = nonzero || a[i] != 0;
    norm_a += ai * ai;
    h_dot_a += ch.h(i) * ai;
  }
  if (!nonzero)
    throw InvalidInputError("computation_rate: coefficient vector must be nonzero");
  const double q =
      norm_a - ch.snr * h_dot_a * h_dot_a / (1.0 + ch.snr * ch.h.squaredNorm());
  if (!(q > 0.0))
    throw NumericalError("computation_rate: quadratic form not positive");
  return -std::log2(q);
}

CoeffResult shortest_vector(const GramLattice& lat) {
  const int n = lat.dimension();
  Eigen::LLT<Eigen::MatrixXd> llt(lat.matrix());
  if (llt.info() != Eigen::Success)
    throw NumericalError("shortest_vector: Gram matrix is not positive definite");
  const Eigen::MatrixXd r = Eigen::MatrixXd(llt.matrixU());  // G = R^T R

  // Sphere enumeration over Z^n \ {0} in the form
  //   |R a|^2 = sum_i d_i (a_i + sum_{j>i} mu_ij a_j)^2.
  Eigen::VectorXd d(n);
  Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    d(i) = r(i, i) * r(i, i);
    for (int j = i + 1; j < n; ++j) mu(i, j) = r(i, j) / r(i, i);
  }

  // Initial radius: the best unit vector, inflated so rounding can never
  // exclude it and exact ties stay inside the sphere.
  double best_form = std::numeric_limits<double>::infinity();
  double radius = lat.matrix().diagonal().minCoeff() * (1.0 + 1e-9);

  std::vector<long long> x(n, 0), best;
  std::vector<long long> step(n, 0);
  std::vector<double> center(n, 0.0), dist(n, 0.0);

  auto enter_level = [&](int i) {
    // Start at the rounded center, first step toward the fractional side;
    // the zig-zag then visits integers in nondecreasing true distance.
    x[i] = std::llround(-center[i]);
    step[i] = (-center[i] >= static_cast<double>(x[i])) ? 1 : -1;
  };
  auto advance = [&](int i) {
    x[i] += step[i];
    step[i] = -step[i] - (step[i] > 0 ? 1 : -1);
  };
  auto consider = [&](double form) {
    bool take = false;
    if (form < best_form * (1.0 - kFormTieRel) || best.empty()) {
      take = true;  // strictly better beyond the tie window
    } else if (form <= best_form * (1.0 + kFormTieRel)) {
      std::vector<long long> cand = x;
      canonicalize_sign(cand);
      std::vector<long long> cur = best;
      canonicalize_sign(cur);
      if (colex_less(cand, cur)) {
        best = std::move(cand);
      }
      best_form = std::min(best_form, form);
    }
    if (take) {
      best = x;
      canonicalize_sign(best);
      best_form = form;
    }
    radius = best_form * (1.0 + 4.0 * kFormTieRel);
  };

  int i = n - 1;
  center[i] = 0.0;
  dist[i] = 0.0;
  enter_level(i);
  while (true) {
    const double offset = static_cast<double>(x[i]) + center[i];
    const double term = d(i) * offset * offset;
    if (dist[i] + term <= radius) {
      if (i == 0) {
        bool zero = true;
        for (long long c : x) zero = zero && c == 0;
        if (!zero) consider(dist[0] + term);
        advance(0);
      } else {
        dist[i - 1] = dist[i] + term;
        double c = 0.0;
        for (int j = i; j < n; ++j) c += mu(i - 1, j) * static_cast<double>(x[j]);
        center[i - 1] = c;
        --i;
        enter_level(i);
      }
    } else {
      // Zig-zag order is nondecreasing in the term, so this level is done.
      if (i == n - 1) break;
      ++i;
      advance(i);
    }
  }

  CoeffResult res;
  res.a = best;
  res.quadratic_form = lat.quadratic_form(best);
  res.rate_bits = -std::log2(res.quadratic_form);
  return res;
}

CoeffResult best_coefficients(const ChannelState& ch) {
  CoeffResult res = shortest_vector(build_gram(ch));
  res.rate_bits = computation_rate(ch, res.a);
  return res;
}

}  // namespace cf
