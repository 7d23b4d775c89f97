#pragma once

// Integer side of the relay: the linear Diophantine equation
// a1*x1 + a2*x2 = lambda over a finite symbol set.

#include <cstdint>
#include <vector>

#include "cf/errors.hpp"

namespace cf {

// Symbol set S = {-s_m, ..., s_m} of unit-spaced integers.
struct Constellation {
  int s_m;
  double avg_energy;  // mean square of the uniform distribution on S: s_m(s_m+1)/3

  explicit Constellation(int s_m_in)
      : s_m(s_m_in),
        avg_energy(static_cast<double>(s_m_in) * (s_m_in + 1) / 3.0) {
    if (s_m_in < 1) throw InvalidInputError("Constellation: s_m must be >= 1");
  }

  bool contains(long long x) const { return x >= -s_m && x <= s_m; }
  int size() const { return 2 * s_m + 1; }
};

// Coefficients of the equation plus a Bezout particular solution:
// a1*u1 + a2*u2 = g = gcd(|a1|, |a2|) > 0.
struct EquationCoeffs {
  long long a1 = 0;
  long long a2 = 0;
  long long g = 0;
  long long u1 = 0;
  long long u2 = 0;
};

// Closed interval of integers; lo > hi means empty.
struct KRange {
  long long lo = 0;
  long long hi = -1;

  bool empty() const { return lo > hi; }
  long long count() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(long long k) const { return k >= lo && k <= hi; }
};

// Extended Euclid. Throws InvalidInputError on (0, 0).
EquationCoeffs extended_gcd(long long a1, long long a2);

// One member of the solution family, parametrized by integer k:
//   x1 = (u1/g)*lambda + (a2/g)*k,  x2 = (u2/g)*lambda - (a1/g)*k.
// Throws NoSolutionError when g does not divide lambda.
std::pair<long long, long long> solution_family(const EquationCoeffs& coeffs,
                                                long long lambda, long long k);

// Exact set {k : solution_family(coeffs, lambda, k) lands in S x S}, always
// an interval of consecutive integers. Throws NoSolutionError when g does
// not divide lambda. Uses exact integer floor/ceil division throughout.
KRange feasible_k_range(const EquationCoeffs& coeffs, long long lambda,
                        const Constellation& cons);

// Sorted, deduplicated set {a1*x1 + a2*x2 : (x1, x2) in S x S}.
std::vector<long long> lambda_alphabet(const EquationCoeffs& coeffs,
                                       const Constellation& cons);

}  // namespace cf
