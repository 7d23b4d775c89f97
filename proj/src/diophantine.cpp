#include "cf/diophantine.hpp"

#include <algorithm>
#include <limits>

namespace cf {

namespace {

long long floor_div(long long num, long long den) {
  long long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

long long ceil_div(long long num, long long den) {
  long long q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

// Intersects {k : c*k in [lo, hi]} into `range`. Exact integer arithmetic;
// off-by-one here silently corrupts the decoder, so no floating point.
void constrain(KRange& range, long long c, long long lo, long long hi) {
  if (c == 0) {
    if (lo > 0 || hi < 0) range = KRange{0, -1};  // unsatisfiable
    return;
  }
  long long k_lo, k_hi;
  if (c > 0) {
    k_lo = ceil_div(lo, c);
    k_hi = floor_div(hi, c);
  } else {
    k_lo = ceil_div(hi, c);
    k_hi = floor_div(lo, c);
  }
  range.lo = std::max(range.lo, k_lo);
  range.hi = std::min(range.hi, k_hi);
}

}  // namespace

EquationCoeffs extended_gcd(long long a1, long long a2) {
  if (a1 == 0 && a2 == 0)
    throw InvalidInputError("extended_gcd: coefficients must not both be zero");

  // Iterative extended Euclid on the raw (possibly negative) inputs keeps
  // the identity a1*u1 + a2*u2 = r exact at every step; the final sign fix
  // makes g positive.
  long long old_r = a1, r = a2;
  long long old_s = 1, s = 0;
  long long old_t = 0, t = 1;
  while (r != 0) {
    const long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return EquationCoeffs{a1, a2, old_r, old_s, old_t};
}

std::pair<long long, long long> solution_family(const EquationCoeffs& coeffs,
                                                long long lambda, long long k) {
  if (lambda % coeffs.g != 0)
    throw NoSolutionError("solution_family: lambda is not a multiple of gcd");
  const long long m = lambda / coeffs.g;
  const long long x1 = coeffs.u1 * m + (coeffs.a2 / coeffs.g) * k;
  const long long x2 = coeffs.u2 * m - (coeffs.a1 / coeffs.g) * k;
  return {x1, x2};
}

KRange feasible_k_range(const EquationCoeffs& coeffs, long long lambda,
                        const Constellation& cons) {
  if (lambda % coeffs.g != 0)
    throw NoSolutionError("feasible_k_range: lambda is not a multiple of gcd");
  const long long m = lambda / coeffs.g;
  const long long sm = cons.s_m;

  KRange range{std::numeric_limits<long long>::min() / 4,
               std::numeric_limits<long long>::max() / 4};
  // |u1*m + (a2/g)*k| <= s_m and |u2*m - (a1/g)*k| <= s_m
  constrain(range, coeffs.a2 / coeffs.g, -sm - coeffs.u1 * m, sm - coeffs.u1 * m);
  constrain(range, -(coeffs.a1 / coeffs.g), -sm - coeffs.u2 * m, sm - coeffs.u2 * m);
  if (range.empty()) return KRange{0, -1};
  return range;
}

std::vector<long long> lambda_alphabet(const EquationCoeffs& coeffs,
                                       const Constellation& cons) {
  std::vector<long long> values;
  values.reserve(static_cast<std::size_t>(cons.size()) * cons.size());
  for (long long x1 = -cons.s_m; x1 <= cons.s_m; ++x1)
    for (long long x2 = -cons.s_m; x2 <= cons.s_m; ++x2)
      values.push_back(coeffs.a1 * x1 + coeffs.a2 * x2);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace cf
