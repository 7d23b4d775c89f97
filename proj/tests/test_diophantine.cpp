#include <doctest.h>

#include <algorithm>
#include <set>

#include "cf/diophantine.hpp"
#include "cf/rng.hpp"

using cf::Constellation;
using cf::EquationCoeffs;
using cf::KRange;

namespace {

// Scan a generously wide k window; reference for feasible_k_range.
std::set<long long> scan_feasible(const EquationCoeffs& coeffs, long long lambda,
                                  const Constellation& cons, long long window) {
  std::set<long long> ks;
  for (long long k = -window; k <= window; ++k) {
    const auto [x1, x2] = cf::solution_family(coeffs, lambda, k);
    if (cons.contains(x1) && cons.contains(x2)) ks.insert(k);
  }
  return ks;
}

}  // namespace

TEST_SUITE("diophantine") {

TEST_CASE("extended_gcd satisfies the Bezout identity on the examples") {
  const auto c1 = cf::extended_gcd(2, -1);
  CHECK(c1.g == 1);
  CHECK(2 * c1.u1 - c1.u2 == 1);

  const auto c2 = cf::extended_gcd(4, 6);
  CHECK(c2.g == 2);
  CHECK(4 * c2.u1 + 6 * c2.u2 == 2);

  const auto c3 = cf::extended_gcd(0, -5);
  CHECK(c3.g == 5);
  CHECK(c3.u1 == 0);
  CHECK(c3.u2 == -1);

  const auto c4 = cf::extended_gcd(-7, 0);
  CHECK(c4.g == 7);
  CHECK(c4.u1 == -1);
  CHECK(c4.u2 == 0);
}

TEST_CASE("extended_gcd rejects (0, 0)") {
  CHECK_THROWS_AS(cf::extended_gcd(0, 0), cf::InvalidInputError);
}

TEST_CASE("Bezout identity holds exactly for random large coefficients") {
  cf::Sampler rng(cf::substream_seed(31, 0, 0));
  for (int trial = 0; trial < 100000; ++trial) {
    const long long a1 = rng.symbol(1000000);
    const long long a2 = rng.symbol(1000000);
    if (a1 == 0 && a2 == 0) continue;
    const auto c = cf::extended_gcd(a1, a2);
    REQUIRE(c.g > 0);
    REQUIRE(a1 * c.u1 + a2 * c.u2 == c.g);
    REQUIRE(a1 % c.g == 0);
    REQUIRE(a2 % c.g == 0);
  }
}

TEST_CASE("solution_family reproduces the worked instance") {
  // a = (2, -1) with the particular solution (1, 1); lambda = -7, k = -5.
  const EquationCoeffs coeffs{2, -1, 1, 1, 1};
  const auto [x1, x2] = cf::solution_family(coeffs, -7, -5);
  CHECK(x1 == -2);
  CHECK(x2 == 3);
}

TEST_CASE("solution_family maps (lambda=0, k=0) to the origin") {
  const auto coeffs = cf::extended_gcd(3, 7);
  const auto [x1, x2] = cf::solution_family(coeffs, 0, 0);
  CHECK(x1 == 0);
  CHECK(x2 == 0);
}

TEST_CASE("solution_family satisfies the equation by substitution") {
  const auto coeffs = cf::extended_gcd(4, 6);
  const auto [x1, x2] = cf::solution_family(coeffs, 10, 1);
  CHECK(4 * x1 + 6 * x2 == 10);

  cf::Sampler rng(cf::substream_seed(32, 0, 0));
  for (int trial = 0; trial < 20000; ++trial) {
    const long long a1 = rng.symbol(200);
    const long long a2 = rng.symbol(200);
    if (a1 == 0 && a2 == 0) continue;
    const auto c = cf::extended_gcd(a1, a2);
    const long long lambda = c.g * rng.symbol(100);
    const long long k = rng.symbol(100);
    const auto [u, v] = cf::solution_family(c, lambda, k);
    REQUIRE(a1 * u + a2 * v == lambda);
  }
}

TEST_CASE("solution_family rejects lambda outside the gcd lattice") {
  const auto coeffs = cf::extended_gcd(4, 6);
  CHECK_THROWS_AS(cf::solution_family(coeffs, 7, 0), cf::NoSolutionError);
  CHECK_THROWS_AS(cf::feasible_k_range(coeffs, 7, Constellation(5)),
                  cf::NoSolutionError);
}

TEST_CASE("family completeness: every grid solution is reached by some k") {
  for (long long a1 = -5; a1 <= 5; ++a1) {
    for (long long a2 = -5; a2 <= 5; ++a2) {
      if (a1 == 0 && a2 == 0) continue;
      const auto coeffs = cf::extended_gcd(a1, a2);
      const Constellation cons(5);
      for (long long x1 = -5; x1 <= 5; ++x1) {
        for (long long x2 = -5; x2 <= 5; ++x2) {
          const long long lambda = a1 * x1 + a2 * x2;
          const KRange range = cf::feasible_k_range(coeffs, lambda, cons);
          bool reached = false;
          for (long long k = range.lo; k <= range.hi && !reached; ++k)
            reached = cf::solution_family(coeffs, lambda, k) ==
                      std::pair<long long, long long>{x1, x2};
          REQUIRE(reached);
        }
      }
    }
  }
}

TEST_CASE("feasible_k_range matches the worked instance") {
  const EquationCoeffs coeffs{2, -1, 1, 1, 1};
  const Constellation cons(5);
  const KRange range = cf::feasible_k_range(coeffs, -7, cons);
  CHECK(range.contains(-5));  // (x1, x2) = (-2, 3)
  const auto ref = scan_feasible(coeffs, -7, cons, 100);
  CHECK(range.lo == *ref.begin());
  CHECK(range.hi == *ref.rbegin());
  CHECK(range.count() == static_cast<long long>(ref.size()));
}

TEST_CASE("feasible_k_range enumerates exactly the ternary zero-sum pairs") {
  const auto coeffs = cf::extended_gcd(1, 1);
  const Constellation cons(1);
  const KRange range = cf::feasible_k_range(coeffs, 0, cons);
  std::set<std::pair<long long, long long>> sols;
  for (long long k = range.lo; k <= range.hi; ++k)
    sols.insert(cf::solution_family(coeffs, 0, k));
  CHECK(sols == std::set<std::pair<long long, long long>>{
                    {-1, 1}, {0, 0}, {1, -1}});
}

TEST_CASE("feasible_k_range finds exactly one k at the corner value") {
  const auto coeffs = cf::extended_gcd(3, 2);
  const Constellation cons(4);
  const long long lambda = 3 * 4 + 2 * 4;
  const KRange range = cf::feasible_k_range(coeffs, lambda, cons);
  CHECK(range.count() == 1);
  CHECK(cf::solution_family(coeffs, lambda, range.lo) ==
        std::pair<long long, long long>{4, 4});
}

TEST_CASE("feasible_k_range reports an empty interval when nothing fits") {
  const auto coeffs = cf::extended_gcd(2, 0);
  const Constellation cons(5);
  const KRange range = cf::feasible_k_range(coeffs, 2 * 6, cons);  // x1 = 6 > s_m
  CHECK(range.empty());
  CHECK(range.count() == 0);
}

TEST_CASE("feasible_k_range equals a brute-force window scan") {
  cf::Sampler rng(cf::substream_seed(33, 0, 0));
  for (int trial = 0; trial < 5000; ++trial) {
    const long long a1 = rng.symbol(8);
    const long long a2 = rng.symbol(8);
    if (a1 == 0 && a2 == 0) continue;
    const auto coeffs = cf::extended_gcd(a1, a2);
    const Constellation cons(1 + static_cast<int>(rng.uniform() * 8.0));
    const long long lambda = coeffs.g * rng.symbol(30);
    const KRange range = cf::feasible_k_range(coeffs, lambda, cons);
    const auto ref = scan_feasible(coeffs, lambda, cons, 400);
    if (ref.empty()) {
      REQUIRE(range.empty());
    } else {
      REQUIRE(range.lo == *ref.begin());
      REQUIRE(range.hi == *ref.rbegin());
      REQUIRE(range.count() == static_cast<long long>(ref.size()));
    }
  }
}

TEST_CASE("lambda_alphabet projects an axis equation onto the symbol set") {
  const auto values = cf::lambda_alphabet(cf::extended_gcd(1, 0), Constellation(2));
  CHECK(values == std::vector<long long>{-2, -1, 0, 1, 2});
}

TEST_CASE("lambda_alphabet for the worked coefficients covers -7") {
  const auto values = cf::lambda_alphabet(cf::extended_gcd(2, -1), Constellation(5));
  CHECK(std::binary_search(values.begin(), values.end(), -7));
  CHECK(values.front() >= -15);
  CHECK(values.back() <= 15);
}

TEST_CASE("lambda_alphabet of a ternary sum is the five-point set") {
  const auto values = cf::lambda_alphabet(cf::extended_gcd(1, 1), Constellation(1));
  CHECK(values == std::vector<long long>{-2, -1, 0, 1, 2});
}

TEST_CASE("lambda_alphabet members are gcd multiples, count bounded by the grid") {
  cf::Sampler rng(cf::substream_seed(34, 0, 0));
  for (int trial = 0; trial < 2000; ++trial) {
    const long long a1 = rng.symbol(9);
    const long long a2 = rng.symbol(9);
    if (a1 == 0 && a2 == 0) continue;
    const auto coeffs = cf::extended_gcd(a1, a2);
    const Constellation cons(1 + static_cast<int>(rng.uniform() * 6.0));
    const auto values = cf::lambda_alphabet(coeffs, cons);
    REQUIRE(std::is_sorted(values.begin(), values.end()));
    REQUIRE(static_cast<long long>(values.size()) <=
            static_cast<long long>(cons.size()) * cons.size());
    for (long long v : values) REQUIRE(v % coeffs.g == 0);
  }
}

TEST_CASE("constellation membership and energy") {
  const Constellation cons(5);
  CHECK(cons.avg_energy == doctest::Approx(10.0));
  CHECK(cons.contains(5));
  CHECK(cons.contains(-5));
  CHECK(!cons.contains(6));
  CHECK_THROWS_AS(Constellation(0), cf::InvalidInputError);
}

}  // TEST_SUITE
