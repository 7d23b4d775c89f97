#pragma once

// Seeded randomness for the Monte Carlo layer.
//
// SplitMix64 is a counter-based generator (Steele/Lea/Flood): the state
// advances by a fixed odd constant and the output is a bijective bit mix of
// the counter. Substreams are derived purely from (seed, point index, trial
// index), so trial outcomes never depend on scheduling or thread identity.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cf {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 output function (stateless bit mix, bijective on uint64).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  constexpr result_type operator()() { return mix64(state_ += kGolden); }

 private:
  std::uint64_t state_;
};

// Substream state for sweep point `point`, trial `trial`:
// a mix chain over the triple, collision-resistant and order-sensitive.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t point,
                                       std::uint64_t trial) {
  std::uint64_t s = mix64(seed + kGolden);
  s = mix64(s ^ (point + 0xD1B54A32D192ED03ull));
  s = mix64(s ^ (trial + 0x8CB92BA72F3D8DD7ull));
  return s;
}

// Deterministic sampling on top of SplitMix64. Gaussians come from an
// explicit Box-Muller transform (pairwise, spare cached) so the draw
// sequence is pinned by this header, not by a library's distribution.
class Sampler {
 public:
  explicit Sampler(std::uint64_t state) : eng_(state) {}

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Standard normal.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]: keeps log() finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Uniform symbol on {-s_m, ..., s_m}.
  long long symbol(int s_m) {
    const long long n = 2ll * s_m + 1;
    auto k = static_cast<long long>(uniform() * static_cast<double>(n));
    if (k >= n) k = n - 1;  // guards the u == 1-ulp edge
    return k - s_m;
  }

 private:
  SplitMix64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cf
