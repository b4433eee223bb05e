#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace graphlearn {

/// Seedable deterministic random source.
///
/// Uniform doubles take the top 53 bits of the mt19937_64 stream; normal
/// variates use the Box-Muller cosine branch (two uniforms per draw, the
/// sine variate is discarded). Both the engine sequence and the variate
/// mappings are fixed, so a given seed produces the same stream on every
/// platform. std::*_distribution is avoided on purpose: its algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform on [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal, Box-Muller cosine branch.
  double normal() {
    const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(k_two_pi * u2);
  }

  /// Uniform integer on [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform01() * static_cast<double>(hi - lo + 1));
  }

 private:
  static constexpr double k_two_pi = 6.283185307179586476925286766559;
  std::mt19937_64 gen_;
};

}  // namespace graphlearn
