#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace matcat {

/// Deterministic pseudo-random source. mt19937_64 has a standardized output
/// sequence and all reductions here are explicit, so probe selections are
/// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n) by rejection; n > 0.
  std::size_t uniform(std::size_t n);

  /// Uniform in [lo, hi] inclusive.
  long range(long lo, long hi);

  bool chance(double p);  // p in [0, 1], compared against 53-bit fraction

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[uniform(xs.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace matcat
