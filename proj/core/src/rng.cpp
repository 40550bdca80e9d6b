#include "matcat/rng.hpp"

#include <stdexcept>

namespace matcat {

std::size_t Rng::uniform(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("Rng::uniform: empty range");
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(uniform(static_cast<std::size_t>(hi - lo + 1)));
}

bool Rng::chance(double p) {
  const double x = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return x < p;
}

}  // namespace matcat
