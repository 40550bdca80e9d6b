#include "matcat/numeric.hpp"

#include <stdexcept>

namespace matcat {

Rat pow_rat(const Rat& q, long e) {
  if (e == 0) {
    return Rat(1);
  }
  if (q == 0 && e < 0) {
    throw std::domain_error("pow_rat: negative power of zero");
  }
  Rat base = e > 0 ? q : Rat(1) / q;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (n != 0) {
    if (n & 1) {
      acc *= base;
    }
    base *= base;
    n >>= 1;
  }
  return acc;
}

Nat isqrt(const Nat& v) {
  if (v < 0) {
    throw std::domain_error("isqrt: negative argument");
  }
  return boost::multiprecision::sqrt(v);
}

}  // namespace matcat
