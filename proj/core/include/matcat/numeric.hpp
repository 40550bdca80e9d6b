#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace matcat {

// Exact arithmetic throughout: indices of the ambient index space grow
// quadratically under the pairing bijection and scalars pick up powers of q,
// so both need arbitrary precision.
using Nat = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// q^e for integer e (negative allowed); q must be nonzero for e < 0.
Rat pow_rat(const Rat& q, long e);

/// Largest n with n*n <= v (v >= 0).
Nat isqrt(const Nat& v);

}  // namespace matcat
