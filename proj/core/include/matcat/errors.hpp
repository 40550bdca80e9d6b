#pragma once

#include <stdexcept>
#include <string>

namespace matcat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A composition, addition or comparison was attempted between morphisms
/// whose endpoints do not match.
struct DomainMismatchError : Error {
  using Error::Error;
};

/// A per-degree block had the wrong shape for its endpoints.
struct ShapeMismatchError : Error {
  using Error::Error;
};

/// An index was used outside the index set it was claimed to belong to.
struct MembershipError : Error {
  using Error::Error;
};

/// Coproduct summands with overlapping index sets.
struct DisjointnessError : Error {
  using Error::Error;
};

/// Coevaluation requested on an object with infinite domain: the candidate
/// row at the unit point would have infinite support.
struct DualityObstructionError : Error {
  using Error::Error;
};

/// No coherence isomorphism exists between two tensor words (their non-unit
/// frontiers differ).
struct NoCoherenceError : Error {
  using Error::Error;
};

/// Invalid configuration or command-line usage.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace matcat
