#pragma once

#include <chrono>
#include <functional>
#include <sstream>

#include "matcat/report.hpp"

namespace matcat::detail {

/// Runs a check body that returns an empty string on success and a witness
/// description on failure.
inline CheckReport run_check(const std::string& id, const std::string& anchor,
                             const std::function<std::string()>& body) {
  CheckReport r{id, anchor, Status::pass, std::nullopt, 0};
  const auto t0 = std::chrono::steady_clock::now();
  const std::string witness = body();
  const auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (!witness.empty()) {
    r.status = Status::fail;
    r.witness = witness;
  }
  return r;
}

inline CheckReport skip_check(const std::string& id, const std::string& anchor,
                              const std::string& reason) {
  CheckReport r{id, anchor, Status::skipped, reason, 0};
  return r;
}

inline std::string graded_diff(const GradedMorphism& lhs,
                               const GradedMorphism& rhs,
                               const std::string& context) {
  if (lhs == rhs) {
    return "";
  }
  std::ostringstream os;
  os << context << ": " << lhs.to_string() << " vs " << rhs.to_string();
  return os.str();
}

}  // namespace matcat::detail
