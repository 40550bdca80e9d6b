#include "matcat/checks.hpp"
#include "matcat/errors.hpp"

namespace matcat {

Target parse_target(const std::string& name) {
  if (name == "base") {
    return Target::base;
  }
  if (name == "matcat") {
    return Target::matcat;
  }
  if (name == "coherence") {
    return Target::coherence;
  }
  if (name == "bialgebra") {
    return Target::bialgebra;
  }
  if (name == "all") {
    return Target::all;
  }
  throw UsageError("unknown target '" + name +
                   "' (expected base|matcat|coherence|bialgebra|all)");
}

std::vector<CheckReport> run_suite(Target target, const RunConfig& config) {
  config.validate();
  std::vector<CheckReport> out;
  const auto append = [&out](std::vector<CheckReport> more) {
    for (auto& r : more) {
      out.push_back(std::move(r));
    }
  };
  switch (target) {
    case Target::base:
      append(base_suite(config));
      break;
    case Target::matcat:
      append(matcat_suite(config));
      break;
    case Target::coherence:
      append(coherence_suite(config));
      break;
    case Target::bialgebra:
      append(bialgebra_suite(config));
      break;
    case Target::all:
      append(base_suite(config));
      append(matcat_suite(config));
      append(coherence_suite(config));
      append(bialgebra_suite(config));
      break;
  }
  return out;
}

}  // namespace matcat
