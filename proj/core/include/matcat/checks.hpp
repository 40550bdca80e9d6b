#pragma once

#include "matcat/bialgebra.hpp"
#include "matcat/report.hpp"

namespace matcat {

enum class Target { base, matcat, coherence, bialgebra, all };

Target parse_target(const std::string& name);  // throws UsageError

/// Invariant suites of the individual layers. Deterministic under the
/// config's seed; each report carries its paper anchor.
std::vector<CheckReport> base_suite(const RunConfig& config);
std::vector<CheckReport> matcat_suite(const RunConfig& config);
std::vector<CheckReport> coherence_suite(const RunConfig& config);
std::vector<CheckReport> bialgebra_suite(const RunConfig& config,
                                         const BialgebraOptions& opts = {});

/// The eight core checks of the bialgebra structure, in order:
/// multiplication pentagon, algebra associativity, unit laws,
/// coassociativity, counit laws, product compatibility, counit
/// multiplicativity, module axioms.
std::vector<CheckReport> verify_suite(const RunConfig& config,
                                      const BialgebraOptions& opts = {});

std::vector<CheckReport> run_suite(Target target, const RunConfig& config);

}  // namespace matcat
