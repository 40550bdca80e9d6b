#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matcat/graded.hpp"

namespace matcat {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

/// Outcome of one machine-verified identity. paper_anchor locates the claim
/// being checked (section, equation or figure label); failures always carry
/// a witness naming the first offending row.
struct CheckReport {
  std::string check_id;
  std::string paper_anchor;
  Status status = Status::pass;
  std::optional<std::string> witness;
  std::int64_t elapsed_ms = 0;
};

enum class ReportFormat { json, text };

/// Run parameters shared by every suite. The seed drives all probe
/// sampling; identical config and seed give identical reports (timings
/// aside).
struct RunConfig {
  Rat q = 2;
  long max_degree = 2;
  long max_dim = 2;
  long probe_rows = 25;
  std::uint64_t seed = 1;
  Instance instance = Instance::graded;
  ReportFormat format = ReportFormat::text;

  void validate() const;  // throws UsageError
  BaseCategory base() const;
};

/// JSON report {config, checks:[...]}. elapsed_ms can be suppressed for
/// byte-stable comparisons.
std::string report_to_json(const RunConfig& config,
                           const std::vector<CheckReport>& checks,
                           bool include_elapsed = true);
std::string report_to_text(const RunConfig& config,
                           const std::vector<CheckReport>& checks);
bool any_failed(const std::vector<CheckReport>& checks);

}  // namespace matcat
