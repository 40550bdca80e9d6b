#include "matcat/report.hpp"

#include <sstream>

#include <json.hpp>

#include "matcat/errors.hpp"

namespace matcat {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (q == 0) {
    throw UsageError("config: q must be nonzero");
  }
  if (max_degree < 0 || max_dim < 0) {
    throw UsageError("config: bounds must be nonnegative");
  }
  if (probe_rows < 1) {
    throw UsageError("config: probe_rows must be at least 1");
  }
}

BaseCategory RunConfig::base() const { return BaseCategory{q, instance}; }

namespace {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

nlohmann::json config_json(const RunConfig& c) {
  return nlohmann::json{
      {"q", rat_to_string(c.q)},
      {"max_degree", c.max_degree},
      {"max_dim", c.max_dim},
      {"probe_rows", c.probe_rows},
      {"seed", c.seed},
      {"instance", c.instance == Instance::graded ? "graded" : "symmetric"},
      {"report_format", c.format == ReportFormat::json ? "json" : "text"},
  };
}

}  // namespace

std::string report_to_json(const RunConfig& config,
                           const std::vector<CheckReport>& checks,
                           bool include_elapsed) {
  nlohmann::json out;
  out["config"] = config_json(config);
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{
        {"check_id", c.check_id},
        {"paper_anchor", c.paper_anchor},
        {"status", to_string(c.status)},
    };
    if (c.witness) {
      j["witness"] = *c.witness;
    }
    if (include_elapsed) {
      j["elapsed_ms"] = c.elapsed_ms;
    }
    out["checks"].push_back(std::move(j));
  }
  return out.dump(2);
}

std::string report_to_text(const RunConfig& config,
                           const std::vector<CheckReport>& checks) {
  std::ostringstream os;
  os << "q=" << config.q << " degree<=" << config.max_degree << " dim<="
     << config.max_dim << " probes=" << config.probe_rows << " seed="
     << config.seed << " instance="
     << (config.instance == Instance::graded ? "graded" : "symmetric")
     << "\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : checks) {
    os << (c.status == Status::pass     ? "PASS "
           : c.status == Status::fail   ? "FAIL "
                                        : "SKIP ")
       << c.check_id << "  [" << c.paper_anchor << "]  (" << c.elapsed_ms
       << " ms)";
    if (c.witness) {
      os << "\n      witness: " << *c.witness;
    }
    os << "\n";
    (c.status == Status::pass     ? passed
     : c.status == Status::fail   ? failed
                                  : skipped)++;
  }
  os << passed << " passed, " << failed << " failed, " << skipped
     << " skipped\n";
  return os.str();
}

bool any_failed(const std::vector<CheckReport>& checks) {
  for (const auto& c : checks) {
    if (c.status == Status::fail) {
      return true;
    }
  }
  return false;
}

}  // namespace matcat
