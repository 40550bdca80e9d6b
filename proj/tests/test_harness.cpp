#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "matcat/checks.hpp"
#include "matcat/errors.hpp"

using namespace matcat;

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.q = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.q = 2;
  cfg.probe_rows = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.probe_rows = 5;
  cfg.max_degree = -1;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  CHECK_THROWS_AS(parse_target("nonsense"), UsageError);
}

TEST_CASE("reports are deterministic under a fixed seed") {
  RunConfig cfg;
  cfg.probe_rows = 6;
  cfg.seed = 99;
  const auto r1 = run_suite(Target::base, cfg);
  const auto r2 = run_suite(Target::base, cfg);
  CHECK(report_to_json(cfg, r1, /*include_elapsed=*/false) ==
        report_to_json(cfg, r2, /*include_elapsed=*/false));

  RunConfig other = cfg;
  other.seed = 100;
  const auto r3 = run_suite(Target::base, other);
  // same checks run, whatever the seed
  REQUIRE(r1.size() == r3.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].check_id == r3[i].check_id);
  }
}

TEST_CASE("json report carries the documented schema") {
  RunConfig cfg;
  cfg.probe_rows = 4;
  const auto reports = run_suite(Target::coherence, cfg);
  const auto parsed =
      nlohmann::json::parse(report_to_json(cfg, reports));
  REQUIRE(parsed.contains("config"));
  REQUIRE(parsed.contains("checks"));
  const auto& config = parsed["config"];
  for (const char* key : {"q", "max_degree", "max_dim", "probe_rows", "seed",
                          "instance", "report_format"}) {
    CHECK(config.contains(key));
  }
  REQUIRE(!parsed["checks"].empty());
  for (const auto& c : parsed["checks"]) {
    CHECK(c.contains("check_id"));
    CHECK(c.contains("paper_anchor"));
    CHECK(c.contains("status"));
    CHECK(c.contains("elapsed_ms"));
    CHECK_FALSE(c["paper_anchor"].get<std::string>().empty());
    if (c["status"] == "fail") {
      CHECK(c.contains("witness"));
    }
  }
}

#ifdef MATCAT_SOURCE_DIR
TEST_CASE("every anchor resolves to an entry in the identities document") {
  std::ifstream doc(std::string(MATCAT_SOURCE_DIR) + "/docs/identities.md");
  REQUIRE(doc.good());
  std::stringstream buf;
  buf << doc.rdbuf();
  const std::string text = buf.str();

  RunConfig cfg;
  cfg.probe_rows = 2;
  std::set<std::string> anchors;
  for (const auto& r : run_suite(Target::all, cfg)) {
    anchors.insert(r.paper_anchor);
  }
  for (const std::string& a : anchors) {
    INFO("anchor: " << a);
    CHECK(text.find("`" + a + "`") != std::string::npos);
  }
}
#endif

TEST_CASE("verify_suite runs the eight core checks in order") {
  RunConfig cfg;
  cfg.probe_rows = 4;
  const auto reports = verify_suite(cfg);
  REQUIRE(reports.size() == 8);
  const char* expected[] = {
      "bialgebra.gamma_pentagon",   "bialgebra.associativity",
      "bialgebra.unit_laws",        "bialgebra.coassociativity",
      "bialgebra.counit_laws",      "bialgebra.product_compat",
      "bialgebra.counit_multiplicative", "bialgebra.module_axioms"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].check_id == expected[i]);
    CHECK(reports[i].status == Status::pass);
  }
}

TEST_CASE("suites pass across q values and instances") {
  for (const Rat& q : {Rat(1), Rat(3)}) {
    RunConfig cfg;
    cfg.q = q;
    cfg.probe_rows = 4;
    CHECK_FALSE(any_failed(run_suite(Target::bialgebra, cfg)));
  }
  RunConfig sym;
  sym.instance = Instance::symmetric;
  sym.probe_rows = 4;
  CHECK_FALSE(any_failed(run_suite(Target::base, sym)));
}

TEST_CASE("failing checks surface row witnesses in the report") {
  RunConfig cfg;
  cfg.probe_rows = 6;
  BialgebraOptions sabotage;
  sabotage.gamma_as_identity = true;
  const auto reports = verify_suite(cfg, sabotage);
  bool assoc_failed = false, compat_failed = false;
  for (const auto& r : reports) {
    if (r.status == Status::fail) {
      REQUIRE(r.witness.has_value());
      CHECK_FALSE(r.witness->empty());
      if (r.check_id == "bialgebra.associativity") {
        assoc_failed = true;
      }
      if (r.check_id == "bialgebra.product_compat") {
        compat_failed = true;
      }
    }
  }
  CHECK(assoc_failed);
  CHECK(compat_failed);
}
