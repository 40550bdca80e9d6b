// Command-line front end: runs the verification suites and prints rows of
// the structure morphisms.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matcat/checks.hpp"
#include "matcat/errors.hpp"

namespace {

using namespace matcat;

Rat parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rat(Nat(s));
    }
    const Nat num(s.substr(0, slash));
    const Nat den(s.substr(slash + 1));
    if (den == 0) {
      throw UsageError("rational with zero denominator: " + s);
    }
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw UsageError("cannot parse rational '" + s + "'");
  }
}

struct CommonFlags {
  std::string q = "2";
  long max_degree = 2;
  long max_dim = 2;
  long probes = 25;
  std::uint64_t seed = 1;
  std::string instance = "graded";
  std::string format = "text";

  RunConfig config() const {
    RunConfig c;
    c.q = parse_rational(q);
    c.max_degree = max_degree;
    c.max_dim = max_dim;
    c.probe_rows = probes;
    c.seed = seed;
    if (const char* env = std::getenv("MATCAT_SEED")) {
      try {
        c.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("MATCAT_SEED is not a number: " + std::string(env));
      }
    }
    if (instance == "graded") {
      c.instance = Instance::graded;
    } else if (instance == "symmetric") {
      c.instance = Instance::symmetric;
    } else {
      throw UsageError("unknown instance '" + instance +
                       "' (expected graded|symmetric)");
    }
    if (format == "json") {
      c.format = ReportFormat::json;
    } else if (format == "text") {
      c.format = ReportFormat::text;
    } else {
      throw UsageError("unknown format '" + format + "' (expected json|text)");
    }
    c.validate();
    return c;
  }
};

void add_common_flags(CLI::App* app, CommonFlags& f) {
  app->add_option("--q", f.q, "braiding parameter, integer or p/q");
  app->add_option("--max-degree", f.max_degree, "degree bound for probes");
  app->add_option("--max-dim", f.max_dim, "dimension bound for probes");
  app->add_option("--probes", f.probes, "probe rows per check");
  app->add_option("--seed", f.seed,
                  "probe sampling seed (MATCAT_SEED overrides)");
  app->add_option("--instance", f.instance, "base instance: graded|symmetric");
  app->add_option("--format", f.format, "report format: json|text");
}

// ---------------------------------------------------------------------------
// eval: named structure morphisms and their composites

struct EvalContext {
  Bialgebra bi;
  MatObject H;
  MatObject HH;
  GradedObject fiber;  // module fiber used for the action

  explicit EvalContext(const RunConfig& cfg)
      : bi(make_bialgebra(cfg.base())),
        H(bi.object),
        HH(MatObject::tensor(bi.object, bi.object)),
        fiber(GradedObject::line(1, 1)) {}

  MatMorphism atom(const std::string& name) const {
    const BaseCategory& base = bi.base;
    if (name == "mu") return bi.mu.mor;
    if (name == "eta") return bi.eta.mor;
    if (name == "delta") return bi.delta.mor;
    if (name == "epsilon") return bi.epsilon.mor;
    if (name == "mu_hat") return bi.mu_hat.mor;
    if (name == "Id") return mat_id(H);
    if (name == "A") return mat_assoc(H, H, H, Dir::forward);
    if (name == "A_inv") return mat_assoc(H, H, H, Dir::inverse);
    if (name == "C") return mat_braid(base, H, H, Dir::forward);
    if (name == "C_inv") return mat_braid(base, H, H, Dir::inverse);
    if (name == "Theta") return mat_twist(base, H);
    if (name == "R") return mat_unit(H, UnitSide::right, Dir::forward);
    if (name == "R_inv") return mat_unit(H, UnitSide::right, Dir::inverse);
    if (name == "L") return mat_unit(H, UnitSide::left, Dir::forward);
    if (name == "L_inv") return mat_unit(H, UnitSide::left, Dir::inverse);
    if (name == "T") return bi.action(fiber).mor;
    throw UsageError("unknown morphism '" + name +
                     "' (expected mu|eta|delta|epsilon|mu_hat|A|A_inv|C|C_inv|"
                     "Theta|R|R_inv|L|L_inv|T|Id)");
  }
};

std::vector<std::string> split_expr(const std::string& expr) {
  // Composition may be spelled with the ring operator or a dot.
  static const std::string ring = "∘";
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < expr.size();) {
    if (expr.compare(i, ring.size(), ring) == 0) {
      parts.push_back(cur);
      cur.clear();
      i += ring.size();
    } else if (expr[i] == '.') {
      parts.push_back(cur);
      cur.clear();
      ++i;
    } else {
      cur += expr[i++];
    }
  }
  parts.push_back(cur);
  for (auto& p : parts) {
    const auto b = p.find_first_not_of(" \t");
    const auto e = p.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw UsageError("empty factor in expression '" + expr + "'");
    }
    p = p.substr(b, e - b + 1);
  }
  return parts;
}

MatMorphism build_expression(const EvalContext& ctx, const std::string& expr) {
  const std::vector<std::string> names = split_expr(expr);
  // Rightmost factor applies first.
  MatMorphism acc = ctx.atom(names.back());
  for (std::size_t i = names.size() - 1; i-- > 0;) {
    acc = mat_compose(ctx.atom(names[i]), acc);
  }
  return acc;
}

nlohmann::json entry_json(const GradedMorphism& m) {
  nlohmann::json blocks = nlohmann::json::object();
  for (const auto& [d, block] : m.blocks()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < block.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < block.cols(); ++j) {
        std::ostringstream os;
        os << block.at(i, j);
        row.push_back(os.str());
      }
      rows.push_back(std::move(row));
    }
    blocks[std::to_string(d)] = std::move(rows);
  }
  return blocks;
}

int run_eval(const CommonFlags& flags, const std::string& expr,
             const std::string& row_str, std::ostream& os) {
  const RunConfig cfg = flags.config();
  const EvalContext ctx(cfg);
  const MatMorphism m = build_expression(ctx, expr);
  Nat row;
  try {
    row = Nat(row_str);
  } catch (const std::runtime_error&) {
    throw UsageError("cannot parse row index '" + row_str + "'");
  }
  const MatRow r = m.row(row);
  if (cfg.format == ReportFormat::json) {
    nlohmann::json out;
    out["expr"] = expr;
    out["row"] = row.str();
    out["support"] = nlohmann::json::array();
    for (const auto& [y, entry] : r) {
      out["support"].push_back({{"index", y.str()},
                                {"src", entry.src().to_string()},
                                {"dst", entry.dst().to_string()},
                                {"blocks", entry_json(entry)}});
    }
    os << out.dump(2) << "\n";
  } else {
    os << expr << " @ row " << row << ": support size " << r.size() << "\n";
    for (const auto& [y, entry] : r) {
      os << "  -> " << y << ": " << entry.to_string() << "\n";
    }
  }
  return 0;
}

BialgebraOptions parse_sabotage(const std::string& name) {
  BialgebraOptions opts;
  if (name.empty() || name == "none") {
    return opts;
  }
  if (name == "gamma-identity") {
    opts.gamma_as_identity = true;
    return opts;
  }
  if (name == "drop-braiding") {
    opts.mu_hat_without_braiding = true;
    return opts;
  }
  throw UsageError("unknown sabotage '" + name +
                   "' (expected none|gamma-identity|drop-braiding)");
}

int run_check_cmd(const CommonFlags& flags, const std::string& target_name,
                  const std::string& out_path, const std::string& sabotage) {
  const RunConfig cfg = flags.config();
  const Target target = parse_target(target_name);
  const BialgebraOptions opts = parse_sabotage(sabotage);
  const bool sabotaged = opts.gamma_as_identity || opts.mu_hat_without_braiding;
  if (sabotaged && target != Target::bialgebra) {
    throw UsageError("--sabotage applies to --target bialgebra only");
  }
  const std::vector<CheckReport> reports =
      sabotaged ? bialgebra_suite(cfg, opts) : run_suite(target, cfg);
  const std::string rendered = cfg.format == ReportFormat::json
                                   ? report_to_json(cfg, reports)
                                   : report_to_text(cfg, reports);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      throw UsageError("cannot open output file '" + out_path + "'");
    }
    f << rendered;
    if (cfg.format == ReportFormat::json) {
      f << "\n";
    }
  } else {
    std::cout << rendered;
    if (cfg.format == ReportFormat::json) {
      std::cout << "\n";
    }
  }
  return any_failed(reports) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for the matrix-category bialgebra construction"};
  app.require_subcommand(1);

  CommonFlags check_flags;
  std::string target = "all";
  std::string out_path;
  std::string sabotage;
  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("--target", target, "base|matcat|coherence|bialgebra|all");
  add_common_flags(check, check_flags);
  check->add_option("--out", out_path, "write the report to FILE");
  check->add_option(
      "--sabotage", sabotage,
      "self-test: deliberately break the construction "
      "(none|gamma-identity|drop-braiding) and expect failures");

  CommonFlags eval_flags;
  std::string expr;
  std::string row = "0";
  CLI::App* eval = app.add_subcommand("eval", "print a row of a morphism");
  eval->add_option("--expr", expr, "morphism expression, e.g. epsilon∘eta")
      ->required();
  eval->add_option("--row", row, "domain index of the row");
  add_common_flags(eval, eval_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      return run_check_cmd(check_flags, target, out_path, sabotage);
    }
    return run_eval(eval_flags, expr, row, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
