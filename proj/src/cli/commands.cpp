// Copyright 2026 The varbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "varbounds/cli/commands.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "varbounds/cli/fuzz.hpp"
#include "varbounds/cli/problem_file.hpp"
#include "varbounds/cli/report_io.hpp"
#include "varbounds/cli/sweep.hpp"
#include "varbounds/entropic.hpp"
#include "varbounds/errors.hpp"
#include "varbounds/report.hpp"

namespace varbounds::cli {
namespace {

using nlohmann::json;

constexpr const char* kUnavailableMixed =
    "chain, permuted_chain, l1, mondal_in, max_perm_in, u1, l2, mondal_sum, "
    "u2, entropic_product";

struct Globals {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
  unsigned threads = 0;
};

struct BoundFlags {
  std::string input;
  std::string construction;
  std::string basis;
  std::string strategy = "exhaustive";
};

struct SweepFlags {
  std::string scenario = "spin1";
  std::string range;
  std::string construction = "basis";
  std::string basis = "computational";
  std::string problem;
};

struct FuzzFlags {
  std::size_t trials = 1000;
  std::string dim_range = "2:6";
  std::string report;
  std::optional<std::size_t> only_trial;
  bool inject_fault = false;
};

struct CconstFlags {
  std::vector<double> eigs_a;
  std::vector<double> eigs_b;
  std::size_t grid_points = 4096;
};

unsigned thread_count(const Globals& g) {
  if (g.threads > 0) return g.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file) throw SchemaError(g.output + ": cannot open for writing");
  file << text;
}

void require_json(const Globals& g) {
  if (g.format != "json") {
    throw SchemaError("--format " + g.format + " is only supported by sweep");
  }
}

BoundReport load_and_compute(const BoundFlags& f, const Globals& g) {
  Problem p = load_problem(f.input);
  if (!f.construction.empty()) {
    p.config.construction = parse_construction(f.construction);
  }
  if (!f.basis.empty()) {
    p.config.basis = parse_basis_choice(f.basis);
    p.config.explicit_basis.reset();
  }
  ReportOptions ro;
  ro.config = p.config;
  if (f.strategy == "exhaustive") {
    ro.chain_strategy = PermutationStrategy::Exhaustive;
  } else if (f.strategy == "local") {
    ro.chain_strategy = PermutationStrategy::LocalSearch;
  } else {
    throw SchemaError("unknown strategy \"" + f.strategy +
                      "\" (expected exhaustive or local)");
  }
  ro.local_search.seed = g.seed;
  return compute_report(p.state, p.a, p.b, ro);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

int cmd_bounds(const std::string& command, const BoundFlags& f,
               const Globals& g, std::ostream& out) {
  require_json(g);
  const BoundReport r = load_and_compute(f, g);
  json doc = to_json(r);
  doc["command"] = command;
  doc["tolerance"] = g.tolerance;
  if (command == "product" || command == "interval") {
    doc["product_interval"]["contained"] = r.product_contained(g.tolerance);
  }
  if (command == "sum" || command == "interval") {
    doc["sum_interval"]["contained"] = r.sum_contained(g.tolerance);
  }
  if (command == "product") doc.erase("sum_interval");
  if (command == "sum") doc.erase("product_interval");
  emit(g, out, dump(doc));
  return kExitOk;
}

int cmd_sweep(const SweepFlags& f, const Globals& g, std::ostream& out) {
  if (g.format != "csv" && g.format != "json") {
    throw SchemaError("--format must be csv or json");
  }
  SweepOptions opt;
  opt.kind = parse_scenario(f.scenario);
  opt.range = parse_theta_range(f.range);
  opt.config.construction = parse_construction(f.construction);
  opt.config.basis = parse_basis_choice(f.basis);
  opt.tolerance = g.tolerance;
  opt.threads = thread_count(g);
  if (opt.kind == ScenarioKind::Custom) {
    if (f.problem.empty()) throw SchemaError("--scenario custom needs --problem");
    CustomProblem cp = load_custom_family(f.problem);
    opt.custom = std::move(cp.family);
  }
  const std::vector<SweepRow> rows = run_sweep(opt);
  std::ostringstream text;
  if (g.format == "csv") {
    write_csv(text, rows);
  } else {
    text << dump(json{{"scenario", f.scenario},
                      {"construction", f.construction},
                      {"basis", f.basis},
                      {"rows", to_json(rows)}});
  }
  emit(g, out, text.str());
  return kExitOk;
}

int cmd_fuzz(const FuzzFlags& f, const Globals& g, std::ostream& out,
             std::ostream& err) {
  require_json(g);
  FuzzOptions opt;
  opt.trials = f.trials;
  std::tie(opt.dim_min, opt.dim_max) = parse_dim_range(f.dim_range);
  opt.seed = g.seed;
  opt.only_trial = f.only_trial;
  opt.tolerance = g.tolerance;
  opt.threads = thread_count(g);
  opt.inject_fault = f.inject_fault;
  const FuzzSummary summary = run_fuzz(opt);
  const std::string text = dump(to_json(summary));
  if (!f.report.empty()) {
    std::ofstream file(f.report, std::ios::binary);
    if (!file) throw SchemaError(f.report + ": cannot open for writing");
    file << text;
  }
  if (!g.output.empty() || f.report.empty()) emit(g, out, text);
  if (!summary.ok()) {
    const Violation& v = summary.violations.front();
    err << "fuzz: " << summary.violations.size() << " violation(s); first: "
        << v.invariant << " at trial " << v.trial << " (magnitude "
        << format_number(v.magnitude) << ")\n"
        << "reproduce with: " << v.reproducer << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_cconst(const CconstFlags& f, const Globals& g, std::ostream& out) {
  require_json(g);
  if (f.eigs_a.empty() || f.eigs_b.empty()) {
    throw SchemaError("--eigs-a and --eigs-b need at least one value");
  }
  CConstantOptions opt;
  opt.grid_points = f.grid_points;
  const CConstant c = c_constant(f.eigs_a, f.eigs_b, opt);
  json doc = to_json(c);
  doc["eigs_a"] = f.eigs_a;
  doc["eigs_b"] = f.eigs_b;
  emit(g, out, dump(doc));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Uncertainty-interval bounds for variances of two observables",
               "varbounds"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tolerance", g.tolerance,
                 "Relative tolerance for containment and fuzz checks")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized strategies and fuzzing")
      ->capture_default_str();
  app.add_option("--output", g.output, "Output path (default: stdout)");
  app.add_option("--format", g.format, "Output format: json or csv (sweep only)")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0: hardware)");

  BoundFlags bf;
  std::string bound_command;
  for (const char* name : {"product", "sum", "interval"}) {
    std::string help = std::string(name) == "product"
                           ? "Bounds on V(A)V(B)"
                       : std::string(name) == "sum" ? "Bounds on V(A)+V(B)"
                                                    : "Both uncertainty intervals";
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", bf.input, "Problem file (JSON)")->required();
    sub->add_option("--construction", bf.construction, "basis or fidelity");
    sub->add_option("--basis", bf.basis, "computational, eigen_a or eigen_b");
    sub->add_option("--strategy", bf.strategy,
                    "Permuted chain search: exhaustive or local");
    sub->callback([&bound_command, name] { bound_command = name; });
  }

  SweepFlags sf;
  CLI::App* sweep = app.add_subcommand("sweep", "Scenario sweep over theta");
  sweep->add_option("--scenario", sf.scenario, "spin1, spinhalf or custom")
      ->capture_default_str();
  sweep->add_option("--theta-range", sf.range, "start:stop:steps (radians)")
      ->required();
  sweep->add_option("--construction", sf.construction, "basis or fidelity")
      ->capture_default_str();
  sweep->add_option("--basis", sf.basis, "computational, eigen_a or eigen_b")
      ->capture_default_str();
  sweep->add_option("--problem", sf.problem, "Custom family file (JSON)");

  FuzzFlags ff;
  CLI::App* fuzz = app.add_subcommand("fuzz", "Randomized invariant checks");
  fuzz->add_option("--trials", ff.trials, "Number of trials")
      ->capture_default_str();
  fuzz->add_option("--dim-range", ff.dim_range, "a:b")->capture_default_str();
  fuzz->add_option("--report", ff.report, "Write the JSON summary here");
  fuzz->add_option("--only-trial", ff.only_trial, "Run a single trial index");
  fuzz->add_flag("--inject-fault", ff.inject_fault)->group("");

  CconstFlags cf;
  CLI::App* cconst = app.add_subcommand("cconst", "Entropic constant c");
  cconst->add_option("--eigs-a", cf.eigs_a, "Eigenvalues of A")
      ->required()
      ->delimiter(',');
  cconst->add_option("--eigs-b", cf.eigs_b, "Eigenvalues of B")
      ->required()
      ->delimiter(',');
  cconst->add_option("--grid-points", cf.grid_points, "Grid size")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!bound_command.empty()) return cmd_bounds(bound_command, bf, g, out);
    if (sweep->parsed()) return cmd_sweep(sf, g, out);
    if (fuzz->parsed()) return cmd_fuzz(ff, g, out, err);
    if (cconst->parsed()) return cmd_cconst(cf, g, out);
  } catch (const PurityError& e) {
    err << "error: " << e.what() << "\n"
        << "the basis construction needs a pure state; unavailable bounds: "
        << kUnavailableMixed << "\n"
        << "rerun with --construction fidelity\n";
    return kExitPurity;
  } catch (const ContainmentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace varbounds::cli
