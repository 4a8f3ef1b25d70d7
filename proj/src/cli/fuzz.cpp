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


#include "varbounds/cli/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "varbounds/cli/report_io.hpp"
#include "varbounds/entropic.hpp"
#include "varbounds/oracle.hpp"
#include "varbounds/product_bounds.hpp"
#include "varbounds/random.hpp"
#include "varbounds/report.hpp"
#include "varbounds/scenarios.hpp"
#include "varbounds/sum_bounds.hpp"

namespace varbounds::cli {
namespace {

constexpr double kAlphas[] = {-2.0, -1.0, 0.0, 0.5, 1.0, 5.0};

struct TrialResult {
  std::size_t dim = 0;
  std::size_t checks = 0;
  double oracle_discrepancy = 0.0;
  double parallelogram_error = 0.0;
  std::vector<std::pair<std::string, double>> failures;
};

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(images[i - 1], images[rng.below(i)]);
  }
  return Permutation(std::move(images));
}

class Checker {
 public:
  Checker(TrialResult& result, double tol) : result_(result), tol_(tol) {}

  // Records a violation when lhs exceeds rhs by more than tol * max(1, scale).
  void le(const std::string& name, double lhs, double rhs, double scale) {
    check(name, lhs - rhs, scale, tol_);
  }

  void near(const std::string& name, double a, double b, double scale,
            double tol) {
    check(name, std::abs(a - b), scale, tol);
  }

  void require(const std::string& name, bool ok) {
    ++result_.checks;
    if (!ok) result_.failures.emplace_back(name, 1.0);
  }

 private:
  void check(const std::string& name, double excess, double scale, double tol) {
    ++result_.checks;
    const double s = std::max(1.0, std::abs(scale));
    if (!(excess <= tol * s)) {
      result_.failures.emplace_back(name, std::isnan(excess) ? excess : excess / s);
    }
  }

  TrialResult& result_;
  double tol_;
};

TrialResult run_trial(const FuzzOptions& opt, std::size_t trial) {
  TrialResult res;
  Rng rng(opt.seed, trial);
  const std::size_t n =
      opt.dim_min + static_cast<std::size_t>(rng.below(opt.dim_max - opt.dim_min + 1));
  res.dim = n;
  const QuantumState state = random_pure_state(n, rng.bits());
  const Observable a = random_hermitian(n, rng.bits());
  const Observable b = random_hermitian(n, rng.bits());

  ReportOptions ro;
  ro.config.construction = trial % 2 == 0 ? Construction::BasisExpansion
                                          : Construction::FidelityWeighted;
  switch (trial % 3) {
    case 0: ro.config.basis = BasisChoice::Computational; break;
    case 1: ro.config.basis = BasisChoice::EigenA; break;
    default: ro.config.basis = BasisChoice::EigenB; break;
  }
  ro.chain_strategy = n <= 4 ? PermutationStrategy::Exhaustive
                             : PermutationStrategy::LocalSearch;
  ro.local_search.seed = rng.bits();
  BoundReport r = compute_report(state, a, b, ro);
  const CoefficientPair pair = CoefficientPair::from_vectors(r.x, r.y);

  if (opt.inject_fault) {
    r.chain[n] = 2.0 * r.chain[0] - r.chain[n];
  }

  Checker c(res, opt.tolerance);
  const double prod = r.product;
  const double sum = r.sum;

  c.near("norm_x", pair.x_squared_norm(), r.v_a, r.v_a, opt.tolerance);
  c.near("norm_y", pair.y_squared_norm(), r.v_b, r.v_b, opt.tolerance);

  // Partial Cauchy-Schwarz chain.
  c.near("chain_i0", r.chain[0], prod, prod, opt.tolerance);
  c.near("chain_i1", r.chain[1], r.chain[0], r.chain[0], 1e-12);
  for (std::size_t k = 2; k <= n; ++k) {
    c.le("chain_monotone", r.chain[k], r.chain[k - 1], r.chain[k - 1]);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    c.le("permuted_dominance", r.chain[k], r.permuted_chain[k], r.chain[k]);
  }
  for (int rep = 0; rep < 2; ++rep) {
    const PermutationPair perms{random_permutation(n, rng),
                                random_permutation(n, rng)};
    double prev = permuted_partial_cs_bound(pair, 1, perms);
    c.le("permuted_i1", prev, prod, prod);
    for (std::size_t k = 2; k <= n; ++k) {
      const double cur = permuted_partial_cs_bound(pair, k, perms);
      c.le("permuted_monotone", cur, prev, prev);
      prev = cur;
    }
  }

  // Product bounds.
  const double l1 = r.l1.value_or(r.mondal_in);
  c.le("mondal_le_l1", r.mondal_in, l1, l1);
  c.le("l1_le_product", l1, prod, prod);
  c.le("mondal_le_product", r.mondal_in, prod, prod);
  c.le("max_perm_le_product", r.max_perm_in, prod, prod);
  c.le("schrodinger_le_product", r.schrodinger, prod, prod);
  c.le("lower_le_product", r.product_lower.value, prod, prod);
  if (ro.config.construction == Construction::BasisExpansion) {
    c.le("expectation_le_mondal", r.expectation_product, r.mondal_in, r.mondal_in);
  }
  if (r.u1.certified) c.le("product_le_u1", prod, r.u1.value, prod);

  // Rearrangement inequality on the sorted coefficients.
  {
    std::vector<double> xs = r.x;
    std::vector<double> ys = r.y;
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    const RearrangementSums s =
        rearrangement_sums(xs, ys, random_permutation(n, rng));
    c.le("rearrangement_direct", s.random, s.direct, s.direct);
    c.le("rearrangement_reverse", s.reverse, s.random, s.random);
  }

  // Sum bounds.
  const ParallelogramTerms par = parallelogram(pair);
  const double par_err = std::abs(par.sum() - sum) / std::max(1.0, sum);
  res.parallelogram_error = par_err;
  c.near("parallelogram", par.sum(), sum, sum, 1e-12);
  const Permutation id = Permutation::identity(n);
  c.require("sum_form_identity",
            permuted_parallelogram_bound(pair, id, id) == par.sum());
  c.le("sum_form_le_sum",
       permuted_parallelogram_bound(pair, random_permutation(n, rng),
                                    random_permutation(n, rng)),
       sum, sum);
  c.le("mondal_sum_le_l2", r.mondal_sum, r.l2, r.l2);
  c.le("l2_le_sum", r.l2, sum, sum);
  c.le("sum_le_u2", sum, r.u2, sum);

  // Entropy-variance inequality.
  for (double alpha : kAlphas) {
    c.le("entropy_variance", entropy_variance_bound(state, a, alpha),
         alpha * r.v_a, r.v_a);
    c.le("entropy_variance", entropy_variance_bound(state, b, alpha),
         alpha * r.v_b, r.v_b);
  }
  if (r.entropic_sum.premise_holds) {
    c.le("entropic_sum_le_sum", r.entropic_sum.value, sum, sum);
  }

  // Independent recomputation.
  const OracleReport oracle = oracle_bound_check(state, a, b, ro.config, r);
  res.oracle_discrepancy = oracle.max_discrepancy;
  c.le("oracle_" + oracle.worst, oracle.max_discrepancy, 0.0, 0.0);
  return res;
}

std::string reproducer(const FuzzOptions& opt, std::size_t trial) {
  std::string line = "varbounds fuzz --seed " + std::to_string(opt.seed) +
                     " --trials " + std::to_string(opt.trials) +
                     " --dim-range " + std::to_string(opt.dim_min) + ":" +
                     std::to_string(opt.dim_max) + " --only-trial " +
                     std::to_string(trial);
  if (opt.tolerance != 1e-9) line += " --tolerance " + format_number(opt.tolerance);
  return line;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_dim_range(const std::string& text) {
  const auto colon = text.find(':');
  auto parse = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
        s.size() > 6) {
      throw std::invalid_argument("dimension range must look like a:b, got \"" +
                                  text + "\"");
    }
    return std::stoul(s);
  };
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (colon == std::string::npos) {
    lo = hi = parse(text);
  } else {
    lo = parse(text.substr(0, colon));
    hi = parse(text.substr(colon + 1));
  }
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("dimension range needs 1 <= a <= b, got \"" +
                                text + "\"");
  }
  return {lo, hi};
}

FuzzSummary run_fuzz(const FuzzOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("fuzz needs at least 1 trial");
  if (opt.dim_min < 1 || opt.dim_max < opt.dim_min) {
    throw std::invalid_argument("invalid dimension range");
  }
  if (opt.only_trial && *opt.only_trial >= opt.trials) {
    throw std::invalid_argument("--only-trial must be below --trials");
  }

  std::vector<std::size_t> indices;
  if (opt.only_trial) {
    indices.push_back(*opt.only_trial);
  } else {
    for (std::size_t t = 0; t < opt.trials; ++t) indices.push_back(t);
  }

  std::vector<TrialResult> results(indices.size());
  std::vector<std::exception_ptr> errors(indices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < indices.size(); i = next++) {
      try {
        results[i] = run_trial(opt, indices[i]);
      } catch (const std::exception& e) {
        results[i].failures.emplace_back(std::string("exception: ") + e.what(),
                                         std::nan(""));
      }
    }
  };
  const unsigned threads = std::max(
      1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(indices.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  FuzzSummary summary;
  summary.seed = opt.seed;
  summary.trials = indices.size();
  summary.dim_min = opt.dim_min;
  summary.dim_max = opt.dim_max;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const TrialResult& r = results[i];
    summary.checks += r.checks;
    summary.max_oracle_discrepancy =
        std::max(summary.max_oracle_discrepancy, r.oracle_discrepancy);
    summary.max_parallelogram_error =
        std::max(summary.max_parallelogram_error, r.parallelogram_error);
    for (const auto& [name, magnitude] : r.failures) {
      summary.violations.push_back(Violation{opt.seed, indices[i], r.dim, name,
                                             magnitude,
                                             reproducer(opt, indices[i])});
    }
  }
  return summary;
}

nlohmann::json to_json(const FuzzSummary& s) {
  auto num = [](double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : s.violations) {
    violations.push_back({{"seed", v.seed},
                          {"trial", v.trial},
                          {"dim", v.dim},
                          {"invariant", v.invariant},
                          {"magnitude", num(v.magnitude)},
                          {"reproducer", v.reproducer}});
  }
  return {{"status", s.ok() ? "ok" : "violations"},
          {"seed", s.seed},
          {"trials", s.trials},
          {"dim_range", {s.dim_min, s.dim_max}},
          {"checks", s.checks},
          {"max_oracle_discrepancy", num(s.max_oracle_discrepancy)},
          {"max_parallelogram_error", num(s.max_parallelogram_error)},
          {"violations", violations}};
}

}  // namespace varbounds::cli
