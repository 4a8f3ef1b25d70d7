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

#include "varbounds/report.hpp"

#include <cmath>

#include "varbounds/errors.hpp"

namespace varbounds {

bool BoundReport::product_contained(double rel_tol) const {
  const double slack = scaled_tolerance(rel_tol, std::abs(product));
  for (double v : {schrodinger, mondal_in, max_perm_in, product_lower.value}) {
    if (v > product + slack) return false;
  }
  if (l1 && *l1 > product + slack) return false;
  if (u1.certified && product > u1.value + slack) return false;
  if (entropic_product && entropic_product->premise_holds &&
      entropic_product->value > product + slack) {
    return false;
  }
  return true;
}

bool BoundReport::sum_contained(double rel_tol) const {
  const double slack = scaled_tolerance(rel_tol, std::abs(sum));
  if (l2 > sum + slack || mondal_sum > sum + slack) return false;
  if (sum > u2 + slack) return false;
  if (entropic_sum.premise_holds && entropic_sum.value > sum + slack) return false;
  return true;
}

BoundReport compute_report(const QuantumState& state, const Observable& a,
                           const Observable& b, const ReportOptions& options) {
  if (state.dim() != a.dim() || state.dim() != b.dim()) {
    throw DimensionError("state and observables differ in dimension");
  }
  const CoefficientPair pair = coefficients(state, a, b, options.config);
  const std::size_t n = pair.n();

  BoundReport r;
  r.construction = to_string(options.config.construction);
  r.basis = options.config.construction == Construction::FidelityWeighted
                ? pair.basis_label
                : to_string(options.config.basis);
  r.x = pair.x;
  r.y = pair.y;
  r.v_a = variance(state, a);
  r.v_b = variance(state, b);
  r.product = r.v_a * r.v_b;
  r.sum = r.v_a + r.v_b;

  r.chain = partial_cs_chain(pair).values;
  PermutationStrategy strategy = options.chain_strategy;
  if (strategy == PermutationStrategy::SortExact ||
      (strategy == PermutationStrategy::Exhaustive && n > kMaxExhaustiveDim)) {
    strategy = PermutationStrategy::LocalSearch;
  }
  r.permuted_chain_strategy = to_string(strategy);
  for (std::size_t k = 0; k <= n; ++k) {
    r.permuted_chain.push_back(
        max_permuted_partial_cs(pair, k, strategy, options.local_search).value);
  }

  const ProductInterval pi = product_interval(state, a, b, pair);
  r.product_lower = pi.lower;
  r.u1 = pi.upper;
  for (const auto& c : pi.candidates) {
    if (c.label == "schrodinger") r.schrodinger = c.value;
    if (c.label == "mondal_in") r.mondal_in = c.value;
    if (c.label == "l1") r.l1 = c.value;
    if (c.label == "max_perm_in") r.max_perm_in = c.value;
  }
  r.expectation_product = expectation_product_bound(state, a, b);

  const ParallelogramTerms para = parallelogram(pair);
  r.parallelogram_plus = para.plus;
  r.parallelogram_minus = para.minus;
  const SumInterval si = sum_interval(
      state, a, b, pair, options.l2_pi2 ? *options.l2_pi2 : Permutation::cycle(n));
  r.sum_lower = si.lower;
  r.u2 = si.upper;
  for (const auto& c : si.candidates) {
    if (c.label == "l2") r.l2 = c.value;
    if (c.label == "mondal_sum") r.mondal_sum = c.value;
  }

  r.entropic_sum = entropic_sum_bound(state, a, b);
  if (n >= 2) {
    try {
      r.entropic_product = entropic_product_bound(
          state, a, b, resolve_basis(options.config, a, b));
    } catch (const PurityError&) {
      // Only reachable with the fidelity construction on a mixed state.
    }
  }
  return r;
}

}  // namespace varbounds
