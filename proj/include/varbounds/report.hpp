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

#ifndef VARBOUNDS_REPORT_HPP_
#define VARBOUNDS_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "varbounds/entropic.hpp"
#include "varbounds/permutation.hpp"
#include "varbounds/product_bounds.hpp"
#include "varbounds/quantum.hpp"
#include "varbounds/sum_bounds.hpp"

namespace varbounds {

struct ReportOptions {
  BoundConfig config;
  // Strategy for the permuted chain max_{pi1,pi2} I_k, k = 0..n. Exhaustive
  // falls back to LocalSearch above n = 6.
  PermutationStrategy chain_strategy = PermutationStrategy::Exhaustive;
  LocalSearchOptions local_search;
  // pi2 of L2; the n-cycle when unset.
  std::optional<Permutation> l2_pi2;
};

// Every bound computed for one (state, A, B).
struct BoundReport {
  std::string construction;
  std::string basis;
  std::vector<double> x;
  std::vector<double> y;

  double v_a = 0.0;
  double v_b = 0.0;
  double product = 0.0;
  double sum = 0.0;

  std::vector<double> chain;            // I_0 .. I_n
  std::vector<double> permuted_chain;   // max_{pi1,pi2} I_k
  std::string permuted_chain_strategy;
  double schrodinger = 0.0;
  double mondal_in = 0.0;
  std::optional<double> l1;             // n >= 2
  double max_perm_in = 0.0;
  double expectation_product = 0.0;     // |<A-bar B-bar>|^2
  UpperBound u1;

  double parallelogram_plus = 0.0;
  double parallelogram_minus = 0.0;
  double l2 = 0.0;
  double mondal_sum = 0.0;
  double u2 = 0.0;

  EntropicSumBound entropic_sum;
  std::optional<EntropicProductBound> entropic_product;  // pure, n >= 2

  LabeledBound product_lower;
  LabeledBound sum_lower;

  bool product_contained(double rel_tol = 1e-9) const;
  bool sum_contained(double rel_tol = 1e-9) const;

  bool operator==(const BoundReport&) const = default;
};

// Throws PurityError for a mixed state with the basis construction.
BoundReport compute_report(const QuantumState& state, const Observable& a,
                           const Observable& b, const ReportOptions& options);

}  // namespace varbounds

#endif  // VARBOUNDS_REPORT_HPP_
