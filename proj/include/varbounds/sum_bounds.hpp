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

#ifndef VARBOUNDS_SUM_BOUNDS_HPP_
#define VARBOUNDS_SUM_BOUNDS_HPP_

#include <span>

#include "varbounds/permutation.hpp"
#include "varbounds/product_bounds.hpp"
#include "varbounds/quantum.hpp"

namespace varbounds {

struct RearrangementSums {
  double direct = 0.0;   // sum x_i y_i
  double random = 0.0;   // sum x_i y_pi(i)
  double reverse = 0.0;  // sum x_i y_{n-1-i}
  Permutation permutation;
};

// x and y must be nonnegative and sorted descending (ValidationError
// otherwise).
RearrangementSums rearrangement_sums(std::span<const double> x,
                                     std::span<const double> y,
                                     const Permutation& pi);

struct ParallelogramTerms {
  double plus = 0.0;   // 1/2 sum (x_i + y_i)^2
  double minus = 0.0;  // 1/2 sum (x_i - y_i)^2
  double sum() const { return plus + minus; }
};

ParallelogramTerms parallelogram(const CoefficientPair& pair);

// 1/2 sum u_i u_{pi1(i)} + 1/2 sum d_i d_{pi2(i)} with u = x + y and
// d = |x - y|, each term evaluated after sorting its own vector descending.
// The value is therefore independent of how the components are indexed;
// identity permutations give back parallelogram(pair).sum() bit for bit.
double permuted_parallelogram_bound(const CoefficientPair& pair,
                                    const Permutation& pi1,
                                    const Permutation& pi2);

// pi1 = identity, pi2 = the n-cycle (1 2 ... n) unless overridden.
double l2_bound(const CoefficientPair& pair);
double l2_bound(const CoefficientPair& pair, const Permutation& pi2);

// 1/2 sum (x_i + y_i)^2
double mondal_sum_bound(const CoefficientPair& pair);

// sum (x_i + y_i)^2
double u2_bound(const CoefficientPair& pair);
double u2_bound(const QuantumState& state, const Observable& a,
                const Observable& b, const Basis& basis);

struct SumInterval {
  LabeledBound lower;
  double upper = 0.0;  // U2
  double sum = 0.0;    // V(A) + V(B)
  std::vector<LabeledBound> candidates;

  bool contains(double rel_tol = 1e-9) const;
};

SumInterval sum_interval(const QuantumState& state, const Observable& a,
                         const Observable& b, const BoundConfig& config);
SumInterval sum_interval(const QuantumState& state, const Observable& a,
                         const Observable& b, const CoefficientPair& pair,
                         const Permutation& l2_cycle);

}  // namespace varbounds

#endif  // VARBOUNDS_SUM_BOUNDS_HPP_
