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

#ifndef VARBOUNDS_PRODUCT_BOUNDS_HPP_
#define VARBOUNDS_PRODUCT_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "varbounds/permutation.hpp"
#include "varbounds/quantum.hpp"

namespace varbounds {

// Partial Cauchy-Schwarz value I_k: the AM-GM step
// x_i^2 y_j^2 + x_j^2 y_i^2 >= 2 x_i x_j y_i y_j applied only to pairs
// i < j < k (zero-based). I_0 = |x|^2 |y|^2, I_n = (sum x_i y_i)^2.
//
// Pairs are summed in a canonical order (prefix and suffix each sorted), so
// configurations that hold the same multiset of (x, y) pairs in the first k
// slots evaluate bit-identically no matter how they are indexed.
//
// Throws std::out_of_range when k > n.
double partial_cs_bound(const CoefficientPair& pair, std::size_t k);

struct ChainResult {
  std::vector<double> values;  // values[k] = I_k, k = 0..n
  std::size_t n() const { return values.empty() ? 0 : values.size() - 1; }
};

ChainResult partial_cs_chain(const CoefficientPair& pair);

struct PermutationPair {
  Permutation first;   // relabels x: x~_i = x_{first(i)}
  Permutation second;  // relabels y: y~_i = y_{second(i)}
};

// I_k of the relabeled vectors (x o first, y o second).
double permuted_partial_cs_bound(const CoefficientPair& pair, std::size_t k,
                                 const PermutationPair& perms);

enum class PermutationStrategy { Exhaustive, SortExact, LocalSearch };

const char* to_string(PermutationStrategy s);

struct LocalSearchOptions {
  std::uint64_t seed = 0;
  int random_restarts = 4;
};

struct PermutedMax {
  double value = 0.0;
  PermutationPair perms;
};

inline constexpr std::size_t kMaxExhaustiveDim = 6;

// max over S_n x S_n of the permuted I_k.
//  - Exhaustive (n <= 6): enumerates pairings sigma and k-subsets of pairs.
//  - SortExact (k == n only): pairs both vectors in descending order.
//  - LocalSearch: best-improvement hill climbing over re-pairing swaps and
//    prefix/suffix exchanges from the sorted, identity and seeded random
//    starts. Never below I_k.
// Ties keep the first configuration in enumeration order. Throws
// ValidationError on a strategy/size mismatch.
PermutedMax max_permuted_partial_cs(const CoefficientPair& pair, std::size_t k,
                                    PermutationStrategy strategy,
                                    const LocalSearchOptions& options = {});

// I_{n-1}. Throws ValidationError for n < 2.
double l1_bound(const CoefficientPair& pair);

// (sum x_i y_i)^2, the plain Cauchy-Schwarz bound.
double mondal_product_bound(const CoefficientPair& pair);

// |<A-bar B-bar>|^2
double expectation_product_bound(const QuantumState& state, const Observable& a,
                                 const Observable& b);

// 1/4 (sum_i |<[A-bar, B_i]> + <{A-bar, B_i}>|)^2 with
// B_i = |psi_i><psi_i| B-bar, summed over the first `terms` basis vectors
// (all of them by default).
double operator_pairing_bound(const QuantumState& state, const Observable& a,
                              const Observable& b, const Basis& basis,
                              std::size_t terms = std::numeric_limits<std::size_t>::max());

// L1 written with the operators B_i instead of coefficient vectors; agrees
// with l1_bound on the basis construction.
double l1_operator_form(const QuantumState& state, const Observable& a,
                        const Observable& b, const Basis& basis);

// |1/2 <[A,B]>|^2 + |1/2 <{A-bar, B-bar}>|^2
double schrodinger_bound(const QuantumState& state, const Observable& a,
                         const Observable& b);

// An upper bound that may be uncertified (value = +inf).
struct UpperBound {
  double value = std::numeric_limits<double>::infinity();
  bool certified = false;
  std::size_t dropped = 0;  // components filtered as (0, 0)
  std::string diagnostic;

  bool operator==(const UpperBound&) const = default;
};

inline constexpr double kSupportEpsilon = 1e-12;

// Reverse Cauchy-Schwarz bound
//   (xy + XY)^2 / (4 xy XY) * (min_pi sum x_i y_pi(i))^2
// with x, X, y, Y the extreme components. Components with both entries
// <= 1e-12 are dropped; if a component has exactly one entry <= 1e-12 the
// result is the uncertified +inf sentinel. Throws EmptySupportError when
// every component is dropped. SortExact pairs ascending x with descending y;
// Exhaustive enumerates pairings (n <= 8); LocalSearch is rejected.
UpperBound u1_bound(const CoefficientPair& pair,
                    PermutationStrategy strategy = PermutationStrategy::SortExact);

struct LabeledBound {
  std::string label;
  double value = 0.0;

  bool operator==(const LabeledBound&) const = default;
};

struct ProductInterval {
  LabeledBound lower;
  UpperBound upper;
  double product = 0.0;  // V(A) V(B)
  std::vector<LabeledBound> candidates;

  bool contains(double rel_tol = 1e-9) const;
};

// lower = max{schrodinger, mondal_in, l1, max_perm_in}, upper = U1.
ProductInterval product_interval(const QuantumState& state, const Observable& a,
                                 const Observable& b, const BoundConfig& config);
ProductInterval product_interval(const QuantumState& state, const Observable& a,
                                 const Observable& b, const CoefficientPair& pair);

}  // namespace varbounds

#endif  // VARBOUNDS_PRODUCT_BOUNDS_HPP_
