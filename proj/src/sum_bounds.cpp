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

#include "varbounds/sum_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "varbounds/errors.hpp"

namespace varbounds {
namespace {

void require_descending(std::span<const double> v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] >= 0.0)) {
      throw ValidationError(std::string(name) + " has a negative entry");
    }
    if (i > 0 && v[i] > v[i - 1]) {
      throw ValidationError(std::string(name) + " is not sorted descending");
    }
  }
}

std::vector<double> sorted_plus(const CoefficientPair& pair) {
  std::vector<double> u(pair.n());
  for (std::size_t i = 0; i < pair.n(); ++i) u[i] = pair.x[i] + pair.y[i];
  std::sort(u.begin(), u.end(), std::greater<>());
  return u;
}

std::vector<double> sorted_minus(const CoefficientPair& pair) {
  std::vector<double> d(pair.n());
  for (std::size_t i = 0; i < pair.n(); ++i) d[i] = std::abs(pair.x[i] - pair.y[i]);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

double half_pairing(const std::vector<double>& v, const Permutation& pi) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * v[pi(i)];
  return 0.5 * s;
}

}  // namespace

RearrangementSums rearrangement_sums(std::span<const double> x,
                                     std::span<const double> y,
                                     const Permutation& pi) {
  if (x.size() != y.size() || pi.size() != x.size()) {
    throw DimensionError("rearrangement_sums: length mismatch");
  }
  require_descending(x, "x");
  require_descending(y, "y");
  const std::size_t n = x.size();
  RearrangementSums out;
  out.permutation = pi;
  for (std::size_t i = 0; i < n; ++i) {
    out.direct += x[i] * y[i];
    out.random += x[i] * y[pi(i)];
    out.reverse += x[i] * y[n - 1 - i];
  }
  return out;
}

ParallelogramTerms parallelogram(const CoefficientPair& pair) {
  const Permutation id = Permutation::identity(pair.n());
  return {half_pairing(sorted_plus(pair), id), half_pairing(sorted_minus(pair), id)};
}

double permuted_parallelogram_bound(const CoefficientPair& pair,
                                    const Permutation& pi1,
                                    const Permutation& pi2) {
  if (pi1.size() != pair.n() || pi2.size() != pair.n()) {
    throw ValidationError("permutation size does not match coefficient length");
  }
  return half_pairing(sorted_plus(pair), pi1) +
         half_pairing(sorted_minus(pair), pi2);
}

double l2_bound(const CoefficientPair& pair) {
  return l2_bound(pair, Permutation::cycle(pair.n()));
}

double l2_bound(const CoefficientPair& pair, const Permutation& pi2) {
  return permuted_parallelogram_bound(pair, Permutation::identity(pair.n()), pi2);
}

double mondal_sum_bound(const CoefficientPair& pair) {
  return half_pairing(sorted_plus(pair), Permutation::identity(pair.n()));
}

double u2_bound(const CoefficientPair& pair) {
  double s = 0.0;
  for (std::size_t i = 0; i < pair.n(); ++i) {
    const double u = pair.x[i] + pair.y[i];
    s += u * u;
  }
  return s;
}

double u2_bound(const QuantumState& state, const Observable& a,
                const Observable& b, const Basis& basis) {
  return u2_bound(coefficients_basis(state, a, b, basis));
}

bool SumInterval::contains(double rel_tol) const {
  const double slack = scaled_tolerance(rel_tol, std::abs(sum));
  return lower.value <= sum + slack && sum <= upper + slack;
}

SumInterval sum_interval(const QuantumState& state, const Observable& a,
                         const Observable& b, const BoundConfig& config) {
  const CoefficientPair pair = coefficients(state, a, b, config);
  return sum_interval(state, a, b, pair, Permutation::cycle(pair.n()));
}

SumInterval sum_interval(const QuantumState& state, const Observable& a,
                         const Observable& b, const CoefficientPair& pair,
                         const Permutation& l2_cycle) {
  SumInterval out;
  out.sum = variance(state, a) + variance(state, b);
  out.candidates.push_back({"l2", l2_bound(pair, l2_cycle)});
  out.candidates.push_back({"mondal_sum", mondal_sum_bound(pair)});
  out.lower = out.candidates.front();
  for (const auto& c : out.candidates) {
    if (c.value > out.lower.value) out.lower = c;
  }
  out.upper = u2_bound(pair);
  return out;
}

}  // namespace varbounds
