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


#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "varbounds/errors.hpp"
#include "varbounds/random.hpp"
#include "varbounds/scenarios.hpp"
#include "varbounds/sum_bounds.hpp"

namespace varbounds {
namespace {

CoefficientPair make(std::vector<double> x, std::vector<double> y) {
  return CoefficientPair::from_vectors(std::move(x), std::move(y));
}

TEST(RearrangementTest, Examples) {
  const std::vector<double> v{3, 2, 1};
  const RearrangementSums id = rearrangement_sums(v, v, Permutation::identity(3));
  EXPECT_EQ(id.direct, 14.0);
  EXPECT_EQ(id.reverse, 10.0);
  EXPECT_EQ(id.random, id.direct);
  EXPECT_EQ(rearrangement_sums(v, v, Permutation::reversal(3)).random, 10.0);
}

TEST(RearrangementTest, RejectsUnsorted) {
  const std::vector<double> up{1, 2, 3};
  const std::vector<double> down{3, 2, 1};
  EXPECT_THROW(rearrangement_sums(up, down, Permutation::identity(3)),
               ValidationError);
}

TEST(RearrangementTest, ExhaustiveOrdering) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = static_cast<double>(rng.below(10));
    for (auto& v : y) v = static_cast<double>(rng.below(10));
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    Permutation pi = Permutation::identity(n);
    do {
      const RearrangementSums s = rearrangement_sums(x, y, pi);
      EXPECT_GE(s.direct, s.random);
      EXPECT_GE(s.random, s.reverse);
    } while (pi.next());
  }
}

TEST(ParallelogramTest, Examples) {
  const ParallelogramTerms same = parallelogram(make({1, 2}, {1, 2}));
  EXPECT_EQ(same.minus, 0.0);
  EXPECT_EQ(same.plus, 10.0);
  const ParallelogramTerms disjoint = parallelogram(make({1, 0}, {0, 1}));
  EXPECT_EQ(disjoint.plus, 1.0);
  EXPECT_EQ(disjoint.minus, 1.0);
  EXPECT_EQ(disjoint.sum(), 2.0);
}

TEST(ParallelogramTest, Exactness) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const CoefficientPair p = random_coefficient_pair(1 + rng.below(8), rng, 0.1);
    const double s = p.x_squared_norm() + p.y_squared_norm();
    EXPECT_NEAR(parallelogram(p).sum(), s, 1e-12 * std::max(1.0, s));
  }
}

TEST(SumFormTest, Examples) {
  const CoefficientPair p = make({2, 1}, {1, 2});
  EXPECT_EQ(permuted_parallelogram_bound(p, Permutation::identity(2),
                                         Permutation::identity(2)),
            10.0);
  EXPECT_EQ(permuted_parallelogram_bound(p, Permutation::identity(2),
                                         Permutation::swap(2, 0, 1)),
            10.0);
}

TEST(SumFormTest, EqualVectorsDropSecondTerm) {
  const CoefficientPair p = make({3, 1, 2}, {3, 1, 2});
  const Permutation pi1 = Permutation::cycle(3);
  // With x = y the sorted frame of x + y is (6, 4, 2).
  const std::vector<double> u{6, 4, 2};
  double expected = 0.0;
  for (std::size_t i = 0; i < 3; ++i) expected += 0.5 * u[i] * u[pi1(i)];
  EXPECT_EQ(permuted_parallelogram_bound(p, pi1, Permutation::reversal(3)),
            expected);
}

TEST(SumFormTest, IdentityIsExactAndOthersBound) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const CoefficientPair p = random_coefficient_pair(n, rng, 0.1);
    const Permutation id = Permutation::identity(n);
    EXPECT_EQ(permuted_parallelogram_bound(p, id, id), parallelogram(p).sum());
    const double s = p.x_squared_norm() + p.y_squared_norm();
    Permutation a = id;
    const std::size_t steps = rng.below(6);
    for (std::size_t r = 0; r < steps; ++r) a.next();
    Permutation b = Permutation::cycle(n);
    EXPECT_LE(permuted_parallelogram_bound(p, a, b), s + 1e-12 * std::max(1.0, s));
  }
}

TEST(L2Test, Examples) {
  const CoefficientPair same = make({1, 2, 0.5}, {1, 2, 0.5});
  EXPECT_NEAR(l2_bound(same), same.x_squared_norm() * 2.0, 1e-12);
  EXPECT_EQ(l2_bound(make({1, 0}, {0, 1})), 2.0);
}

TEST(L2Test, DominatesMondal) {
  Rng rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const CoefficientPair p = random_coefficient_pair(1 + rng.below(8), rng, 0.1);
    const double l2 = l2_bound(p);
    EXPECT_GE(l2, mondal_sum_bound(p) - 1e-12 * std::max(1.0, l2));
    const double s = p.x_squared_norm() + p.y_squared_norm();
    EXPECT_LE(l2, s + 1e-12 * std::max(1.0, s));
  }
}

TEST(L2Test, Spin1Sweep) {
  const auto ops = spin_operators(Spin::One);
  for (int i = 0; i <= 50; ++i) {
    const double theta = std::numbers::pi / 2 * i / 50.0;
    const CoefficientPair p = coefficients(spin1_state(theta), ops.x, ops.y, {});
    double half = 0.0;
    for (std::size_t j = 0; j < p.n(); ++j) {
      half += 0.5 * (p.x[j] + p.y[j]) * (p.x[j] + p.y[j]);
    }
    EXPECT_GE(l2_bound(p), half - 1e-12);
  }
}

TEST(MondalSumTest, Examples) {
  EXPECT_EQ(mondal_sum_bound(make({1, 0}, {0, 1})), 1.0);
  const CoefficientPair same = make({1, 2}, {1, 2});
  EXPECT_EQ(mondal_sum_bound(same), 10.0);
}

TEST(U2Test, Examples) {
  EXPECT_EQ(u2_bound(make({1, 0}, {0, 1})), 2.0);
  const QuantumState st = random_pure_state(3, 2);
  const Observable a = random_hermitian(3, 4);
  const Observable id(HermitianMatrix::identity(3));
  EXPECT_NEAR(u2_bound(st, a, id, Basis::computational(3)), variance(st, a), 1e-12);
}

TEST(U2Test, Dominates) {
  Rng rng(10);
  for (int trial = 0; trial < 500; ++trial) {
    const CoefficientPair p = random_coefficient_pair(1 + rng.below(8), rng, 0.1);
    const double s = p.x_squared_norm() + p.y_squared_norm();
    EXPECT_GE(u2_bound(p), s - 1e-9 * std::max(1.0, s));
  }
}

TEST(SumIntervalTest, EqualCoefficientsDegenerate) {
  const QuantumState st = random_pure_state(3, 21);
  const Observable a = random_hermitian(3, 22);
  const SumInterval si = sum_interval(st, a, a, BoundConfig{});
  EXPECT_NEAR(si.lower.value, si.sum, 1e-12 * std::max(1.0, si.sum));
  EXPECT_GE(si.upper, si.sum);
  EXPECT_TRUE(si.contains());
}

TEST(SumIntervalTest, ScenarioFamilies) {
  const auto spin1 = spin_operators(Spin::One);
  const auto pauli = pauli_operators();
  for (int i = 0; i <= 40; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / 40.0;
    EXPECT_TRUE(sum_interval(spin1_state(theta), spin1.x, spin1.y, {}).contains());
    EXPECT_TRUE(sum_interval(spin_half_rho(theta), pauli.x, pauli.z, {}).contains());
  }
}

}  // namespace
}  // namespace varbounds
