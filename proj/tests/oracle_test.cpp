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


#include <cmath>

#include <gtest/gtest.h>

#include "varbounds/oracle.hpp"
#include "varbounds/product_bounds.hpp"
#include "varbounds/random.hpp"
#include "varbounds/scenarios.hpp"

namespace varbounds {
namespace {

const Complex I(0.0, 1.0);

double entry(const OracleReport& r, const std::string& name) {
  for (const OracleEntry& e : r.entries) {
    if (e.name == name) return e.oracle_value;
  }
  ADD_FAILURE() << "missing oracle entry " << name;
  return std::nan("");
}

TEST(OracleExhaustiveTest, Examples) {
  EXPECT_EQ(oracle_exhaustive_perm(CoefficientPair::from_vectors({1, 3}, {4, 2}), 2),
            196.0);
  const CoefficientPair same = CoefficientPair::from_vectors({1, 2, 3}, {1, 2, 3});
  EXPECT_EQ(oracle_exhaustive_perm(same, 3), partial_cs_bound(same, 0));
}

TEST(OracleExhaustiveTest, MatchesReducedSearch) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const CoefficientPair p = random_coefficient_pair(3, rng);
    for (std::size_t k = 0; k <= 3; ++k) {
      const double raw = oracle_exhaustive_perm(p, k);
      EXPECT_NEAR(max_permuted_partial_cs(p, k, PermutationStrategy::Exhaustive).value,
                  raw, 1e-12 * std::max(1.0, raw));
    }
  }
}

TEST(OracleCheckTest, Spin1AtZero) {
  const auto ops = spin_operators(Spin::One);
  const OracleReport r = oracle_bound_check(spin1_state(0.0), ops.x, ops.y, {});
  EXPECT_NEAR(entry(r, "product"), 0.25, 1e-15);
  EXPECT_NEAR(entry(r, "schrodinger"), 0.25, 1e-15);
  EXPECT_LE(r.max_discrepancy, 1e-9);
}

TEST(OracleCheckTest, QubitPauli) {
  const QuantumState ket0 = QuantumState::pure(ComplexVector{1, 0});
  const Observable sx({{0, 1}, {1, 0}});
  const Observable sy({{0, -I}, {I, 0}});
  const OracleReport r = oracle_bound_check(ket0, sx, sy, {});
  EXPECT_NEAR(entry(r, "product"), 1.0, 1e-15);
  EXPECT_NEAR(entry(r, "schrodinger"), 1.0, 1e-15);
  EXPECT_LE(r.max_discrepancy, 1e-9);
}

TEST(OracleCheckTest, RandomTriples) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const QuantumState st = random_pure_state(n, seed);
    const Observable a = random_hermitian(n, seed + 300);
    const Observable b = random_hermitian(n, seed + 600);
    BoundConfig config;
    config.construction = seed % 2 ? Construction::FidelityWeighted
                                   : Construction::BasisExpansion;
    const OracleReport r = oracle_bound_check(st, a, b, config);
    EXPECT_LE(r.max_discrepancy, 1e-9) << "seed " << seed << " worst " << r.worst;
  }
}

}  // namespace
}  // namespace varbounds
