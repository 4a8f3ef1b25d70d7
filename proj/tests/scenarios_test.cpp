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
#include <numbers>

#include <gtest/gtest.h>

#include "varbounds/errors.hpp"
#include "varbounds/scenarios.hpp"

namespace varbounds {
namespace {

const Complex I(0.0, 1.0);

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
  }
  return m;
}

TEST(SpinOperatorsTest, CommutationRelations) {
  for (Spin j : {Spin::Half, Spin::One}) {
    const SpinOperators ops = spin_operators(j);
    const Matrix& x = ops.x.matrix().matrix();
    const Matrix& y = ops.y.matrix().matrix();
    const Matrix& z = ops.z.matrix().matrix();
    EXPECT_LE(max_abs_diff(commutator(x, y), I * z), 1e-15);
    EXPECT_LE(max_abs_diff(commutator(y, z), I * x), 1e-15);
    EXPECT_LE(max_abs_diff(commutator(z, x), I * y), 1e-15);
  }
}

TEST(SpinOperatorsTest, Diagonals) {
  const SpinOperators pauli = pauli_operators();
  EXPECT_EQ(pauli.z.matrix()(0, 0), Complex(1));
  EXPECT_EQ(pauli.z.matrix()(1, 1), Complex(-1));
  const SpinOperators one = spin_operators(Spin::One);
  EXPECT_EQ(one.z.matrix()(0, 0), Complex(1));
  EXPECT_EQ(one.z.matrix()(1, 1), Complex(0));
  EXPECT_EQ(one.z.matrix()(2, 2), Complex(-1));
}

TEST(Spin1StateTest, Examples) {
  const QuantumState s0 = spin1_state(0.0);
  EXPECT_EQ(s0.vector(), (ComplexVector{1, 0, 0}));
  const QuantumState s1 = spin1_state(std::numbers::pi / 2);
  const ComplexVector& b = s1.vector();
  EXPECT_NEAR(std::abs(b[1] + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(b.norm(), 1.0, 1e-15);
  const QuantumState s2 = spin1_state(std::numbers::pi / 4);
  const ComplexVector& c = s2.vector();
  EXPECT_NEAR(c[0].real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(c[1].real(), -std::sqrt(0.5), 1e-15);
  EXPECT_EQ(c[2], Complex(0));
}

TEST(SpinHalfRhoTest, Examples) {
  const HermitianMatrix r0 = spin_half_rho(0.0).density_matrix();
  EXPECT_LE(max_abs_diff(r0.matrix(), Matrix({{0.5, 0.5}, {0.5, 0.5}})), 1e-15);

  const SpinOperators p = pauli_operators();
  const Matrix expected =
      Complex(0.5) * (Matrix::identity(2) +
                      Complex(std::sqrt(3.0) / 2) * p.y.matrix().matrix() +
                      Complex(0.5) * p.z.matrix().matrix());
  EXPECT_LE(max_abs_diff(spin_half_rho(std::numbers::pi).density_matrix().matrix(),
                         expected),
            1e-15);

  for (int i = 0; i < 50; ++i) {
    const QuantumState rho = spin_half_rho(0.37 * i);
    const double bx = expectation(rho, p.x);
    const double by = expectation(rho, p.y);
    const double bz = expectation(rho, p.z);
    EXPECT_NEAR(rho.density_matrix().trace(), 1.0, 1e-12);
    EXPECT_NEAR(bx * bx + by * by + bz * bz, 1.0, 1e-12);
    EXPECT_NEAR(rho.purity(), 1.0, 1e-12);
  }
}

TEST(RandomTest, Deterministic) {
  EXPECT_EQ(random_pure_state(5, 9).vector(), random_pure_state(5, 9).vector());
  EXPECT_EQ(random_hermitian(5, 9).matrix(), random_hermitian(5, 9).matrix());
  EXPECT_NE(random_pure_state(5, 9).vector(), random_pure_state(5, 10).vector());
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_NEAR(random_pure_state(1 + s % 7, s).vector().norm(), 1.0, 1e-12);
  }
}

TEST(InstantiateTest, Kinds) {
  ScenarioSpec spec;
  spec.theta = 0.3;
  const ScenarioInstance s1 = instantiate(spec);
  EXPECT_EQ(s1.state.dim(), 3u);
  spec.kind = ScenarioKind::SpinHalfSxSz;
  EXPECT_EQ(instantiate(spec).state.dim(), 2u);
  spec.kind = ScenarioKind::Custom;
  EXPECT_THROW(instantiate(spec), ValidationError);
  const SpinOperators p = pauli_operators();
  spec.custom = CustomFamily{p.x, p.z, ComplexVector{1, 0}, ComplexVector{0, 1}};
  spec.theta = std::numbers::pi / 2;
  const ScenarioInstance c = instantiate(spec);
  EXPECT_NEAR(std::abs(c.state.vector()[1]), 1.0, 1e-15);
}

}  // namespace
}  // namespace varbounds
