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
#include <complex>

#include <gtest/gtest.h>

#include "varbounds/errors.hpp"
#include "varbounds/linalg.hpp"
#include "varbounds/random.hpp"
#include "varbounds/scenarios.hpp"

namespace varbounds {
namespace {

const Complex I(0.0, 1.0);

HermitianMatrix sigma_x() { return HermitianMatrix({{0, 1}, {1, 0}}); }
HermitianMatrix sigma_y() { return HermitianMatrix({{0, -I}, {I, 0}}); }
HermitianMatrix sigma_z() { return HermitianMatrix({{1, 0}, {0, -1}}); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
  }
  return m;
}

TEST(HermitianMatrixTest, RejectsNonHermitian) {
  EXPECT_THROW(HermitianMatrix({{0, 1}, {2, 0}}), ValidationError);
  EXPECT_THROW(HermitianMatrix({{I, 0}, {0, 1}}), ValidationError);
}

TEST(HermitianMatrixTest, RejectsNonSquare) {
  EXPECT_THROW(Matrix({{1, 2}, {3}}), DimensionError);
}

TEST(HermitianMatrixTest, AcceptsTinyAsymmetry) {
  HermitianMatrix h({{1, Complex(2, 1e-14)}, {Complex(2, -1e-14), 3}});
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
}

TEST(EigenTest, IdentityGivesStandardBasis) {
  const SpectralDecomposition s = hermitian_eig(HermitianMatrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(s.eigenvalues[i], 1.0);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(s.eigenvectors[i][j], Complex(i == j ? 1.0 : 0.0));
    }
  }
}

TEST(EigenTest, SigmaX) {
  const SpectralDecomposition s = hermitian_eig(sigma_x());
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-12);
  const double h = std::sqrt(0.5);
  EXPECT_NEAR(std::abs(s.eigenvectors[0][0] - h), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.eigenvectors[0][1] + h), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.eigenvectors[1][0] - h), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.eigenvectors[1][1] - h), 0.0, 1e-12);
}

TEST(EigenTest, RandomReconstruction) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 15;
    const Observable obs = random_hermitian(n, seed);
    const SpectralDecomposition& s = obs.spectrum();
    EXPECT_LE(max_abs_diff(s.reconstruct(), obs.matrix().matrix()), 1e-11);
    EXPECT_LE(orthonormality_residual(s.eigenvectors), 1e-11);
    for (std::size_t i = 1; i < n; ++i) {
      EXPECT_LE(s.eigenvalues[i - 1], s.eigenvalues[i]);
    }
  }
}

TEST(EigenTest, EightByEightResidual) {
  const Observable obs = random_hermitian(8, 12345);
  EXPECT_LE(max_abs_diff(obs.spectrum().reconstruct(), obs.matrix().matrix()),
            1e-11);
}

TEST(EigenTest, PhaseConvention) {
  const Observable obs = random_hermitian(5, 99);
  for (const ComplexVector& v : obs.spectrum().eigenvectors) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (std::abs(v[i]) > 1e-10) {
        EXPECT_GT(v[i].real(), 0.0);
        EXPECT_EQ(v[i].imag(), 0.0);
        break;
      }
    }
  }
}

TEST(EigenTest, Deterministic) {
  const HermitianMatrix h = random_hermitian(6, 7).matrix();
  EXPECT_EQ(hermitian_eig(h).eigenvalues, hermitian_eig(h).eigenvalues);
  EXPECT_EQ(hermitian_eig(h).eigenvectors, hermitian_eig(h).eigenvectors);
}

TEST(MatvecTest, Examples) {
  const ComplexVector v{Complex(1, 2), Complex(-3, 0.5)};
  EXPECT_EQ(matvec(HermitianMatrix::identity(2), v), v);
  const ComplexVector e0{1, 0};
  const ComplexVector out = matvec(sigma_x(), e0);
  EXPECT_EQ(out[0], Complex(0));
  EXPECT_EQ(out[1], Complex(1));
  const ComplexVector lx = matvec(spin_operators(Spin::One).x.matrix(),
                                  ComplexVector{1, 0, 0});
  EXPECT_NEAR(std::abs(lx[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(lx[1] - std::sqrt(0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(lx[2]), 0.0, 1e-15);
}

TEST(MatvecTest, DimensionMismatch) {
  EXPECT_THROW(matvec(sigma_x(), ComplexVector{1, 0, 0}), DimensionError);
}

TEST(InnerTest, PositiveNorm) {
  const ComplexVector v{Complex(1, 2), Complex(-3, 0.5)};
  const Complex n = inner(v, v);
  EXPECT_DOUBLE_EQ(n.real(), v.squared_norm());
  EXPECT_EQ(n.imag(), 0.0);
  EXPECT_EQ(inner(ComplexVector{I, 0}, ComplexVector{1, 0}), -I);
}

TEST(CommutatorTest, Pauli) {
  const Matrix c = commutator(sigma_x(), sigma_y());
  const Matrix expected = Complex(0, 2) * sigma_z().matrix();
  EXPECT_LE(max_abs_diff(c, expected), 1e-15);
  const HermitianMatrix ac = anticommutator(sigma_x(), sigma_x());
  EXPECT_LE(max_abs_diff(ac.matrix(), Complex(2) * Matrix::identity(2)), 1e-15);
}

TEST(ScaledToleranceTest, Hybrid) {
  EXPECT_DOUBLE_EQ(scaled_tolerance(1e-9, 0.5), 1e-9);
  EXPECT_DOUBLE_EQ(scaled_tolerance(1e-9, 100.0), 1e-7);
}

}  // namespace
}  // namespace varbounds
