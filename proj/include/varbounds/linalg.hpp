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

#ifndef VARBOUNDS_LINALG_HPP_
#define VARBOUNDS_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace varbounds {

using Complex = std::complex<double>;

// Absolute-relative hybrid tolerance: tol * max(1, scale).
inline double scaled_tolerance(double tol, double scale) {
  return tol * (scale > 1.0 ? scale : 1.0);
}

// Dense complex column vector. Entries are always finite.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector basis_vector(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Complex> entries() const { return entries_; }

  double squared_norm() const;
  double norm() const;

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(Complex factor);

  bool operator==(const ComplexVector&) const = default;

 private:
  std::vector<Complex> entries_;
};

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator*(Complex factor, ComplexVector v);

// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  // Rows of equal length; throws DimensionError on ragged or non-square input
  // and ValidationError on non-finite entries.
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);
  Matrix(std::size_t dim, std::vector<Complex> row_major);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);
  static Matrix outer(const ComplexVector& ket, const ComplexVector& bra);
  // Columns are the given vectors.
  static Matrix from_columns(std::span<const ComplexVector> columns);

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  ComplexVector column(std::size_t col) const;

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex factor);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(Complex factor, Matrix m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
ComplexVector operator*(const Matrix& m, const ComplexVector& v);

// Hermitian matrix. Construction checks |m(i,j) - conj(m(j,i))| against
// kHermitianTolerance * max(1, ||m||_F), rejects beyond it and symmetrizes
// within it.
class HermitianMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;

  HermitianMatrix() = default;
  explicit HermitianMatrix(Matrix m);
  HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static HermitianMatrix identity(std::size_t dim);

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return m_(row, col);
  }
  double trace() const { return m_.trace().real(); }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  HermitianMatrix scaled(double factor) const;
  // this - shift * I
  HermitianMatrix shifted(double shift) const;

  bool operator==(const HermitianMatrix&) const = default;

 private:
  Matrix m_;
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  std::vector<ComplexVector> eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
  Matrix eigenvector_matrix() const;
  // V diag(lambda) V^dagger
  Matrix reconstruct() const;
};

struct EigenOptions {
  int max_sweeps = 100;
  // Degenerate-group width, relative to max(1, ||H||_F).
  double degeneracy_tolerance = 1e-10;
};

// Cyclic complex Jacobi. Eigenvalues ascending; each eigenvector is
// phase-fixed so its first component above 1e-10 in modulus is real
// positive, and eigenvectors within a degenerate group are ordered by their
// component moduli, lexicographically descending. Throws ConvergenceError
// after options.max_sweeps sweeps.
SpectralDecomposition hermitian_eig(const HermitianMatrix& h,
                                    const EigenOptions& options = {});

ComplexVector matvec(const Matrix& m, const ComplexVector& v);
inline ComplexVector matvec(const HermitianMatrix& h, const ComplexVector& v) {
  return matvec(h.matrix(), v);
}

// Conjugate-linear in the first argument.
Complex inner(const ComplexVector& u, const ComplexVector& v);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
inline Matrix commutator(const HermitianMatrix& a, const HermitianMatrix& b) {
  return commutator(a.matrix(), b.matrix());
}
HermitianMatrix anticommutator(const HermitianMatrix& a,
                               const HermitianMatrix& b);

// max |(V^dagger V - I)_{ij}|
double orthonormality_residual(std::span<const ComplexVector> columns);

}  // namespace varbounds

#endif  // VARBOUNDS_LINALG_HPP_
