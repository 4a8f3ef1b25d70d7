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

#include "varbounds/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "varbounds/errors.hpp"

namespace varbounds {
namespace {

void require_finite(const Complex& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ValidationError("non-finite complex entry");
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    std::ostringstream msg;
    msg << where << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::size_t dim) : entries_(dim) {}

ComplexVector::ComplexVector(std::vector<Complex> entries)
    : entries_(std::move(entries)) {
  for (const auto& z : entries_) require_finite(z);
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

ComplexVector ComplexVector::basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis_vector: index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

double ComplexVector::squared_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return s;
}

double ComplexVector::norm() const { return std::sqrt(squared_norm()); }

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require_same_dim(dim(), other.dim(), "vector +");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require_same_dim(dim(), other.dim(), "vector -");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(Complex factor) {
  for (auto& z : entries_) z *= factor;
  return *this;
}

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs) {
  return lhs += rhs;
}
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs) {
  return lhs -= rhs;
}
ComplexVector operator*(Complex factor, ComplexVector v) { return v *= factor; }

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    require_same_dim(row.size(), dim_, "Matrix rows");
    for (const auto& z : row) {
      require_finite(z);
      data_.push_back(z);
    }
  }
}

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  require_same_dim(data_.size(), dim_ * dim_, "Matrix data");
  for (const auto& z : data_) require_finite(z);
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::outer(const ComplexVector& ket, const ComplexVector& bra) {
  require_same_dim(ket.dim(), bra.dim(), "outer");
  Matrix m(ket.dim());
  for (std::size_t i = 0; i < ket.dim(); ++i) {
    for (std::size_t j = 0; j < bra.dim(); ++j) {
      m(i, j) = ket[i] * std::conj(bra[j]);
    }
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const ComplexVector> columns) {
  const std::size_t n = columns.size();
  Matrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    require_same_dim(columns[j].dim(), n, "from_columns");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

ComplexVector Matrix::column(std::size_t col) const {
  ComplexVector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, col);
  return v;
}

Matrix Matrix::adjoint() const {
  Matrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(dim_, other.dim_, "matrix +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(dim_, other.dim_, "matrix -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex factor) {
  for (auto& z : data_) z *= factor;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Complex factor, Matrix m) { return m *= factor; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs.dim(), rhs.dim(), "matrix *");
  const std::size_t n = lhs.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const Matrix& m, const ComplexVector& v) {
  return matvec(m, v);
}

ComplexVector matvec(const Matrix& m, const ComplexVector& v) {
  require_same_dim(m.dim(), v.dim(), "matvec");
  ComplexVector out(v.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  return a * b + b * a;
}

HermitianMatrix anticommutator(const HermitianMatrix& a,
                               const HermitianMatrix& b) {
  return HermitianMatrix(anticommutator(a.matrix(), b.matrix()));
}

double orthonormality_residual(std::span<const ComplexVector> columns) {
  double worst = 0.0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const Complex expected = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(columns[i], columns[j]) - expected));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
  const std::size_t n = m_.dim();
  if (n == 0) throw DimensionError("HermitianMatrix: dimension must be >= 1");
  const double tol = scaled_tolerance(kHermitianTolerance, m_.frobenius_norm());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      worst = std::max(worst, std::abs(m_(i, j) - std::conj(m_(j, i))));
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |H_ij - conj(H_ji)| = " << worst;
    throw ValidationError(msg.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = m_(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
    }
  }
}

HermitianMatrix::HermitianMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : HermitianMatrix(Matrix(rows)) {}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  return HermitianMatrix(Matrix::identity(dim));
}

HermitianMatrix HermitianMatrix::scaled(double factor) const {
  return HermitianMatrix(Complex(factor) * m_);
}

HermitianMatrix HermitianMatrix::shifted(double shift) const {
  Matrix m = m_;
  for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) -= shift;
  return HermitianMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Eigensolver

Matrix SpectralDecomposition::eigenvector_matrix() const {
  return Matrix::from_columns(eigenvectors);
}

Matrix SpectralDecomposition::reconstruct() const {
  const Matrix v = eigenvector_matrix();
  return v * Matrix::diagonal(eigenvalues) * v.adjoint();
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary U = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on rows/columns p, q, where a(p,q) = |a(p,q)| e^{i phi}.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * std::conj(phase);
  const Complex u_qq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
}

void fix_phase(ComplexVector& vec) {
  constexpr double kLeadingThreshold = 1e-10;
  for (std::size_t i = 0; i < vec.dim(); ++i) {
    const double mag = std::abs(vec[i]);
    if (mag > kLeadingThreshold) {
      vec *= std::conj(vec[i]) / mag;
      vec[i] = mag;
      return;
    }
  }
}

bool moduli_descending(const ComplexVector& a, const ComplexVector& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double ma = std::abs(a[i]);
    const double mb = std::abs(b[i]);
    if (ma != mb) return ma > mb;
  }
  return false;
}

}  // namespace

SpectralDecomposition hermitian_eig(const HermitianMatrix& h,
                                    const EigenOptions& options) {
  const std::size_t n = h.dim();
  const double scale = h.frobenius_norm();
  const double stop = scaled_tolerance(1e-15, scale);

  Matrix a = h.matrix();
  Matrix v = Matrix::identity(n);
  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off > stop) {
    if (sweep == options.max_sweeps) {
      std::ostringstream msg;
      msg << "Jacobi eigensolver did not converge in " << options.max_sweeps
          << " sweeps (off-diagonal norm " << off << ")";
      throw ConvergenceError(msg.str(), off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
    ++sweep;
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(a(idx, idx).real());
    ComplexVector col = v.column(idx);
    fix_phase(col);
    out.eigenvectors.push_back(std::move(col));
  }

  const double degenerate = scaled_tolerance(options.degeneracy_tolerance, scale);
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n &&
           out.eigenvalues[end] - out.eigenvalues[end - 1] <= degenerate) {
      ++end;
    }
    if (end - begin > 1) {
      std::stable_sort(out.eigenvectors.begin() + static_cast<long>(begin),
                       out.eigenvectors.begin() + static_cast<long>(end),
                       moduli_descending);
    }
    begin = end;
  }
  return out;
}

}  // namespace varbounds
