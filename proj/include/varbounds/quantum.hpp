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

#ifndef VARBOUNDS_QUANTUM_HPP_
#define VARBOUNDS_QUANTUM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "varbounds/linalg.hpp"

namespace varbounds {

// Hermitian matrix together with its spectral decomposition, computed once
// at construction.
class Observable {
 public:
  explicit Observable(HermitianMatrix m);
  Observable(std::initializer_list<std::initializer_list<Complex>> rows)
      : Observable(HermitianMatrix(rows)) {}

  std::size_t dim() const { return matrix_.dim(); }
  const HermitianMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  const std::vector<double>& eigenvalues() const {
    return spectrum_.eigenvalues;
  }

  Observable scaled(double factor) const;

 private:
  HermitianMatrix matrix_;
  SpectralDecomposition spectrum_;
};

// Pure vector or density matrix.
class QuantumState {
 public:
  static constexpr double kNormTolerance = 1e-10;

  // Throws ValidationError unless | ||psi|| - 1 | <= 1e-10; the stored vector
  // is renormalized.
  static QuantumState pure(ComplexVector psi);
  // Throws ValidationError unless trace is 1 within 1e-10 and every
  // eigenvalue is >= -1e-10.
  static QuantumState density(HermitianMatrix rho);

  std::size_t dim() const;
  bool is_pure() const {
    return std::holds_alternative<ComplexVector>(representation_);
  }
  // Throws std::logic_error for a density representation.
  const ComplexVector& vector() const;
  // |psi><psi| for pure states.
  HermitianMatrix density_matrix() const;
  // Tr(rho^2)
  double purity() const;

 private:
  explicit QuantumState(std::variant<ComplexVector, HermitianMatrix> rep)
      : representation_(std::move(rep)) {}

  std::variant<ComplexVector, HermitianMatrix> representation_;
};

// <A> for a general (not necessarily Hermitian) matrix.
Complex expectation(const QuantumState& state, const Matrix& op);

// Real expectation of an observable. The imaginary part must vanish within
// 1e-10 * max(1, ||A||_F).
double expectation(const QuantumState& state, const Observable& obs);

// <A^2> - <A>^2, evaluated as <(A - <A>)^2> and clamped at zero.
double variance(const QuantumState& state, const Observable& obs);

// A - <A> I for a fixed state.
struct CenteredObservable {
  double mean = 0.0;
  HermitianMatrix centered;
  // a'_i = a_i - mean, in the eigenvector order of the base observable.
  std::vector<double> shifted_eigenvalues;
};

CenteredObservable center(const QuantumState& state, const Observable& obs);

// Orthonormal frame {|psi_i>}; column i is |psi_i>.
class Basis {
 public:
  static constexpr double kOrthonormalTolerance = 1e-10;

  static Basis computational(std::size_t dim);
  static Basis eigenbasis(const Observable& obs, std::string label);
  // Throws ValidationError unless columns are orthonormal within 1e-10.
  static Basis from_columns(Matrix columns, std::string label = "explicit");

  std::size_t dim() const { return columns_.dim(); }
  const Matrix& columns() const { return columns_; }
  ComplexVector vector(std::size_t i) const { return columns_.column(i); }
  const std::string& label() const { return label_; }

 private:
  Basis(Matrix columns, std::string label)
      : columns_(std::move(columns)), label_(std::move(label)) {}

  Matrix columns_;
  std::string label_;
};

enum class Construction { BasisExpansion, FidelityWeighted, Explicit };

const char* to_string(Construction c);

// Two nonnegative vectors with |x|^2 = V(A), |y|^2 = V(B) (for the quantum
// constructions) or arbitrary nonnegative vectors (Explicit).
struct CoefficientPair {
  std::vector<double> x;
  std::vector<double> y;
  Construction construction = Construction::Explicit;
  std::string basis_label;

  std::size_t n() const { return x.size(); }
  double x_squared_norm() const;
  double y_squared_norm() const;

  // Throws ValidationError on length mismatch, empty input, or negative or
  // non-finite entries.
  static CoefficientPair from_vectors(std::vector<double> x,
                                      std::vector<double> y);
};

// Returns the dominant eigenvector of a density matrix whose top eigenvalue
// is >= 1 - 1e-8; throws PurityError otherwise. Pure states pass through.
QuantumState extract_pure(const QuantumState& state);

// x_i = |<psi_i| A-bar |Psi>|, y_i = |<psi_i| B-bar |Psi>|.
CoefficientPair coefficients_basis(const QuantumState& state,
                                   const Observable& a, const Observable& b,
                                   const Basis& basis);

// x_i = |a'_i| sqrt(<a_i|rho|a_i>), likewise for y. Valid for mixed states.
CoefficientPair coefficients_fidelity(const QuantumState& state,
                                      const Observable& a,
                                      const Observable& b);

enum class BasisChoice { Computational, EigenA, EigenB, Explicit };

const char* to_string(BasisChoice c);

// Which coefficient pair the bound computations use.
struct BoundConfig {
  Construction construction = Construction::BasisExpansion;
  BasisChoice basis = BasisChoice::Computational;
  std::optional<Basis> explicit_basis;
};

Basis resolve_basis(const BoundConfig& config, const Observable& a,
                    const Observable& b);

CoefficientPair coefficients(const QuantumState& state, const Observable& a,
                             const Observable& b, const BoundConfig& config);

struct OutcomeDistribution {
  std::vector<double> outcomes;       // eigenvalues, per eigenvector
  std::vector<double> probabilities;  // <a_i|rho|a_i>
};

OutcomeDistribution outcome_distribution(const QuantumState& state,
                                         const Observable& obs);

// -sum p ln p with 0 ln 0 = 0, natural log. Outcomes equal within
// merge_tolerance are merged before summing.
double shannon_entropy(const OutcomeDistribution& dist,
                       double merge_tolerance = 1e-10);

}  // namespace varbounds

#endif  // VARBOUNDS_QUANTUM_HPP_
