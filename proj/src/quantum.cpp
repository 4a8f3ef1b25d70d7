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

#include "varbounds/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "varbounds/errors.hpp"

namespace varbounds {
namespace {

void require_dim(std::size_t state_dim, std::size_t op_dim, const char* where) {
  if (state_dim != op_dim) {
    std::ostringstream msg;
    msg << where << ": state dimension " << state_dim
        << " does not match operator dimension " << op_dim;
    throw DimensionError(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Observable

Observable::Observable(HermitianMatrix m)
    : matrix_(std::move(m)), spectrum_(hermitian_eig(matrix_)) {}

Observable Observable::scaled(double factor) const {
  return Observable(matrix_.scaled(factor));
}

// ---------------------------------------------------------------------------
// QuantumState

QuantumState QuantumState::pure(ComplexVector psi) {
  if (psi.dim() == 0) throw DimensionError("pure state: dimension must be >= 1");
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "pure state is not normalized: ||psi|| = " << norm;
    throw ValidationError(msg.str());
  }
  psi *= 1.0 / norm;
  return QuantumState(std::move(psi));
}

QuantumState QuantumState::density(HermitianMatrix rho) {
  const double tr = rho.trace();
  if (std::abs(tr - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw ValidationError(msg.str());
  }
  const auto spec = hermitian_eig(rho);
  if (spec.eigenvalues.front() < -kNormTolerance) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: eigenvalue "
        << spec.eigenvalues.front();
    throw ValidationError(msg.str());
  }
  return QuantumState(std::move(rho));
}

std::size_t QuantumState::dim() const {
  return std::visit([](const auto& r) { return r.dim(); }, representation_);
}

const ComplexVector& QuantumState::vector() const {
  if (!is_pure()) throw std::logic_error("state is a density matrix");
  return std::get<ComplexVector>(representation_);
}

HermitianMatrix QuantumState::density_matrix() const {
  if (is_pure()) {
    const auto& psi = std::get<ComplexVector>(representation_);
    return HermitianMatrix(Matrix::outer(psi, psi));
  }
  return std::get<HermitianMatrix>(representation_);
}

double QuantumState::purity() const {
  if (is_pure()) return 1.0;
  const auto& rho = std::get<HermitianMatrix>(representation_);
  return (rho.matrix() * rho.matrix()).trace().real();
}

// ---------------------------------------------------------------------------
// Expectations

Complex expectation(const QuantumState& state, const Matrix& op) {
  require_dim(state.dim(), op.dim(), "expectation");
  if (state.is_pure()) {
    const auto& psi = state.vector();
    return inner(psi, matvec(op, psi));
  }
  const HermitianMatrix rho = state.density_matrix();
  Complex tr = 0.0;
  for (std::size_t i = 0; i < op.dim(); ++i) {
    for (std::size_t j = 0; j < op.dim(); ++j) tr += rho(i, j) * op(j, i);
  }
  return tr;
}

double expectation(const QuantumState& state, const Observable& obs) {
  const Complex e = expectation(state, obs.matrix().matrix());
  const double tol = scaled_tolerance(1e-10, obs.matrix().frobenius_norm());
  if (std::abs(e.imag()) > tol) {
    std::ostringstream msg;
    msg << "expectation has imaginary residual " << e.imag();
    throw ValidationError(msg.str());
  }
  return e.real();
}

double variance(const QuantumState& state, const Observable& obs) {
  const double mean = expectation(state, obs);
  const HermitianMatrix centered = obs.matrix().shifted(mean);
  double v = 0.0;
  if (state.is_pure()) {
    v = matvec(centered, state.vector()).squared_norm();
  } else {
    v = expectation(state, centered.matrix() * centered.matrix()).real();
  }
  return std::max(v, 0.0);
}

CenteredObservable center(const QuantumState& state, const Observable& obs) {
  CenteredObservable out;
  out.mean = expectation(state, obs);
  out.centered = obs.matrix().shifted(out.mean);
  out.shifted_eigenvalues = obs.eigenvalues();
  for (double& e : out.shifted_eigenvalues) e -= out.mean;
  return out;
}

// ---------------------------------------------------------------------------
// Basis

Basis Basis::computational(std::size_t dim) {
  return Basis(Matrix::identity(dim), "computational");
}

Basis Basis::eigenbasis(const Observable& obs, std::string label) {
  return Basis(obs.spectrum().eigenvector_matrix(), std::move(label));
}

Basis Basis::from_columns(Matrix columns, std::string label) {
  std::vector<ComplexVector> cols;
  cols.reserve(columns.dim());
  for (std::size_t j = 0; j < columns.dim(); ++j) cols.push_back(columns.column(j));
  const double residual = orthonormality_residual(cols);
  if (residual > kOrthonormalTolerance) {
    std::ostringstream msg;
    msg << "basis is not orthonormal: residual " << residual;
    throw ValidationError(msg.str());
  }
  return Basis(std::move(columns), std::move(label));
}

// ---------------------------------------------------------------------------
// Coefficient pairs

const char* to_string(Construction c) {
  switch (c) {
    case Construction::BasisExpansion: return "basis";
    case Construction::FidelityWeighted: return "fidelity";
    case Construction::Explicit: return "explicit";
  }
  return "?";
}

const char* to_string(BasisChoice c) {
  switch (c) {
    case BasisChoice::Computational: return "computational";
    case BasisChoice::EigenA: return "eigen_a";
    case BasisChoice::EigenB: return "eigen_b";
    case BasisChoice::Explicit: return "explicit";
  }
  return "?";
}

double CoefficientPair::x_squared_norm() const {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double CoefficientPair::y_squared_norm() const {
  double s = 0.0;
  for (double v : y) s += v * v;
  return s;
}

CoefficientPair CoefficientPair::from_vectors(std::vector<double> x,
                                              std::vector<double> y) {
  if (x.empty()) throw ValidationError("coefficient vectors must be nonempty");
  if (x.size() != y.size()) {
    throw DimensionError("coefficient vectors differ in length");
  }
  for (const auto* vec : {&x, &y}) {
    for (double v : *vec) {
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError("coefficient entries must be finite and >= 0");
      }
    }
  }
  CoefficientPair pair;
  pair.x = std::move(x);
  pair.y = std::move(y);
  pair.construction = Construction::Explicit;
  return pair;
}

QuantumState extract_pure(const QuantumState& state) {
  if (state.is_pure()) return state;
  const auto spec = hermitian_eig(state.density_matrix());
  const double top = spec.eigenvalues.back();
  if (top < 1.0 - 1e-8) {
    std::ostringstream msg;
    msg << "state is mixed (top eigenvalue " << top
        << "); vector-based constructions need a pure state";
    throw PurityError(msg.str(), top);
  }
  ComplexVector psi = spec.eigenvectors.back();
  psi *= 1.0 / psi.norm();
  return QuantumState::pure(std::move(psi));
}

CoefficientPair coefficients_basis(const QuantumState& state,
                                   const Observable& a, const Observable& b,
                                   const Basis& basis) {
  require_dim(state.dim(), a.dim(), "coefficients_basis");
  require_dim(state.dim(), b.dim(), "coefficients_basis");
  require_dim(state.dim(), basis.dim(), "coefficients_basis");
  const QuantumState pure = extract_pure(state);
  const ComplexVector& psi = pure.vector();
  const ComplexVector a_psi = matvec(center(pure, a).centered, psi);
  const ComplexVector b_psi = matvec(center(pure, b).centered, psi);

  CoefficientPair pair;
  pair.construction = Construction::BasisExpansion;
  pair.basis_label = basis.label();
  pair.x.resize(state.dim());
  pair.y.resize(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const ComplexVector frame = basis.vector(i);
    pair.x[i] = std::abs(inner(frame, a_psi));
    pair.y[i] = std::abs(inner(frame, b_psi));
  }
  return pair;
}

namespace {

std::vector<double> fidelity_weights(const QuantumState& state,
                                     const Observable& obs) {
  const double mean = expectation(state, obs);
  const auto& spec = obs.spectrum();
  std::vector<double> out(spec.dim());
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    const double fidelity =
        std::max(expectation(state, Matrix::outer(spec.eigenvectors[i],
                                                  spec.eigenvectors[i]))
                     .real(),
                 0.0);
    out[i] = std::abs(spec.eigenvalues[i] - mean) * std::sqrt(fidelity);
  }
  return out;
}

}  // namespace

CoefficientPair coefficients_fidelity(const QuantumState& state,
                                      const Observable& a,
                                      const Observable& b) {
  require_dim(state.dim(), a.dim(), "coefficients_fidelity");
  require_dim(state.dim(), b.dim(), "coefficients_fidelity");
  CoefficientPair pair;
  pair.construction = Construction::FidelityWeighted;
  pair.basis_label = "eigenbases";
  pair.x = fidelity_weights(state, a);
  pair.y = fidelity_weights(state, b);
  return pair;
}

Basis resolve_basis(const BoundConfig& config, const Observable& a,
                    const Observable& b) {
  switch (config.basis) {
    case BasisChoice::Computational: return Basis::computational(a.dim());
    case BasisChoice::EigenA: return Basis::eigenbasis(a, "eigen_a");
    case BasisChoice::EigenB: return Basis::eigenbasis(b, "eigen_b");
    case BasisChoice::Explicit:
      if (!config.explicit_basis) {
        throw ValidationError("explicit basis requested but none supplied");
      }
      return *config.explicit_basis;
  }
  throw ValidationError("unknown basis choice");
}

CoefficientPair coefficients(const QuantumState& state, const Observable& a,
                             const Observable& b, const BoundConfig& config) {
  if (config.construction == Construction::FidelityWeighted) {
    return coefficients_fidelity(state, a, b);
  }
  if (config.construction != Construction::BasisExpansion) {
    throw ValidationError("quantum coefficients need basis or fidelity");
  }
  return coefficients_basis(state, a, b, resolve_basis(config, a, b));
}

// ---------------------------------------------------------------------------
// Outcome distributions

OutcomeDistribution outcome_distribution(const QuantumState& state,
                                         const Observable& obs) {
  require_dim(state.dim(), obs.dim(), "outcome_distribution");
  const auto& spec = obs.spectrum();
  OutcomeDistribution dist;
  dist.outcomes = spec.eigenvalues;
  dist.probabilities.resize(spec.dim());
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    double p = 0.0;
    if (state.is_pure()) {
      p = std::norm(inner(spec.eigenvectors[i], state.vector()));
    } else {
      const auto& v = spec.eigenvectors[i];
      p = expectation(state, Matrix::outer(v, v)).real();
    }
    dist.probabilities[i] = std::max(p, 0.0);
  }
  return dist;
}

double shannon_entropy(const OutcomeDistribution& dist,
                       double merge_tolerance) {
  const std::size_t n = dist.outcomes.size();
  if (dist.probabilities.size() != n) {
    throw DimensionError("outcome and probability lists differ in length");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return dist.outcomes[i] < dist.outcomes[j];
  });

  double entropy = 0.0;
  std::size_t k = 0;
  while (k < n) {
    double p = dist.probabilities[order[k]];
    std::size_t next = k + 1;
    while (next < n && dist.outcomes[order[next]] - dist.outcomes[order[next - 1]] <=
                           merge_tolerance) {
      p += dist.probabilities[order[next]];
      ++next;
    }
    if (p > 0.0) entropy -= p * std::log(p);
    k = next;
  }
  return std::max(entropy, 0.0);
}

}  // namespace varbounds
