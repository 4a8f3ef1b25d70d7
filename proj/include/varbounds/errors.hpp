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

#ifndef VARBOUNDS_ERRORS_HPP_
#define VARBOUNDS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace varbounds {

// Operand shapes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a domain invariant (non-Hermitian matrix, unnormalized
// state, non-finite entry, invalid permutation, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The Jacobi eigensolver ran out of sweeps.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// A vector-based construction was requested for a genuinely mixed state.
class PurityError : public std::runtime_error {
 public:
  PurityError(const std::string& what, double top_eigenvalue)
      : std::runtime_error(what), top_eigenvalue_(top_eigenvalue) {}
  double top_eigenvalue() const noexcept { return top_eigenvalue_; }

 private:
  double top_eigenvalue_;
};

// Zero-filtering left no components to build an upper bound from.
class EmptySupportError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace varbounds

#endif  // VARBOUNDS_ERRORS_HPP_
