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

#ifndef VARBOUNDS_ENTROPIC_HPP_
#define VARBOUNDS_ENTROPIC_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "varbounds/quantum.hpp"

namespace varbounds {

// H(A) - ln sum_i exp(-alpha (a_i - <A>)^2), which never exceeds
// alpha * V(A). The sum runs over eigenvalues with multiplicity and is
// evaluated with a max-shifted log-sum-exp.
double entropy_variance_bound(const QuantumState& state, const Observable& obs,
                              double alpha);

struct GaussianPeak {
  double t = 0.0;  // argmax of g(t) = sum_i exp(-(e_i - t)^2)
  double g = 0.0;
};

struct CConstantOptions {
  std::size_t grid_points = 4096;
  double refinement_tol = 1e-10;
};

// Maximizes g over [min e_i, max e_i]: dense grid, then golden-section
// refinement inside the bracketing grid cells. Ties on the grid keep the
// smallest t.
GaussianPeak maximize_gaussian_sum(std::span<const double> eigenvalues,
                                   const CConstantOptions& options = {});

struct CConstant {
  double value = 0.0;  // -ln g_A(a0*) - ln g_B(b0*)
  double a0_star = 0.0;
  double b0_star = 0.0;
  std::size_t grid_points = 0;
  double refinement_tol = 0.0;

  bool operator==(const CConstant&) const = default;
};

// Throws ValidationError on an empty spectrum.
CConstant c_constant(std::span<const double> eigs_a,
                     std::span<const double> eigs_b,
                     const CConstantOptions& options = {});

struct EntropicSumBound {
  double value = 0.0;  // H(A) + H(B) + c
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  CConstant c;
  bool premise_holds = false;  // value <= V(A) + V(B)

  bool operator==(const EntropicSumBound&) const = default;
};

EntropicSumBound entropic_sum_bound(const QuantumState& state,
                                    const Observable& a, const Observable& b);

struct EntropicProductBound {
  double value = 0.0;
  // Same expression with the 1/4 factor on (sum_{i<n} x_i y_i)^2, reported
  // for comparison only.
  double value_with_quarter = 0.0;
  double scale = 1.0;           // r with r * x_n = y_n
  bool fallback = false;        // x_n or y_n vanished; value is I_{n-1}
  bool premise_holds = false;   // entropic sum bound holds for (rA, B)
  double entropic_sum = 0.0;    // H(rA) + H(B) + c(rA, B)

  bool operator==(const EntropicProductBound&) const = default;
};

// Lower bound on V(A)V(B) from I_{n-1} with x_n^2 (V(rA) + V(B)) replaced by
// x_n^2 (H(rA) + H(B) + c), where A is rescaled so x_n = y_n and the result
// is divided by r^2. Basis construction; needs a pure state and n >= 2.
// `entropy_sum_override` replaces H(A) + H(B) with a caller-supplied lower
// bound (any entropic uncertainty relation); c is still added.
EntropicProductBound entropic_product_bound(
    const QuantumState& state, const Observable& a, const Observable& b,
    const Basis& basis, std::optional<double> entropy_sum_override = {},
    const CConstantOptions& options = {});

}  // namespace varbounds

#endif  // VARBOUNDS_ENTROPIC_HPP_
