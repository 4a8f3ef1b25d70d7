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

#include "varbounds/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "varbounds/errors.hpp"
#include "varbounds/product_bounds.hpp"

namespace varbounds {
namespace {

double gaussian_sum(std::span<const double> eigenvalues, double t) {
  double g = 0.0;
  for (double e : eigenvalues) g += std::exp(-(e - t) * (e - t));
  return g;
}

double entropy_of(const QuantumState& state, const Observable& obs) {
  return shannon_entropy(outcome_distribution(state, obs));
}

}  // namespace

double entropy_variance_bound(const QuantumState& state, const Observable& obs,
                              double alpha) {
  if (!std::isfinite(alpha)) throw ValidationError("alpha must be finite");
  const double mean = expectation(state, obs);
  std::vector<double> exponents;
  exponents.reserve(obs.dim());
  for (double e : obs.eigenvalues()) {
    exponents.push_back(-alpha * (e - mean) * (e - mean));
  }
  const double shift = *std::max_element(exponents.begin(), exponents.end());
  double s = 0.0;
  for (double v : exponents) s += std::exp(v - shift);
  return entropy_of(state, obs) - (shift + std::log(s));
}

GaussianPeak maximize_gaussian_sum(std::span<const double> unsorted,
                                   const CConstantOptions& options) {
  if (unsorted.empty()) throw ValidationError("empty spectrum");
  std::vector<double> eigenvalues(unsorted.begin(), unsorted.end());
  std::sort(eigenvalues.begin(), eigenvalues.end());
  const auto [lo_it, hi_it] =
      std::minmax_element(eigenvalues.begin(), eigenvalues.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(hi > lo) || options.grid_points < 2) {
    return {lo, gaussian_sum(eigenvalues, lo)};
  }

  const std::size_t last = options.grid_points - 1;
  const auto grid = [&](std::size_t i) {
    return i == last ? hi : lo + (hi - lo) * static_cast<double>(i) /
                                     static_cast<double>(last);
  };
  std::vector<double> values(last + 1);
  for (std::size_t i = 0; i <= last; ++i) values[i] = gaussian_sum(eigenvalues, grid(i));

  // Golden-section search on the two grid cells around a grid maximum.
  const auto refine = [&](std::size_t i) -> GaussianPeak {
    double a = grid(i == 0 ? 0 : i - 1);
    double b = grid(i == last ? last : i + 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = gaussian_sum(eigenvalues, c);
    double gd = gaussian_sum(eigenvalues, d);
    while (b - a > options.refinement_tol) {
      if (gc >= gd) {
        b = d;
        d = c;
        gd = gc;
        c = b - inv_phi * (b - a);
        gc = gaussian_sum(eigenvalues, c);
      } else {
        a = c;
        c = d;
        gc = gd;
        d = a + inv_phi * (b - a);
        gd = gaussian_sum(eigenvalues, d);
      }
    }
    const double t = 0.5 * (a + b);
    const double g = gaussian_sum(eigenvalues, t);
    if (g > values[i]) return {t, g};
    return {grid(i), values[i]};
  };

  // Peaks of nearly equal height can swap order between the grid and the
  // continuum, so every local maximum of the grid is refined.
  GaussianPeak best{lo, -1.0};
  for (std::size_t i = 0; i <= last; ++i) {
    const bool left = i == 0 || values[i] >= values[i - 1];
    const bool right = i == last || values[i] >= values[i + 1];
    if (!left || !right) continue;
    const GaussianPeak p = refine(i);
    if (p.g > best.g) best = p;
  }
  return best;
}

CConstant c_constant(std::span<const double> eigs_a,
                     std::span<const double> eigs_b,
                     const CConstantOptions& options) {
  const GaussianPeak pa = maximize_gaussian_sum(eigs_a, options);
  const GaussianPeak pb = maximize_gaussian_sum(eigs_b, options);
  CConstant c;
  c.value = -std::log(pa.g) - std::log(pb.g);
  c.a0_star = pa.t;
  c.b0_star = pb.t;
  c.grid_points = options.grid_points;
  c.refinement_tol = options.refinement_tol;
  return c;
}

EntropicSumBound entropic_sum_bound(const QuantumState& state,
                                    const Observable& a, const Observable& b) {
  EntropicSumBound out;
  out.entropy_a = entropy_of(state, a);
  out.entropy_b = entropy_of(state, b);
  out.c = c_constant(a.eigenvalues(), b.eigenvalues());
  out.value = out.entropy_a + out.entropy_b + out.c.value;
  out.premise_holds = out.value <= variance(state, a) + variance(state, b);
  return out;
}

EntropicProductBound entropic_product_bound(
    const QuantumState& state, const Observable& a, const Observable& b,
    const Basis& basis, std::optional<double> entropy_sum_override,
    const CConstantOptions& options) {
  const QuantumState pure = extract_pure(state);
  const std::size_t n = pure.dim();
  if (n < 2) throw ValidationError("entropic product bound needs n >= 2");

  const auto evaluate = [&](const Observable& scaled_a, const CoefficientPair& pair,
                            EntropicProductBound& out) {
    const double entropy_sum = entropy_sum_override
                                   ? *entropy_sum_override
                                   : entropy_of(pure, scaled_a) + entropy_of(pure, b);
    const CConstant c =
        c_constant(scaled_a.eigenvalues(), b.eigenvalues(), options);
    out.entropic_sum = entropy_sum + c.value;
    out.premise_holds =
        out.entropic_sum <= variance(pure, scaled_a) + variance(pure, b);
    double head = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) head += pair.x[i] * pair.y[i];
    return head * head;
  };

  EntropicProductBound out;
  const CoefficientPair pair = coefficients_basis(pure, a, b, basis);
  const double xn = pair.x[n - 1];
  const double yn = pair.y[n - 1];
  if (xn <= kSupportEpsilon || yn <= kSupportEpsilon) {
    out.fallback = true;
    const double head_sq = evaluate(a, pair, out);
    const double tail = xn * xn * pair.y_squared_norm() +
                        yn * yn * pair.x_squared_norm() - xn * xn * yn * yn;
    out.value = l1_bound(pair);
    out.value_with_quarter = 0.25 * head_sq + tail;
    return out;
  }

  out.scale = yn / xn;
  const Observable scaled_a = a.scaled(out.scale);
  const CoefficientPair scaled = coefficients_basis(pure, scaled_a, b, basis);
  const double head_sq = evaluate(scaled_a, scaled, out);
  const double xn_sq = scaled.x[n - 1] * scaled.x[n - 1];
  const double tail = xn_sq * out.entropic_sum - xn_sq * yn * yn;
  const double r2 = out.scale * out.scale;
  out.value = (head_sq + tail) / r2;
  out.value_with_quarter = (0.25 * head_sq + tail) / r2;
  return out;
}

}  // namespace varbounds
