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

#include "varbounds/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "varbounds/errors.hpp"

namespace varbounds {

SpinOperators spin_operators(Spin j) {
  using namespace std::complex_literals;
  if (j == Spin::Half) {
    return {Observable{{0.0, 0.5}, {0.5, 0.0}},
            Observable{{0.0, -0.5i}, {0.5i, 0.0}},
            Observable{{0.5, 0.0}, {0.0, -0.5}}};
  }
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex ir = Complex(0.0, r);
  return {Observable{{0.0, r, 0.0}, {r, 0.0, r}, {0.0, r, 0.0}},
          Observable{{0.0, -ir, 0.0}, {ir, 0.0, -ir}, {0.0, ir, 0.0}},
          Observable{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}}};
}

SpinOperators pauli_operators() {
  using namespace std::complex_literals;
  return {Observable{{0.0, 1.0}, {1.0, 0.0}},
          Observable{{0.0, -1.0i}, {1.0i, 0.0}},
          Observable{{1.0, 0.0}, {0.0, -1.0}}};
}

QuantumState spin1_state(double theta) {
  if (!std::isfinite(theta)) throw ValidationError("theta must be finite");
  return QuantumState::pure(
      ComplexVector{std::cos(theta), -std::sin(theta), 0.0});
}

QuantumState spin_half_rho(double theta) {
  using namespace std::complex_literals;
  if (!std::isfinite(theta)) throw ValidationError("theta must be finite");
  const double bx = std::cos(theta / 2.0);
  const double by = std::sqrt(3.0) / 2.0 * std::sin(theta / 2.0);
  const double bz = 0.5 * std::sin(theta / 2.0);
  return QuantumState::density(HermitianMatrix{
      {0.5 * (1.0 + bz), 0.5 * (bx - 1.0i * by)},
      {0.5 * (bx + 1.0i * by), 0.5 * (1.0 - bz)}});
}

QuantumState random_pure_state(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DimensionError("random_pure_state: n must be >= 1");
  Rng rng(seed);
  std::vector<Complex> amps(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& z : amps) {
      const double re = rng.normal();
      const double im = rng.normal();
      z = Complex(re, im);
      norm2 += re * re + im * im;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : amps) z *= inv;
  return QuantumState::pure(ComplexVector(std::move(amps)));
}

Observable random_hermitian(std::size_t n, std::uint64_t seed, double scale) {
  if (n == 0) throw DimensionError("random_hermitian: n must be >= 1");
  Rng rng(seed);
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im);
    }
  }
  Matrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) = 0.5 * scale * (g(i, j) + std::conj(g(j, i)));
    }
  }
  return Observable(HermitianMatrix(std::move(h)));
}

CoefficientPair random_coefficient_pair(std::size_t n, Rng& rng,
                                        double zero_probability) {
  std::vector<double> x(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.uniform();
    y[i] = rng.uniform();
    if (zero_probability > 0.0 && rng.uniform() < zero_probability) x[i] = 0.0;
    if (zero_probability > 0.0 && rng.uniform() < zero_probability) y[i] = 0.0;
  }
  return CoefficientPair::from_vectors(std::move(x), std::move(y));
}

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Spin1LxLy: return "spin1";
    case ScenarioKind::SpinHalfSxSz: return "spinhalf";
    case ScenarioKind::Custom: return "custom";
  }
  return "?";
}

ScenarioInstance instantiate(const ScenarioSpec& spec) {
  if (!std::isfinite(spec.theta)) throw ValidationError("theta must be finite");
  switch (spec.kind) {
    case ScenarioKind::Spin1LxLy: {
      auto ops = spin_operators(Spin::One);
      return {spin1_state(spec.theta), std::move(ops.x), std::move(ops.y)};
    }
    case ScenarioKind::SpinHalfSxSz: {
      auto ops = pauli_operators();
      return {spin_half_rho(spec.theta), std::move(ops.x), std::move(ops.z)};
    }
    case ScenarioKind::Custom: {
      if (!spec.custom) throw ValidationError("custom scenario without family");
      const auto& fam = *spec.custom;
      ComplexVector psi = std::cos(spec.theta) * fam.cos_component +
                          std::sin(spec.theta) * fam.sin_component;
      const double norm = psi.norm();
      if (norm < 1e-12) {
        throw ValidationError("custom family vanishes at this theta");
      }
      psi *= 1.0 / norm;
      return {QuantumState::pure(std::move(psi)), fam.a, fam.b};
    }
  }
  throw ValidationError("unknown scenario kind");
}

}  // namespace varbounds
