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

#ifndef VARBOUNDS_SCENARIOS_HPP_
#define VARBOUNDS_SCENARIOS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "varbounds/quantum.hpp"
#include "varbounds/random.hpp"

namespace varbounds {

enum class Spin { Half, One };

struct SpinOperators {
  Observable x;
  Observable y;
  Observable z;
};

// Angular momentum matrices (hbar = 1) satisfying [L_x, L_y] = i L_z.
// Spin one uses the L_z eigenbasis ordered (m = +1, 0, -1); spin one half
// returns sigma / 2.
SpinOperators spin_operators(Spin j);

// sigma_x, sigma_y, sigma_z.
SpinOperators pauli_operators();

// cos(theta)|1> - sin(theta)|0> = (cos theta, -sin theta, 0).
QuantumState spin1_state(double theta);

// 1/2 (I + cos(theta/2) sigma_x + (sqrt3/2) sin(theta/2) sigma_y
//        + 1/2 sin(theta/2) sigma_z); unit Bloch vector for every theta.
QuantumState spin_half_rho(double theta);

// Haar-random pure state; identical output for identical (n, seed).
QuantumState random_pure_state(std::size_t n, std::uint64_t seed);

// scale * (G + G^dagger) / 2 with i.i.d. complex Gaussian G.
Observable random_hermitian(std::size_t n, std::uint64_t seed,
                            double scale = 1.0);

// Nonnegative uniform [0, 1) vectors; each entry is zeroed with
// probability zero_probability.
CoefficientPair random_coefficient_pair(std::size_t n, Rng& rng,
                                        double zero_probability = 0.0);

enum class ScenarioKind { Spin1LxLy, SpinHalfSxSz, Custom };

const char* to_string(ScenarioKind kind);

// User-supplied family |Psi(theta)> ~ cos(theta)|u> + sin(theta)|v>.
struct CustomFamily {
  Observable a;
  Observable b;
  ComplexVector cos_component;
  ComplexVector sin_component;
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Spin1LxLy;
  double theta = 0.0;
  BoundConfig config;
  std::optional<CustomFamily> custom;
};

struct ScenarioInstance {
  QuantumState state;
  Observable a;
  Observable b;
};

// Spin1LxLy: spin1_state with (L_x, L_y). SpinHalfSxSz: spin_half_rho with
// (sigma_x, sigma_z). Custom: the normalized family member.
ScenarioInstance instantiate(const ScenarioSpec& spec);

}  // namespace varbounds

#endif  // VARBOUNDS_SCENARIOS_HPP_
