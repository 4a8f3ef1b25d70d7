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


#ifndef VARBOUNDS_CLI_PROBLEM_FILE_HPP_
#define VARBOUNDS_CLI_PROBLEM_FILE_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "varbounds/quantum.hpp"
#include "varbounds/scenarios.hpp"

namespace varbounds::cli {

// Malformed input: unreadable file, invalid JSON, or a document that does not
// follow schema 1.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Problem {
  QuantumState state;
  Observable a;
  Observable b;
  BoundConfig config;
};

// {
//   "schema": 1,
//   "dimension": n,
//   "observable_a": {"real": [[..]], "imag": [[..]]},
//   "observable_b": {...},
//   "state": {"type": "pure" | "density", "data": {"real": .., "imag": ..}},
//   "basis": "computational" | "eigen_a" | "eigen_b" | {"real": .., "imag": ..},
//   "construction": "basis" | "fidelity"
// }
// "imag" is optional everywhere; "basis" and "construction" default to
// computational and basis.
Problem parse_problem(const nlohmann::json& doc);

// Same header and observables, plus
//   "family": {"cos": {"real": [..], "imag": [..]}, "sin": {...}}
// describing |psi(theta)> ~ cos(theta)|u> + sin(theta)|v>.
struct CustomProblem {
  CustomFamily family;
  BoundConfig config;
};

CustomProblem parse_custom_family(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::string& path);

Problem load_problem(const std::string& path);

CustomProblem load_custom_family(const std::string& path);

Construction parse_construction(const std::string& name);

// Named basis only; explicit bases come from a problem file.
BasisChoice parse_basis_choice(const std::string& name);

}  // namespace varbounds::cli

#endif  // VARBOUNDS_CLI_PROBLEM_FILE_HPP_
