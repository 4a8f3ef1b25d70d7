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


#ifndef VARBOUNDS_CLI_FUZZ_HPP_
#define VARBOUNDS_CLI_FUZZ_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace varbounds::cli {

struct FuzzOptions {
  std::size_t trials = 1000;
  std::size_t dim_min = 2;
  std::size_t dim_max = 6;
  std::uint64_t seed = 0;
  std::optional<std::size_t> only_trial;
  double tolerance = 1e-9;
  unsigned threads = 1;
  // Test-only: flips the sign of the I_n deficit so the chain check must fire.
  bool inject_fault = false;
};

struct Violation {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::size_t dim = 0;
  std::string invariant;
  double magnitude = 0.0;
  std::string reproducer;
};

struct FuzzSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t dim_min = 0;
  std::size_t dim_max = 0;
  std::size_t checks = 0;
  double max_oracle_discrepancy = 0.0;
  double max_parallelogram_error = 0.0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// "a:b" with 1 <= a <= b.
std::pair<std::size_t, std::size_t> parse_dim_range(const std::string& text);

FuzzSummary run_fuzz(const FuzzOptions& options);

nlohmann::json to_json(const FuzzSummary& summary);

}  // namespace varbounds::cli

#endif  // VARBOUNDS_CLI_FUZZ_HPP_
