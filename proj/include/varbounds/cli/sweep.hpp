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


#ifndef VARBOUNDS_CLI_SWEEP_HPP_
#define VARBOUNDS_CLI_SWEEP_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "varbounds/scenarios.hpp"

namespace varbounds::cli {

// Bad --theta-range text.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A row whose variance sits outside its own interval.
class ContainmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "pi", "-pi/2", "2pi", "3*pi/4", "0.5" and the like.
double parse_angle(std::string_view text);

struct ThetaRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 2;

  // Endpoints inclusive; the last sample is exactly stop.
  std::vector<double> samples() const;
};

// "start:stop:steps" with steps >= 2.
ThetaRange parse_theta_range(std::string_view text);

ScenarioKind parse_scenario(const std::string& name);

struct SweepOptions {
  ScenarioKind kind = ScenarioKind::Spin1LxLy;
  ThetaRange range;
  BoundConfig config;
  std::optional<CustomFamily> custom;
  double tolerance = 1e-9;
  unsigned threads = 1;
};

struct SweepRow {
  double theta = 0.0;
  double v_a = 0.0;
  double v_b = 0.0;
  double product = 0.0;
  double sum = 0.0;
  double l1 = 0.0;
  double mondal_in = 0.0;
  double schrodinger = 0.0;
  double max_perm_in = 0.0;
  double u1 = 0.0;  // inf when uncertified
  double l2 = 0.0;
  double mondal_sum = 0.0;
  double u2 = 0.0;
  double entropic_product = 0.0;  // nan when unavailable
  double entropic_sum = 0.0;
  bool entropic_premise = false;
};

inline constexpr const char* kSweepCsvHeader =
    "theta,v_a,v_b,product,sum,l1,mondal_in,schrodinger,max_perm_in,u1,l2,"
    "mondal_sum,u2,entropic_product,entropic_sum,entropic_premise";

// Rows are computed in parallel and returned in theta order. Throws
// ContainmentError naming the first offending theta.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

nlohmann::json to_json(const std::vector<SweepRow>& rows);

}  // namespace varbounds::cli

#endif  // VARBOUNDS_CLI_SWEEP_HPP_
