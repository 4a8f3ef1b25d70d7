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

#ifndef VARBOUNDS_ORACLE_HPP_
#define VARBOUNDS_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "varbounds/quantum.hpp"
#include "varbounds/report.hpp"

namespace varbounds {

inline constexpr std::size_t kMaxOracleDim = 5;

// max over all (pi1, pi2) in S_n x S_n of I_k(x o pi1, y o pi2), by raw
// double enumeration and the textbook triple sum. Throws ValidationError
// for n > 5.
double oracle_exhaustive_perm(const CoefficientPair& pair, std::size_t k);

struct OracleEntry {
  std::string name;
  double module_value = 0.0;
  double oracle_value = 0.0;
  double discrepancy = 0.0;  // |module - oracle| / max(1, |oracle|)
};

struct OracleReport {
  std::vector<OracleEntry> entries;
  double max_discrepancy = 0.0;
  std::string worst;
};

// Recomputes every bound in `report` from first principles: explicit index
// loops for expectations and variances, literal sums for I_k, brute-force
// pairings for the permuted and reverse bounds, Newton iteration for c.
// Only the eigensolver is shared with the library.
OracleReport oracle_bound_check(const QuantumState& state, const Observable& a,
                                const Observable& b, const BoundConfig& config,
                                const BoundReport& report);

// Convenience: computes the report with default options, then checks it.
OracleReport oracle_bound_check(const QuantumState& state, const Observable& a,
                                const Observable& b, const BoundConfig& config);

}  // namespace varbounds

#endif  // VARBOUNDS_ORACLE_HPP_
