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


#ifndef VARBOUNDS_CLI_REPORT_IO_HPP_
#define VARBOUNDS_CLI_REPORT_IO_HPP_

#include <string>

#include "json.hpp"
#include "varbounds/entropic.hpp"
#include "varbounds/report.hpp"

namespace varbounds::cli {

// %.17g; infinities print as "inf" / "-inf".
std::string format_number(double v);

// Non-finite values become null. The uncertified U1 sentinel is written as
// "u1": null with "u1_certified": false.
nlohmann::json to_json(const BoundReport& report);

// Inverse of to_json. Throws SchemaError on a malformed document.
BoundReport report_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const CConstant& c);

}  // namespace varbounds::cli

#endif  // VARBOUNDS_CLI_REPORT_IO_HPP_
