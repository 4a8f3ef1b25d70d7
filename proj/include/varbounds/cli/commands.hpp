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


#ifndef VARBOUNDS_CLI_COMMANDS_HPP_
#define VARBOUNDS_CLI_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace varbounds::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPurity = 3;
inline constexpr int kExitNumerical = 4;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace varbounds::cli

#endif  // VARBOUNDS_CLI_COMMANDS_HPP_
