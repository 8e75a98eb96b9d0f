// Copyright 2026 The cfkit Authors
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

#ifndef CFKIT_TOOLS_CLI_HPP_
#define CFKIT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cfkit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUnverified = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNumeric = 3;

// Runs the command line (args excludes the program name) and returns the
// exit code. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfkit::cli

#endif  // CFKIT_TOOLS_CLI_HPP_
