// Copyright 2026 The dlworkbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DLW_TOOLS_CLI_HPP_
#define DLW_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dlw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;  // also: a fixture failed
inline constexpr int kExitUsage = 2;           // bad flags or bad input

/// Runs the command line `args` (without the program name). Everything the
/// command prints goes to `out` and `err`; nothing touches std::cout.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dlw::cli

#endif  // DLW_TOOLS_CLI_HPP_
