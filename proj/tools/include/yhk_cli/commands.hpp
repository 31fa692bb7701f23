// Copyright 2026 The yhk Authors.
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

#ifndef YHK_CLI_COMMANDS_HPP
#define YHK_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "yhk/hecke.hpp"

namespace yhk::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kResourceGuard = 3 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "2,1|1|" -> {(2,1), (1), ()}.
std::vector<Partition> parse_shapes(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// The seed from --seed, else YHK_SEED, else 1.
std::uint64_t resolve_seed(const std::string& flag_value);

}  // namespace yhk::cli

#endif  // YHK_CLI_COMMANDS_HPP
