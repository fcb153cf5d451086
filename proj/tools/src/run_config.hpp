// Copyright 2026 The facloc Authors
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

#ifndef FACLOC_TOOLS_RUN_CONFIG_HPP
#define FACLOC_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <string>

namespace facloc::cli {

enum class Command { Solve, Distances, Payoffs, Allocate };
enum class SolverChoice { Nash, Compromise, Both };
enum class OutputFormat { Table, Json, Csv };

struct RunConfig {
  std::string scenario_path;
  Command command = Command::Solve;
  SolverChoice solver = SolverChoice::Both;
  OutputFormat output_format = OutputFormat::Table;
  std::string output_path;               // empty = stdout
  std::uint64_t max_profiles = 10'000'000;
  std::int32_t threads = 0;              // <= 0 picks hardware concurrency
};

/// Executes one command. Returns the process exit code: 0 on success, 1 when
/// a requested Nash set is empty. Failures are reported by exception and
/// mapped to exit code 2 by the caller.
int run(const RunConfig& cfg);

}  // namespace facloc::cli

#endif  // FACLOC_TOOLS_RUN_CONFIG_HPP
