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

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "run_config.hpp"

namespace {

using facloc::cli::Command;
using facloc::cli::OutputFormat;
using facloc::cli::RunConfig;
using facloc::cli::SolverChoice;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Solver for a competitive facility-location game on a transportation "
      "network: owners place production and distribution points, demand buys "
      "where its total cost is lowest, and the solvers report pure Nash "
      "equilibria and the min-max-regret compromise set."};
  app.require_subcommand(1);

  RunConfig cfg;

  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table},
      {"json", OutputFormat::Json},
      {"csv", OutputFormat::Csv}};
  const std::map<std::string, SolverChoice> solvers{
      {"nash", SolverChoice::Nash},
      {"compromise", SolverChoice::Compromise},
      {"both", SolverChoice::Both}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", cfg.scenario_path, "Scenario JSON file")
        ->required();
    sub->add_option("--format", cfg.output_format,
                    "Output format: table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.output_path,
                    "Write the report to this file instead of stdout");
    sub->add_option("--max-profiles", cfg.max_profiles,
                    "Refuse scenarios with more joint profiles than this");
    sub->add_option("--threads", cfg.threads,
                    "Worker threads for profile evaluation (0 = auto)");
  };

  CLI::App* distances = app.add_subcommand(
      "distances", "Print shortest-path distance tables for the scenario");
  CLI::App* payoffs = app.add_subcommand(
      "payoffs", "Print the net-income breakdown for every joint profile");
  CLI::App* allocate = app.add_subcommand(
      "allocate", "Print the demand routing for every joint profile");
  CLI::App* solve = app.add_subcommand(
      "solve", "Find Nash equilibria and/or the compromise set");
  add_common(distances);
  add_common(payoffs);
  add_common(allocate);
  add_common(solve);
  solve->add_option("--solver", cfg.solver, "Solver: nash, compromise or both")
      ->transform(CLI::CheckedTransformer(solvers, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Flatten CLI11's exit codes onto the documented set: 0 for help,
    // 2 for every usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (distances->parsed()) cfg.command = Command::Distances;
  if (payoffs->parsed()) cfg.command = Command::Payoffs;
  if (allocate->parsed()) cfg.command = Command::Allocate;
  if (solve->parsed()) cfg.command = Command::Solve;

  try {
    return facloc::cli::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
