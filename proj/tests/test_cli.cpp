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
//
// End-to-end tests that drive the installed binary through a shell, pinning
// exit codes and the exact text of every output format.

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace facloc {
namespace {

using nlohmann::json;

std::string scenario_path(const std::string& name) {
  return std::string(FACLOC_SCENARIO_DIR) + "/" + name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path temp_file(const std::string& tag) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() /
         ("facloc_cli_" + std::to_string(::getpid()) + "_" + tag + "_" +
          std::to_string(counter++));
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CommandResult run_cli(const std::string& args) {
  const std::filesystem::path out = temp_file("out");
  const std::filesystem::path err = temp_file("err");
  const std::string command = std::string(FACLOC_BIN) + " " + args + " > " +
                              out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return result;
}

std::string reference_arg() {
  return "--scenario " + scenario_path("two_owners_8v.json");
}

TEST(CliDistances, TablePrintsDemandDistributionGrid) {
  const CommandResult result = run_cli("distances " + reference_arg());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("Demand x distribution distances\n"
                            "demand  @2  @6\n"
                            "@4       2   7\n"
                            "@5       2   3\n"
                            "@8       8   3\n"),
            std::string::npos)
      << result.out;
  EXPECT_NE(result.out.find("All-pairs distances"), std::string::npos);
}

TEST(CliDistances, JsonCarriesBothTables) {
  const CommandResult result =
      run_cli("distances " + reference_arg() + " --format json");
  ASSERT_EQ(result.exit_code, 0);
  const json j = json::parse(result.out);
  EXPECT_EQ(j.at("demand_vertices"), (json{4, 5, 8}));
  EXPECT_EQ(j.at("distribution_vertices"), (json{2, 6}));
  EXPECT_EQ(j.at("demand_distribution"),
            (json{{2, 7}, {2, 3}, {8, 3}}));
  const auto& all = j.at("all_pairs");
  ASSERT_EQ(all.size(), 8u);
  EXPECT_EQ(all[0][0].get<std::int64_t>(), 0);
  EXPECT_EQ(all[0][6].get<std::int64_t>(), 9);
  EXPECT_EQ(all[2][7].get<std::int64_t>(), 10);
}

TEST(CliDistances, CsvListsEveryPair) {
  const CommandResult result =
      run_cli("distances " + reference_arg() + " --format csv");
  ASSERT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out.rfind("table,from,to,distance\n", 0), 0u);
  EXPECT_NE(result.out.find("demand_distribution,8,2,8\n"), std::string::npos);
  EXPECT_NE(result.out.find("all_pairs,1,7,9\n"), std::string::npos);
}

TEST(CliSolve, NashTableMatchesPublishedEquilibrium) {
  const CommandResult result =
      run_cli("solve " + reference_arg() + " --solver nash");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out,
            "Nash equilibria: 1\n"
            "  #3  R1: price 10, production@3, distribution@2; "
            "R2: price 10, production@7, distribution@6; payoffs (125, 28)\n");
}

TEST(CliSolve, BothTableShowsNashAndCompromiseSections) {
  const CommandResult result = run_cli("solve " + reference_arg());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("Nash equilibria: 1\n"), std::string::npos);
  EXPECT_NE(result.out.find("Compromise set: 2 (objective 95)\n"),
            std::string::npos);
  EXPECT_NE(result.out.find("#6  R1: price 10, production@3, distribution@6; "
                            "R2: price 10, production@7, distribution@2; "
                            "payoffs (30, 113)"),
            std::string::npos);
  EXPECT_NE(result.out.find("#9"), std::string::npos);
}

TEST(CliSolve, NashJsonMatchesSchema) {
  const CommandResult result =
      run_cli("solve " + reference_arg() + " --solver nash --format json");
  ASSERT_EQ(result.exit_code, 0);
  const json j = json::parse(result.out);
  EXPECT_EQ(j.at("solver"), "nash");
  ASSERT_EQ(j.at("profiles").size(), 1u);
  const json& profile = j.at("profiles")[0];
  ASSERT_EQ(profile.at("owners").size(), 2u);
  EXPECT_EQ(profile.at("owners")[0].at("price").get<std::int64_t>(), 10);
  EXPECT_EQ(profile.at("owners")[0].at("production_vertex").get<std::int64_t>(),
            3);
  EXPECT_EQ(
      profile.at("owners")[0].at("distribution_vertex").get<std::int64_t>(), 2);
  EXPECT_EQ(profile.at("owners")[1].at("production_vertex").get<std::int64_t>(),
            7);
  EXPECT_EQ(
      profile.at("owners")[1].at("distribution_vertex").get<std::int64_t>(), 6);
  ASSERT_TRUE(profile.at("payoffs")[0].is_number_integer());
  EXPECT_EQ(profile.at("payoffs"), (json{125, 28}));
  EXPECT_FALSE(profile.contains("objective"));
}

TEST(CliSolve, CompromiseJsonCarriesObjectivePerProfile) {
  const CommandResult result = run_cli("solve " + reference_arg() +
                                       " --solver compromise --format json");
  ASSERT_EQ(result.exit_code, 0);
  const json j = json::parse(result.out);
  EXPECT_EQ(j.at("solver"), "compromise");
  ASSERT_EQ(j.at("profiles").size(), 2u);
  for (const json& profile : j.at("profiles")) {
    EXPECT_EQ(profile.at("objective").get<std::int64_t>(), 95);
  }
  EXPECT_EQ(j.at("profiles")[0].at("payoffs"), (json{30, 113}));
  EXPECT_EQ(j.at("profiles")[1].at("payoffs"), (json{113, 30}));
}

TEST(CliSolve, BothJsonIsArrayOfTwoReports) {
  const CommandResult result =
      run_cli("solve " + reference_arg() + " --format json");
  ASSERT_EQ(result.exit_code, 0);
  const json j = json::parse(result.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0].at("solver"), "nash");
  EXPECT_EQ(j[1].at("solver"), "compromise");
  EXPECT_EQ(j[1].at("profiles").size(), 2u);
}

TEST(CliSolve, CsvSharesOneHeaderAcrossSolvers) {
  const CommandResult result =
      run_cli("solve " + reference_arg() + " --format csv");
  ASSERT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out,
            "solver,profile,owner,price,production_vertex,distribution_vertex,"
            "payoff,objective\n"
            "nash,3,1,10,3,2,125,\n"
            "nash,3,2,10,7,6,28,\n"
            "compromise,6,1,10,3,6,30,95\n"
            "compromise,6,2,10,7,2,113,95\n"
            "compromise,9,1,10,7,2,113,95\n"
            "compromise,9,2,10,3,6,30,95\n");
}

TEST(CliSolve, EmptyNashSetExitsOne) {
  const std::string arg = "--scenario " + scenario_path("no_pure_nash.json");
  const CommandResult nash = run_cli("solve " + arg + " --solver nash");
  EXPECT_EQ(nash.exit_code, 1);
  EXPECT_EQ(nash.out, "Nash equilibria: 0\n");

  // `both` still carries the empty Nash report, so it signals the same way;
  // a pure compromise run has results and exits cleanly.
  EXPECT_EQ(run_cli("solve " + arg).exit_code, 1);
  const CommandResult compromise =
      run_cli("solve " + arg + " --solver compromise");
  EXPECT_EQ(compromise.exit_code, 0);
  EXPECT_NE(compromise.out.find("Compromise set: 4 (objective 43)\n"),
            std::string::npos);
}

TEST(CliSolve, OutFlagWritesStdoutContentToFile) {
  const std::filesystem::path out_file = temp_file("solve_json");
  const CommandResult direct =
      run_cli("solve " + reference_arg() + " --format json");
  const CommandResult redirected = run_cli("solve " + reference_arg() +
                                           " --format json --out " +
                                           out_file.string());
  EXPECT_EQ(redirected.exit_code, 0);
  EXPECT_TRUE(redirected.out.empty());
  EXPECT_EQ(slurp(out_file), direct.out);
  std::filesystem::remove(out_file);
}

TEST(CliSolve, RepeatedRunsProduceIdenticalBytes) {
  const std::string args =
      "solve " + reference_arg() + " --format json --threads 4";
  const CommandResult first = run_cli(args);
  const CommandResult second = run_cli(args);
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
}

TEST(CliPayoffs, JsonBreakdownSatisfiesNetIdentity) {
  const CommandResult result =
      run_cli("payoffs " + reference_arg() + " --format json");
  ASSERT_EQ(result.exit_code, 0);
  const json j = json::parse(result.out);
  ASSERT_EQ(j.at("profiles").size(), 16u);
  for (const json& profile : j.at("profiles")) {
    for (const json& owner : profile.at("owners")) {
      const auto revenue = owner.at("revenue").get<std::int64_t>();
      const auto costs = owner.at("transport").get<std::int64_t>() +
                         owner.at("distribution_cost").get<std::int64_t>() +
                         owner.at("production_cost").get<std::int64_t>() +
                         owner.at("raw_cost").get<std::int64_t>();
      EXPECT_EQ(owner.at("net").get<std::int64_t>(), revenue - costs);
      if (!owner.at("active").get<bool>()) {
        EXPECT_EQ(owner.at("net").get<std::int64_t>(), 0);
      }
    }
  }
}

TEST(CliPayoffs, CsvPinsStandaloneBreakdownRow) {
  const CommandResult result =
      run_cli("payoffs " + reference_arg() + " --format csv");
  ASSERT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out.rfind("profile,owner,price,production_vertex,"
                             "distribution_vertex,active,served,revenue,"
                             "transport,distribution_cost,production_cost,"
                             "raw_cost,net\n",
                             0),
            0u);
  EXPECT_NE(result.out.find("0,1,10,3,2,1,20,200,5,10,40,20,125\n"),
            std::string::npos);
  EXPECT_NE(result.out.find("3,2,10,7,6,1,10,100,12,10,40,10,28\n"),
            std::string::npos);
}

TEST(CliAllocate, TableMarksBlockedOwnersAndUnservedDemand) {
  const CommandResult result = run_cli("allocate " + reference_arg());
  ASSERT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("R2 blocked"), std::string::npos);
  EXPECT_NE(result.out.find("demand@8 (10 units) -> unserved"),
            std::string::npos);
  EXPECT_NE(result.out.find("served: R1=20, R2=10; unserved 0"),
            std::string::npos);
}

TEST(CliAllocate, JsonConservesDemandAcrossProfiles) {
  const CommandResult result =
      run_cli("allocate " + reference_arg() + " --format json");
  ASSERT_EQ(result.exit_code, 0);
  const json j = json::parse(result.out);
  ASSERT_EQ(j.at("profiles").size(), 16u);
  for (const json& profile : j.at("profiles")) {
    std::int64_t served = 0;
    for (const json& quantity : profile.at("served")) {
      served += quantity.get<std::int64_t>();
    }
    EXPECT_EQ(served + profile.at("unserved").get<std::int64_t>(), 30);
  }
}

TEST(CliAllocate, CsvLeavesOwnerEmptyForUnservedDemand) {
  const CommandResult result =
      run_cli("allocate " + reference_arg() + " --format csv");
  ASSERT_EQ(result.exit_code, 0);
  EXPECT_EQ(
      result.out.rfind("profile,demand_vertex,quantity,owner,distribution_vertex\n",
                       0),
      0u);
  EXPECT_NE(result.out.find("0,8,10,,\n"), std::string::npos);
  EXPECT_NE(result.out.find("3,8,10,2,6\n"), std::string::npos);
}

TEST(CliErrors, HelpExitsZero) {
  const CommandResult result = run_cli("--help");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("solve"), std::string::npos);
  EXPECT_NE(result.out.find("distances"), std::string::npos);
}

TEST(CliErrors, MissingSubcommandExitsTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
}

TEST(CliErrors, UnknownFlagExitsTwo) {
  const CommandResult result =
      run_cli("solve " + reference_arg() + " --bogus");
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_FALSE(result.err.empty());
}

TEST(CliErrors, MissingScenarioFileExitsTwo) {
  const CommandResult result =
      run_cli("solve --scenario /nonexistent/scenario.json");
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("error:"), std::string::npos);
}

TEST(CliErrors, DisconnectedScenarioReportsNamedFault) {
  const std::filesystem::path file = temp_file("disconnected");
  {
    std::ofstream out(file);
    out << R"({
      "network": {"vertices": 4, "edges": [[1, 2, 1], [3, 4, 1]]},
      "raw_points": [[1, 1]],
      "demand_points": [[2, 5]],
      "production_sites": [[3, 10]],
      "distribution_sites": [[4, 10]],
      "prices": [5],
      "owners": 1
    })";
  }
  const CommandResult result =
      run_cli("solve --scenario " + file.string());
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("DisconnectedNetwork"), std::string::npos)
      << result.err;
  std::filesystem::remove(file);
}

TEST(CliErrors, ProfileBudgetGuardExitsTwo) {
  const CommandResult blocked =
      run_cli("solve " + reference_arg() + " --max-profiles 4");
  EXPECT_EQ(blocked.exit_code, 2);
  EXPECT_NE(blocked.err.find("profiles"), std::string::npos);

  // distances never enumerates profiles, so the budget does not apply.
  EXPECT_EQ(run_cli("distances " + reference_arg() + " --max-profiles 1")
                .exit_code,
            0);
}

}  // namespace
}  // namespace facloc
