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

#include "run_config.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "facloc/market_game.hpp"
#include "facloc/network.hpp"
#include "facloc/scenario.hpp"
#include "facloc/solvers.hpp"
#include "facloc/types.hpp"

namespace facloc::cli {
namespace {

using nlohmann::json;

// Fixed-width text table: first column left-aligned, the rest right-aligned.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header)
      : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    print_row(out, header_, width);
    for (const auto& row : rows_) print_row(out, row, width);
  }

 private:
  static void print_row(std::ostream& out, const std::vector<std::string>& row,
                        const std::vector<std::size_t>& width) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      const auto pad = width[c] - row[c].size();
      if (c == 0) {
        out << row[c] << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << row[c];
      }
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string owner_label(std::int32_t owner) {
  return "R" + std::to_string(owner + 1);
}

std::string str(std::int64_t v) { return std::to_string(v); }

// "R1: price 10, production@3, distribution@2; R2: ..."
std::string profile_label(const Scenario& sc, const JointProfile& profile) {
  std::ostringstream out;
  for (std::size_t i = 0; i < profile.strategies.size(); ++i) {
    const Strategy& st = profile.strategies[i];
    if (i > 0) out << "; ";
    out << owner_label(static_cast<std::int32_t>(i)) << ": price "
        << sc.prices[static_cast<std::size_t>(st.price_index)] << ", production@"
        << sc.production_sites[static_cast<std::size_t>(st.production_site)].vertex
        << ", distribution@"
        << sc.distribution_sites[static_cast<std::size_t>(st.distribution_site)]
               .vertex;
  }
  return out.str();
}

std::string payoffs_label(const std::vector<Money>& values) {
  std::ostringstream out;
  out << "payoffs (";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i];
  }
  out << ")";
  return out.str();
}

json strategy_json(const Scenario& sc, const Strategy& st) {
  return json{
      {"price", sc.prices[static_cast<std::size_t>(st.price_index)]},
      {"production_vertex",
       sc.production_sites[static_cast<std::size_t>(st.production_site)].vertex},
      {"distribution_vertex",
       sc.distribution_sites[static_cast<std::size_t>(st.distribution_site)]
           .vertex}};
}

const char* solver_name(SolutionKind kind) {
  return kind == SolutionKind::Nash ? "nash" : "compromise";
}

json solution_report_json(const Scenario& sc, const SolutionReport& report) {
  json profiles = json::array();
  for (std::size_t i = 0; i < report.profiles.size(); ++i) {
    json owners = json::array();
    for (const Strategy& st : report.profiles[i].strategies) {
      owners.push_back(strategy_json(sc, st));
    }
    json entry{{"owners", std::move(owners)}, {"payoffs", report.values[i]}};
    if (report.objective) entry["objective"] = *report.objective;
    profiles.push_back(std::move(entry));
  }
  return json{{"solver", solver_name(report.kind)},
              {"profiles", std::move(profiles)}};
}

void solution_report_table(const Scenario& sc, const SolutionReport& report,
                           std::ostream& out) {
  if (report.kind == SolutionKind::Nash) {
    out << "Nash equilibria: " << report.profiles.size() << '\n';
  } else {
    out << "Compromise set: " << report.profiles.size() << " (objective "
        << *report.objective << ")\n";
  }
  for (std::size_t i = 0; i < report.profiles.size(); ++i) {
    out << "  #" << report.profile_indices[i] << "  "
        << profile_label(sc, report.profiles[i]) << "; "
        << payoffs_label(report.values[i]) << '\n';
  }
}

void solution_report_csv(const Scenario& sc, const SolutionReport& report,
                         std::ostream& out) {
  for (std::size_t i = 0; i < report.profiles.size(); ++i) {
    const JointProfile& profile = report.profiles[i];
    for (std::size_t o = 0; o < profile.strategies.size(); ++o) {
      const Strategy& st = profile.strategies[o];
      out << solver_name(report.kind) << ',' << report.profile_indices[i] << ','
          << (o + 1) << ','
          << sc.prices[static_cast<std::size_t>(st.price_index)] << ','
          << sc.production_sites[static_cast<std::size_t>(st.production_site)]
                 .vertex
          << ','
          << sc.distribution_sites[static_cast<std::size_t>(st.distribution_site)]
                 .vertex
          << ',' << report.values[i][o] << ',';
      if (report.objective) out << *report.objective;
      out << '\n';
    }
  }
}

int cmd_distances(const RunConfig& cfg, const Scenario& sc,
                  const DistanceOracle& oracle, std::ostream& out) {
  const auto n = sc.network.vertex_count;
  switch (cfg.output_format) {
    case OutputFormat::Table: {
      out << "Demand x distribution distances\n";
      std::vector<std::string> header{"demand"};
      for (const CandidateSite& w : sc.distribution_sites) {
        header.push_back("@" + str(w.vertex));
      }
      TextTable table(std::move(header));
      for (const DemandPoint& k : sc.demand_points) {
        std::vector<std::string> row{"@" + str(k.vertex)};
        for (const CandidateSite& w : sc.distribution_sites) {
          row.push_back(str(oracle.dist(k.vertex, w.vertex)));
        }
        table.add_row(std::move(row));
      }
      table.print(out);

      out << "\nAll-pairs distances\n";
      std::vector<std::string> apsp_header{"from\\to"};
      for (VertexId v = 1; v <= n; ++v) apsp_header.push_back(str(v));
      TextTable apsp(std::move(apsp_header));
      for (VertexId u = 1; u <= n; ++u) {
        std::vector<std::string> row{str(u)};
        for (VertexId v = 1; v <= n; ++v) row.push_back(str(oracle.dist(u, v)));
        apsp.add_row(std::move(row));
      }
      apsp.print(out);
      break;
    }
    case OutputFormat::Json: {
      json demand_vertices = json::array();
      for (const DemandPoint& k : sc.demand_points) {
        demand_vertices.push_back(k.vertex);
      }
      json distribution_vertices = json::array();
      for (const CandidateSite& w : sc.distribution_sites) {
        distribution_vertices.push_back(w.vertex);
      }
      json table = json::array();
      for (const DemandPoint& k : sc.demand_points) {
        json row = json::array();
        for (const CandidateSite& w : sc.distribution_sites) {
          row.push_back(oracle.dist(k.vertex, w.vertex));
        }
        table.push_back(std::move(row));
      }
      json apsp = json::array();
      for (VertexId u = 1; u <= n; ++u) {
        json row = json::array();
        for (VertexId v = 1; v <= n; ++v) row.push_back(oracle.dist(u, v));
        apsp.push_back(std::move(row));
      }
      out << json{{"demand_vertices", std::move(demand_vertices)},
                  {"distribution_vertices", std::move(distribution_vertices)},
                  {"demand_distribution", std::move(table)},
                  {"all_pairs", std::move(apsp)}}
                 .dump(2)
          << '\n';
      break;
    }
    case OutputFormat::Csv: {
      out << "table,from,to,distance\n";
      for (const DemandPoint& k : sc.demand_points) {
        for (const CandidateSite& w : sc.distribution_sites) {
          out << "demand_distribution," << k.vertex << ',' << w.vertex << ','
              << oracle.dist(k.vertex, w.vertex) << '\n';
        }
      }
      for (VertexId u = 1; u <= n; ++u) {
        for (VertexId v = 1; v <= n; ++v) {
          out << "all_pairs," << u << ',' << v << ',' << oracle.dist(u, v)
              << '\n';
        }
      }
      break;
    }
  }
  return 0;
}

int cmd_payoffs(const RunConfig& cfg, const Scenario& sc,
                const DistanceOracle& oracle, std::ostream& out) {
  const ProfileSpace space = joint_profiles(sc);

  TextTable table({"profile", "owner", "price", "production", "distribution",
                   "active", "served", "revenue", "transport", "dist_cost",
                   "prod_cost", "raw_cost", "net"});
  json profiles = json::array();
  if (cfg.output_format == OutputFormat::Csv) {
    out << "profile,owner,price,production_vertex,distribution_vertex,active,"
           "served,revenue,transport,distribution_cost,production_cost,"
           "raw_cost,net\n";
  }

  for (std::uint64_t s = 0; s < space.count(); ++s) {
    const JointProfile profile = space.at(s);
    const Allocation alloc = allocate_demand(sc, oracle, profile);
    json owners = json::array();
    for (std::int32_t i = 0; i < sc.owner_count; ++i) {
      const Strategy& st = profile.strategies[static_cast<std::size_t>(i)];
      const PayoffBreakdown pb = owner_payoff(sc, oracle, st, alloc, i);
      const bool active = alloc.active[static_cast<std::size_t>(i)];
      const Quantity served = alloc.served_quantity[static_cast<std::size_t>(i)];
      const Money price = sc.prices[static_cast<std::size_t>(st.price_index)];
      const VertexId m =
          sc.production_sites[static_cast<std::size_t>(st.production_site)].vertex;
      const VertexId w =
          sc.distribution_sites[static_cast<std::size_t>(st.distribution_site)]
              .vertex;
      switch (cfg.output_format) {
        case OutputFormat::Table:
          table.add_row({str(static_cast<std::int64_t>(s)), owner_label(i),
                         str(price), "@" + str(m), "@" + str(w),
                         active ? "yes" : "no", str(served), str(pb.revenue),
                         str(pb.transport), str(pb.distribution_cost),
                         str(pb.production_cost), str(pb.raw_cost), str(pb.net)});
          break;
        case OutputFormat::Json:
          owners.push_back(json{{"price", price},
                                {"production_vertex", m},
                                {"distribution_vertex", w},
                                {"active", active},
                                {"served", served},
                                {"revenue", pb.revenue},
                                {"transport", pb.transport},
                                {"distribution_cost", pb.distribution_cost},
                                {"production_cost", pb.production_cost},
                                {"raw_cost", pb.raw_cost},
                                {"net", pb.net}});
          break;
        case OutputFormat::Csv:
          out << s << ',' << (i + 1) << ',' << price << ',' << m << ',' << w
              << ',' << (active ? 1 : 0) << ',' << served << ',' << pb.revenue
              << ',' << pb.transport << ',' << pb.distribution_cost << ','
              << pb.production_cost << ',' << pb.raw_cost << ',' << pb.net
              << '\n';
          break;
      }
    }
    if (cfg.output_format == OutputFormat::Json) {
      profiles.push_back(json{{"index", s}, {"owners", std::move(owners)}});
    }
  }

  if (cfg.output_format == OutputFormat::Table) {
    table.print(out);
  } else if (cfg.output_format == OutputFormat::Json) {
    out << json{{"profiles", std::move(profiles)}}.dump(2) << '\n';
  }
  return 0;
}

int cmd_allocate(const RunConfig& cfg, const Scenario& sc,
                 const DistanceOracle& oracle, std::ostream& out) {
  const ProfileSpace space = joint_profiles(sc);
  json profiles = json::array();
  if (cfg.output_format == OutputFormat::Csv) {
    out << "profile,demand_vertex,quantity,owner,distribution_vertex\n";
  }

  for (std::uint64_t s = 0; s < space.count(); ++s) {
    const JointProfile profile = space.at(s);
    const Allocation alloc = allocate_demand(sc, oracle, profile);
    switch (cfg.output_format) {
      case OutputFormat::Table: {
        out << "Profile #" << s << "  " << profile_label(sc, profile) << '\n';
        for (std::size_t i = 0; i < alloc.active.size(); ++i) {
          if (!alloc.active[i]) {
            out << "  " << owner_label(static_cast<std::int32_t>(i))
                << " blocked\n";
          }
        }
        for (std::size_t k = 0; k < sc.demand_points.size(); ++k) {
          const DemandPoint& dp = sc.demand_points[k];
          out << "  demand@" << dp.vertex << " (" << dp.quantity << " units) -> ";
          if (alloc.assignment[k]) {
            out << owner_label(alloc.assignment[k]->owner) << " @"
                << sc.distribution_sites[static_cast<std::size_t>(
                                             alloc.assignment[k]
                                                 ->distribution_site)]
                       .vertex;
          } else {
            out << "unserved";
          }
          out << '\n';
        }
        out << "  served:";
        for (std::size_t i = 0; i < alloc.served_quantity.size(); ++i) {
          out << (i == 0 ? " " : ", ")
              << owner_label(static_cast<std::int32_t>(i)) << "="
              << alloc.served_quantity[i];
        }
        out << "; unserved " << alloc.unserved << '\n';
        break;
      }
      case OutputFormat::Json: {
        json owners = json::array();
        for (std::size_t i = 0; i < profile.strategies.size(); ++i) {
          json o = strategy_json(sc, profile.strategies[i]);
          o["active"] = static_cast<bool>(alloc.active[i]);
          owners.push_back(std::move(o));
        }
        json assignments = json::array();
        for (std::size_t k = 0; k < sc.demand_points.size(); ++k) {
          const DemandPoint& dp = sc.demand_points[k];
          json a{{"demand_vertex", dp.vertex}, {"quantity", dp.quantity}};
          if (alloc.assignment[k]) {
            a["owner"] = alloc.assignment[k]->owner + 1;
            a["distribution_vertex"] =
                sc.distribution_sites[static_cast<std::size_t>(
                                          alloc.assignment[k]->distribution_site)]
                    .vertex;
          } else {
            a["unserved"] = true;
          }
          assignments.push_back(std::move(a));
        }
        profiles.push_back(json{{"index", s},
                                {"owners", std::move(owners)},
                                {"assignments", std::move(assignments)},
                                {"served", alloc.served_quantity},
                                {"unserved", alloc.unserved}});
        break;
      }
      case OutputFormat::Csv: {
        for (std::size_t k = 0; k < sc.demand_points.size(); ++k) {
          const DemandPoint& dp = sc.demand_points[k];
          out << s << ',' << dp.vertex << ',' << dp.quantity << ',';
          if (alloc.assignment[k]) {
            out << (alloc.assignment[k]->owner + 1) << ','
                << sc.distribution_sites[static_cast<std::size_t>(
                                             alloc.assignment[k]
                                                 ->distribution_site)]
                       .vertex;
          } else {
            out << ',';
          }
          out << '\n';
        }
        break;
      }
    }
  }

  if (cfg.output_format == OutputFormat::Json) {
    out << json{{"profiles", std::move(profiles)}}.dump(2) << '\n';
  }
  return 0;
}

int cmd_solve(const RunConfig& cfg, const Scenario& sc,
              const DistanceOracle& oracle, std::ostream& out) {
  const ProfileSpace space = joint_profiles(sc);
  const PayoffTensor tensor = payoff_tensor(sc, oracle, cfg.threads);

  std::vector<SolutionReport> reports;
  if (cfg.solver == SolverChoice::Nash || cfg.solver == SolverChoice::Both) {
    reports.push_back(find_nash(tensor, space, cfg.threads));
  }
  if (cfg.solver == SolverChoice::Compromise ||
      cfg.solver == SolverChoice::Both) {
    reports.push_back(compromise_set(tensor, space));
  }

  switch (cfg.output_format) {
    case OutputFormat::Table:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) out << '\n';
        solution_report_table(sc, reports[i], out);
      }
      break;
    case OutputFormat::Json:
      if (reports.size() == 1) {
        out << solution_report_json(sc, reports[0]).dump(2) << '\n';
      } else {
        json both = json::array();
        for (const SolutionReport& r : reports) {
          both.push_back(solution_report_json(sc, r));
        }
        out << both.dump(2) << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "solver,profile,owner,price,production_vertex,"
             "distribution_vertex,payoff,objective\n";
      for (const SolutionReport& r : reports) solution_report_csv(sc, r, out);
      break;
  }

  for (const SolutionReport& r : reports) {
    if (r.kind == SolutionKind::Nash && r.empty()) return 1;
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg) {
  std::vector<std::string> warnings;
  const Scenario sc = load_scenario_file(cfg.scenario_path, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
  const DistanceOracle oracle = all_pairs_shortest_paths(sc.network);

  if (cfg.command != Command::Distances) {
    const ProfileSpace space = joint_profiles(sc);
    if (space.count() > cfg.max_profiles) {
      throw ValidationError(
          "joint profile count " + std::to_string(space.count()) +
          " exceeds the --max-profiles limit " +
          std::to_string(cfg.max_profiles));
    }
  }

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      throw ValidationError("cannot open output file: " + cfg.output_path);
    }
  }
  std::ostream& out = cfg.output_path.empty() ? std::cout : file;

  switch (cfg.command) {
    case Command::Distances:
      return cmd_distances(cfg, sc, oracle, out);
    case Command::Payoffs:
      return cmd_payoffs(cfg, sc, oracle, out);
    case Command::Allocate:
      return cmd_allocate(cfg, sc, oracle, out);
    case Command::Solve:
      return cmd_solve(cfg, sc, oracle, out);
  }
  return 2;
}

}  // namespace facloc::cli
