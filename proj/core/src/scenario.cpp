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

#include "facloc/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace facloc {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw ParseError("scenario field '" + field + "': " + what);
}

[[noreturn]] void invalid(const std::string& invariant) {
  throw ValidationError("scenario invariant violated: " + invariant);
}

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) parse_fail(where, "unknown key '" + it.key() + "'");
  }
  for (const char* key : allowed) {
    if (!obj.contains(key)) {
      parse_fail(where, std::string("missing key '") + key + "'");
    }
  }
}

std::int64_t get_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) parse_fail(field, "expected an integer");
  return value.get<std::int64_t>();
}

std::int32_t get_int32(const json& value, const std::string& field) {
  std::int64_t raw = get_int(value, field);
  if (raw < std::numeric_limits<std::int32_t>::min() ||
      raw > std::numeric_limits<std::int32_t>::max()) {
    parse_fail(field, "out of 32-bit range");
  }
  return static_cast<std::int32_t>(raw);
}

const json& get_array(const json& obj, const char* key,
                      const std::string& field) {
  const json& value = obj.at(key);
  if (!value.is_array()) parse_fail(field, "expected an array");
  return value;
}

std::string indexed(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

Network parse_network(const json& value, std::vector<std::string>* warnings) {
  if (!value.is_object()) parse_fail("network", "expected an object");
  require_keys(value, "network", {"vertices", "edges"});
  Network net;
  net.vertex_count = get_int32(value.at("vertices"), "network.vertices");
  const json& edges = get_array(value, "edges", "network.edges");
  // Wrong nesting (edges directly under "network") is caught here.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = indexed("network.edges", i);
    const json& row = edges[i];
    if (!row.is_array() || row.size() < 3 || row.size() > 4) {
      parse_fail(field, "expected [u, v, cost] or [u, v, cost, capacity]");
    }
    Edge e;
    e.u = get_int32(row[0], field + ".u");
    e.v = get_int32(row[1], field + ".v");
    e.cost = get_int(row[2], field + ".cost");
    if (row.size() == 4) {
      if (!row[3].is_number()) parse_fail(field + ".capacity", "expected a number");
      e.capacity = row[3].get<double>();
      if (*e.capacity < 0) parse_fail(field + ".capacity", "must be nonnegative");
      if (warnings) {
        warnings->push_back("edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) +
                            ": capacity is stored but ignored by all computations");
      }
    }
    net.edges.push_back(e);
  }
  return net;
}

template <typename T, typename Make>
std::vector<T> parse_pairs(const json& rows, const std::string& field,
                           Make make) {
  std::vector<T> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = indexed(field, i);
    const json& row = rows[i];
    if (!row.is_array() || row.size() != 2) {
      parse_fail(where, "expected a [vertex, value] pair");
    }
    out.push_back(make(get_int32(row[0], where + "[0]"),
                       get_int(row[1], where + "[1]")));
  }
  return out;
}

void check_vertex_refs(const Scenario& sc) {
  auto in_range = [&](VertexId v) {
    return v >= 1 && v <= sc.network.vertex_count;
  };
  for (const RawPoint& p : sc.raw_points) {
    if (!in_range(p.vertex)) invalid("raw point vertex exists in the network");
  }
  for (const DemandPoint& p : sc.demand_points) {
    if (!in_range(p.vertex)) invalid("demand point vertex exists in the network");
  }
  for (const CandidateSite& s : sc.production_sites) {
    if (!in_range(s.vertex)) invalid("production site vertex exists in the network");
  }
  for (const CandidateSite& s : sc.distribution_sites) {
    if (!in_range(s.vertex)) invalid("distribution site vertex exists in the network");
  }
}

void check_scenario(const Scenario& sc) {
  NetworkValidation nv = validate(sc.network);
  if (!nv.ok()) {
    if (nv.fault == NetworkFault::Disconnected) {
      throw DisconnectedNetworkError(nv.message);
    }
    throw ValidationError(nv.message);
  }
  if (sc.raw_points.empty()) invalid("at least one raw material point");
  if (sc.demand_points.empty()) invalid("at least one demand point");
  if (sc.prices.empty()) invalid("at least one price");
  if (sc.owner_count < 1) invalid("owner count is positive");
  if (std::cmp_less(sc.production_sites.size(), sc.owner_count)) {
    invalid("at least owner_count production sites");
  }
  if (std::cmp_less(sc.distribution_sites.size(), sc.owner_count)) {
    invalid("at least owner_count distribution sites");
  }
  check_vertex_refs(sc);
  for (const RawPoint& p : sc.raw_points) {
    if (p.unit_price < 0) invalid("raw material unit price is nonnegative");
  }
  for (const DemandPoint& p : sc.demand_points) {
    if (p.quantity <= 0) invalid("demand quantity is positive");
  }
  for (const CandidateSite& s : sc.production_sites) {
    if (s.fixed_cost < 0) invalid("production fixed cost is nonnegative");
  }
  for (const CandidateSite& s : sc.distribution_sites) {
    if (s.fixed_cost < 0) invalid("distribution fixed cost is nonnegative");
  }
  for (Money p : sc.prices) {
    if (p < 0) invalid("prices are nonnegative");
  }
}

}  // namespace

Quantity Scenario::total_demand() const {
  Quantity total = 0;
  for (const DemandPoint& p : demand_points) total += p.quantity;
  return total;
}

Scenario parse_scenario(std::string_view text,
                        std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("(document)", "expected a JSON object");
  require_keys(doc, "(document)",
               {"network", "raw_points", "demand_points", "production_sites",
                "distribution_sites", "prices", "owners"});

  Scenario sc;
  sc.network = parse_network(doc.at("network"), warnings);
  sc.raw_points = parse_pairs<RawPoint>(
      get_array(doc, "raw_points", "raw_points"), "raw_points",
      [](VertexId v, std::int64_t x) { return RawPoint{v, x}; });
  sc.demand_points = parse_pairs<DemandPoint>(
      get_array(doc, "demand_points", "demand_points"), "demand_points",
      [](VertexId v, std::int64_t x) { return DemandPoint{v, x}; });
  sc.production_sites = parse_pairs<CandidateSite>(
      get_array(doc, "production_sites", "production_sites"), "production_sites",
      [](VertexId v, std::int64_t x) {
        return CandidateSite{v, SiteKind::Production, x};
      });
  sc.distribution_sites = parse_pairs<CandidateSite>(
      get_array(doc, "distribution_sites", "distribution_sites"), "distribution_sites",
      [](VertexId v, std::int64_t x) {
        return CandidateSite{v, SiteKind::Distribution, x};
      });
  const json& prices = get_array(doc, "prices", "prices");
  for (std::size_t i = 0; i < prices.size(); ++i) {
    sc.prices.push_back(get_int(prices[i], indexed("prices", i)));
  }
  sc.owner_count = get_int32(doc.at("owners"), "owners");

  check_scenario(sc);
  return sc;
}

Scenario load_scenario(std::istream& source, std::vector<std::string>* warnings) {
  std::ostringstream buffer;
  buffer << source.rdbuf();
  return parse_scenario(buffer.str(), warnings);
}

Scenario load_scenario_file(const std::string& path,
                            std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  return load_scenario(in, warnings);
}

std::string serialize(const Scenario& sc) {
  json edges = json::array();
  for (const Edge& e : sc.network.edges) {
    json row = {e.u, e.v, e.cost};
    if (e.capacity) row.push_back(*e.capacity);
    edges.push_back(std::move(row));
  }
  json doc;
  doc["network"] = {{"vertices", sc.network.vertex_count},
                    {"edges", std::move(edges)}};
  auto pairs = [](const auto& points, auto value) {
    json rows = json::array();
    for (const auto& p : points) rows.push_back({p.vertex, value(p)});
    return rows;
  };
  doc["raw_points"] =
      pairs(sc.raw_points, [](const RawPoint& p) { return p.unit_price; });
  doc["demand_points"] =
      pairs(sc.demand_points, [](const DemandPoint& p) { return p.quantity; });
  doc["production_sites"] = pairs(
      sc.production_sites, [](const CandidateSite& s) { return s.fixed_cost; });
  doc["distribution_sites"] = pairs(
      sc.distribution_sites, [](const CandidateSite& s) { return s.fixed_cost; });
  doc["prices"] = sc.prices;
  doc["owners"] = sc.owner_count;
  return doc.dump(2) + "\n";
}

std::vector<Strategy> strategy_space(const Scenario& sc) {
  std::vector<Strategy> out;
  out.reserve(sc.prices.size() * sc.production_sites.size() *
              sc.distribution_sites.size());
  for (std::size_t p = 0; p < sc.prices.size(); ++p) {
    for (std::size_t m = 0; m < sc.production_sites.size(); ++m) {
      for (std::size_t w = 0; w < sc.distribution_sites.size(); ++w) {
        out.push_back(Strategy{static_cast<std::int32_t>(p),
                               static_cast<std::int32_t>(m),
                               static_cast<std::int32_t>(w)});
      }
    }
  }
  return out;
}

ProfileSpace::ProfileSpace(std::vector<Strategy> strategies,
                           std::int32_t owner_count)
    : strategies_(std::move(strategies)), owner_count_(owner_count) {
  if (strategies_.empty()) throw ValidationError("empty strategy space");
  if (owner_count_ < 1) throw ValidationError("owner count is positive");
  const auto base = static_cast<std::uint64_t>(strategies_.size());
  // stride_[i] = base^(owners-1-i); owner 0 varies slowest.
  stride_.assign(static_cast<std::size_t>(owner_count_), 1);
  count_ = 1;
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  for (std::int32_t i = owner_count_ - 1; i >= 0; --i) {
    stride_[static_cast<std::size_t>(i)] = count_;
    if (count_ > cap / base) {
      throw ValidationError("joint profile count overflows 64 bits");
    }
    count_ *= base;
  }
}

std::int32_t ProfileSpace::strategy_index(std::uint64_t index,
                                          std::int32_t owner) const {
  const auto base = static_cast<std::uint64_t>(strategies_.size());
  return static_cast<std::int32_t>(
      (index / stride_[static_cast<std::size_t>(owner)]) % base);
}

JointProfile ProfileSpace::at(std::uint64_t index) const {
  JointProfile profile;
  profile.strategies.reserve(static_cast<std::size_t>(owner_count_));
  for (std::int32_t i = 0; i < owner_count_; ++i) {
    profile.strategies.push_back(
        strategies_[static_cast<std::size_t>(strategy_index(index, i))]);
  }
  return profile;
}

std::uint64_t ProfileSpace::with_strategy(std::uint64_t index,
                                          std::int32_t owner,
                                          std::int32_t strategy) const {
  const std::uint64_t stride = stride_[static_cast<std::size_t>(owner)];
  const std::uint64_t current =
      static_cast<std::uint64_t>(strategy_index(index, owner));
  return index - current * stride +
         static_cast<std::uint64_t>(strategy) * stride;
}

ProfileSpace joint_profiles(const Scenario& sc) {
  return ProfileSpace(strategy_space(sc), sc.owner_count);
}

}  // namespace facloc
