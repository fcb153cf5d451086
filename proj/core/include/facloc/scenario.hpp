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

#ifndef FACLOC_SCENARIO_HPP
#define FACLOC_SCENARIO_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "facloc/network.hpp"
#include "facloc/types.hpp"

namespace facloc {

/// A vertex selling raw material at a posted unit price.
struct RawPoint {
  VertexId vertex = 0;
  Money unit_price = 0;

  bool operator==(const RawPoint&) const = default;
};

/// A vertex buying a fixed quantity of goods from the distribution point
/// that minimizes its total cost.
struct DemandPoint {
  VertexId vertex = 0;
  Quantity quantity = 0;

  bool operator==(const DemandPoint&) const = default;
};

enum class SiteKind { Production, Distribution };

/// A vertex where an owner may open a production or distribution point,
/// paying the site's fixed cost.
struct CandidateSite {
  VertexId vertex = 0;
  SiteKind kind = SiteKind::Production;
  Money fixed_cost = 0;

  bool operator==(const CandidateSite&) const = default;
};

/// A full problem instance. Immutable after loading; every module reads it
/// concurrently without synchronization.
struct Scenario {
  Network network;
  std::vector<RawPoint> raw_points;
  std::vector<DemandPoint> demand_points;
  std::vector<CandidateSite> production_sites;
  std::vector<CandidateSite> distribution_sites;
  std::vector<Money> prices;
  std::int32_t owner_count = 0;

  Quantity total_demand() const;

  bool operator==(const Scenario&) const = default;
};

/// One owner's choice: a price from the shared menu plus a production and a
/// distribution site, all by index.
struct Strategy {
  std::int32_t price_index = 0;
  std::int32_t production_site = 0;
  std::int32_t distribution_site = 0;

  bool operator==(const Strategy&) const = default;
};

/// One Strategy per owner, in fixed owner order.
struct JointProfile {
  std::vector<Strategy> strategies;

  bool operator==(const JointProfile&) const = default;
};

/// Parses and validates a scenario document. Throws ParseError on malformed
/// input (including unknown keys), ValidationError on invariant violations,
/// and DisconnectedNetworkError when the network is not connected.
/// Non-fatal warnings (ignored capacities) are appended to `warnings` when
/// provided.
Scenario load_scenario(std::istream& source,
                       std::vector<std::string>* warnings = nullptr);
Scenario parse_scenario(std::string_view text,
                        std::vector<std::string>* warnings = nullptr);
Scenario load_scenario_file(const std::string& path,
                            std::vector<std::string>* warnings = nullptr);

/// Canonical JSON rendering; parse_scenario(serialize(sc)) == sc.
std::string serialize(const Scenario& sc);

/// Every strategy available to one owner, ordered lexicographically by
/// (price index, production site, distribution site).
std::vector<Strategy> strategy_space(const Scenario& sc);

/// The Cartesian product of one strategy space per owner, enumerable by
/// index in lexicographic owner order (owner 0 varies slowest). Restartable;
/// disjoint index ranges may be consumed by parallel workers.
class ProfileSpace {
 public:
  ProfileSpace(std::vector<Strategy> strategies, std::int32_t owner_count);

  std::uint64_t count() const { return count_; }
  std::int32_t owner_count() const { return owner_count_; }
  std::int32_t strategy_count() const {
    return static_cast<std::int32_t>(strategies_.size());
  }
  const std::vector<Strategy>& strategies() const { return strategies_; }

  /// Strategy index chosen by `owner` within the profile at `index`.
  std::int32_t strategy_index(std::uint64_t index, std::int32_t owner) const;

  /// The profile at `index`, materialized.
  JointProfile at(std::uint64_t index) const;

  /// Index of the profile equal to `index` except that `owner` plays
  /// `strategy`; the unilateral-deviation step.
  std::uint64_t with_strategy(std::uint64_t index, std::int32_t owner,
                              std::int32_t strategy) const;

 private:
  std::vector<Strategy> strategies_;
  std::int32_t owner_count_ = 0;
  std::vector<std::uint64_t> stride_;
  std::uint64_t count_ = 0;
};

/// ProfileSpace over strategy_space(sc) and sc.owner_count.
ProfileSpace joint_profiles(const Scenario& sc);

}  // namespace facloc

#endif  // FACLOC_SCENARIO_HPP
