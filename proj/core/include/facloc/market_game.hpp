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

#ifndef FACLOC_MARKET_GAME_HPP
#define FACLOC_MARKET_GAME_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "facloc/network.hpp"
#include "facloc/scenario.hpp"
#include "facloc/types.hpp"

namespace facloc {

/// Where one demand point buys: the serving owner and that owner's
/// distribution site index.
struct ServedBy {
  std::int32_t owner = 0;
  std::int32_t distribution_site = 0;

  bool operator==(const ServedBy&) const = default;
};

/// Demand routing for one joint profile, after conflict resolution.
/// A demand point whose cheapest candidate distribution site is not
/// operated by any active owner stays unserved.
struct Allocation {
  std::vector<bool> active;                       // per owner
  std::vector<std::optional<ServedBy>> assignment;  // per demand point
  std::vector<Quantity> served_quantity;          // per owner
  Quantity unserved = 0;

  bool operator==(const Allocation&) const = default;
};

/// Net-income decomposition for one owner in one profile.
/// Invariant: net = revenue - (transport + distribution_cost +
/// production_cost + raw_cost), exactly. Blocked owners get all zeros.
struct PayoffBreakdown {
  Money revenue = 0;
  Money transport = 0;
  Money distribution_cost = 0;
  Money production_cost = 0;
  Money raw_cost = 0;
  Money net = 0;

  bool operator==(const PayoffBreakdown&) const = default;
};

/// Per-owner active flags. An owner is blocked iff its production vertex or
/// its distribution vertex equals the corresponding-kind vertex of any
/// lower-indexed active owner. Owner 0 is always active.
std::vector<bool> resolve_conflicts(const Scenario& sc,
                                    const JointProfile& profile);

/// Routes every demand point to the candidate distribution site minimizing
/// price * quantity + dist(demand, site), where an occupied site charges its
/// operator's chosen price and an unoccupied one the cheapest menu price.
/// Ties break by lowest site vertex id, then lowest operator index. Demand
/// whose chosen site has no active operator goes unserved.
Allocation allocate_demand(const Scenario& sc, const DistanceOracle& oracle,
                           const JointProfile& profile);

/// Cost decomposition for one owner given an allocation for the same
/// profile. Active owners pay both fixed costs and the full haul route
/// (raw -> production -> distribution) even when they serve nothing; the
/// raw point minimizes unit_price * served + dist(raw, production), ties by
/// lowest vertex id.
PayoffBreakdown owner_payoff(const Scenario& sc, const DistanceOracle& oracle,
                             const Strategy& strategy,
                             const Allocation& allocation, std::int32_t owner);

/// Net payoffs for every joint profile, indexed as in ProfileSpace.
class PayoffTensor {
 public:
  PayoffTensor(std::uint64_t profile_count, std::int32_t owner_count);

  std::uint64_t profile_count() const { return profile_count_; }
  std::int32_t owner_count() const { return owner_count_; }

  Money payoff(std::uint64_t profile, std::int32_t owner) const {
    return values_[profile * static_cast<std::uint64_t>(owner_count_) +
                   static_cast<std::uint64_t>(owner)];
  }
  std::vector<Money> payoffs(std::uint64_t profile) const;

  void set(std::uint64_t profile, std::int32_t owner, Money value) {
    values_[profile * static_cast<std::uint64_t>(owner_count_) +
            static_cast<std::uint64_t>(owner)] = value;
  }

  bool operator==(const PayoffTensor&) const = default;

 private:
  std::uint64_t profile_count_ = 0;
  std::int32_t owner_count_ = 0;
  std::vector<Money> values_;
};

/// Evaluates every profile. `threads` <= 0 picks the hardware concurrency;
/// profiles are split into disjoint index ranges per worker, so the result
/// is identical for every thread count.
PayoffTensor payoff_tensor(const Scenario& sc, const DistanceOracle& oracle,
                           std::int32_t threads = 0);

}  // namespace facloc

#endif  // FACLOC_MARKET_GAME_HPP
