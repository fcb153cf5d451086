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

#include "facloc/market_game.hpp"

#include <algorithm>
#include <cstddef>
#include <thread>

namespace facloc {
namespace {

std::size_t idx(std::int32_t i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<bool> resolve_conflicts(const Scenario& sc,
                                    const JointProfile& profile) {
  const auto n = profile.strategies.size();
  std::vector<bool> active(n, true);
  for (std::size_t i = 1; i < n; ++i) {
    const Strategy& mine = profile.strategies[i];
    const VertexId my_m = sc.production_sites[idx(mine.production_site)].vertex;
    const VertexId my_w =
        sc.distribution_sites[idx(mine.distribution_site)].vertex;
    for (std::size_t j = 0; j < i; ++j) {
      if (!active[j]) continue;
      const Strategy& other = profile.strategies[j];
      if (sc.production_sites[idx(other.production_site)].vertex == my_m ||
          sc.distribution_sites[idx(other.distribution_site)].vertex == my_w) {
        active[i] = false;
        break;
      }
    }
  }
  return active;
}

Allocation allocate_demand(const Scenario& sc, const DistanceOracle& oracle,
                           const JointProfile& profile) {
  Allocation alloc;
  alloc.active = resolve_conflicts(sc, profile);
  alloc.served_quantity.assign(profile.strategies.size(), 0);
  alloc.assignment.resize(sc.demand_points.size());

  const Money floor_price = *std::min_element(sc.prices.begin(), sc.prices.end());

  // operator_of[site] = active owner running that candidate site, if any.
  std::vector<std::optional<std::int32_t>> operator_of(
      sc.distribution_sites.size());
  for (std::size_t i = 0; i < profile.strategies.size(); ++i) {
    if (!alloc.active[i]) continue;
    const auto site = idx(profile.strategies[i].distribution_site);
    if (!operator_of[site] || *operator_of[site] > static_cast<std::int32_t>(i)) {
      operator_of[site] = static_cast<std::int32_t>(i);
    }
  }

  for (std::size_t k = 0; k < sc.demand_points.size(); ++k) {
    const DemandPoint& dp = sc.demand_points[k];
    // Demand shops over the whole candidate set: a closed site offering the
    // cheapest menu price can win and leave the point unserved.
    std::int32_t best_site = -1;
    Money best_cost = 0;
    for (std::size_t w = 0; w < sc.distribution_sites.size(); ++w) {
      const CandidateSite& site = sc.distribution_sites[w];
      const Money price = operator_of[w]
                              ? sc.prices[idx(profile.strategies[idx(*operator_of[w])]
                                                  .price_index)]
                              : floor_price;
      const Money cost = price * dp.quantity + oracle.dist(dp.vertex, site.vertex);
      bool better = best_site < 0 || cost < best_cost;
      if (!better && cost == best_cost) {
        const CandidateSite& incumbent = sc.distribution_sites[idx(best_site)];
        if (site.vertex < incumbent.vertex) {
          better = true;
        } else if (site.vertex == incumbent.vertex) {
          const std::int32_t mine =
              operator_of[w] ? *operator_of[w] : sc.owner_count;
          const std::int32_t theirs = operator_of[idx(best_site)]
                                          ? *operator_of[idx(best_site)]
                                          : sc.owner_count;
          better = mine < theirs;
        }
      }
      if (better) {
        best_site = static_cast<std::int32_t>(w);
        best_cost = cost;
      }
    }
    if (operator_of[idx(best_site)]) {
      const std::int32_t owner = *operator_of[idx(best_site)];
      alloc.assignment[k] = ServedBy{owner, best_site};
      alloc.served_quantity[idx(owner)] += dp.quantity;
    } else {
      alloc.unserved += dp.quantity;
    }
  }
  return alloc;
}

PayoffBreakdown owner_payoff(const Scenario& sc, const DistanceOracle& oracle,
                             const Strategy& strategy,
                             const Allocation& allocation, std::int32_t owner) {
  PayoffBreakdown pb;
  if (!allocation.active[idx(owner)]) return pb;

  const Quantity served = allocation.served_quantity[idx(owner)];
  const CandidateSite& m = sc.production_sites[idx(strategy.production_site)];
  const CandidateSite& w = sc.distribution_sites[idx(strategy.distribution_site)];

  const RawPoint* best = nullptr;
  Money best_cost = 0;
  for (const RawPoint& raw : sc.raw_points) {
    const Money cost = raw.unit_price * served + oracle.dist(raw.vertex, m.vertex);
    if (!best || cost < best_cost ||
        (cost == best_cost && raw.vertex < best->vertex)) {
      best = &raw;
      best_cost = cost;
    }
  }

  pb.revenue = sc.prices[idx(strategy.price_index)] * served;
  pb.transport = oracle.dist(best->vertex, m.vertex) + oracle.dist(m.vertex, w.vertex);
  pb.distribution_cost = w.fixed_cost;
  pb.production_cost = m.fixed_cost;
  pb.raw_cost = best->unit_price * served;
  pb.net = pb.revenue -
           (pb.transport + pb.distribution_cost + pb.production_cost + pb.raw_cost);
  return pb;
}

PayoffTensor::PayoffTensor(std::uint64_t profile_count,
                           std::int32_t owner_count)
    : profile_count_(profile_count),
      owner_count_(owner_count),
      values_(profile_count * static_cast<std::uint64_t>(owner_count), 0) {}

std::vector<Money> PayoffTensor::payoffs(std::uint64_t profile) const {
  const auto base = profile * static_cast<std::uint64_t>(owner_count_);
  return std::vector<Money>(values_.begin() + static_cast<std::ptrdiff_t>(base),
                            values_.begin() +
                                static_cast<std::ptrdiff_t>(base + owner_count_));
}

PayoffTensor payoff_tensor(const Scenario& sc, const DistanceOracle& oracle,
                           std::int32_t threads) {
  const ProfileSpace space = joint_profiles(sc);
  PayoffTensor tensor(space.count(), sc.owner_count);

  auto evaluate_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      const JointProfile profile = space.at(s);
      const Allocation alloc = allocate_demand(sc, oracle, profile);
      for (std::int32_t i = 0; i < sc.owner_count; ++i) {
        tensor.set(s, i,
                   owner_payoff(sc, oracle, profile.strategies[idx(i)], alloc, i)
                       .net);
      }
    }
  };

  std::uint64_t workers = threads > 0
                              ? static_cast<std::uint64_t>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, space.count()));
  if (workers <= 1) {
    evaluate_range(0, space.count());
    return tensor;
  }

  // Fixed disjoint chunks; each worker writes its own rows only, so the
  // tensor is identical for every worker count.
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = (space.count() + workers - 1) / workers;
  for (std::uint64_t t = 0; t < workers; ++t) {
    const std::uint64_t begin = t * chunk;
    const std::uint64_t end = std::min(space.count(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(evaluate_range, begin, end);
  }
  for (std::thread& worker : pool) worker.join();
  return tensor;
}

}  // namespace facloc
