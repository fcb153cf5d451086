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
// Microbenchmarks for the three hot paths: all-pairs shortest paths, payoff
// tensor construction, and the two solvers. Synthetic inputs are generated
// deterministically so runs are comparable across machines.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "facloc/market_game.hpp"
#include "facloc/network.hpp"
#include "facloc/scenario.hpp"
#include "facloc/solvers.hpp"

namespace {

using namespace facloc;

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Ring network plus deterministic chords: connected, diameter O(n).
Network ring_network(std::int32_t vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Network net;
  net.vertex_count = vertices;
  std::set<std::pair<VertexId, VertexId>> used;
  for (VertexId v = 1; v <= vertices; ++v) {
    const VertexId next = v == vertices ? 1 : v + 1;
    net.edges.push_back(Edge{v, next, pick(rng, 1, 9), std::nullopt});
    used.insert(std::minmax(v, next));
  }
  for (std::int32_t i = 0; i < vertices; ++i) {
    const auto u = static_cast<VertexId>(pick(rng, 1, vertices));
    const auto v = static_cast<VertexId>(pick(rng, 1, vertices));
    if (u == v || used.count(std::minmax(u, v))) continue;
    used.insert(std::minmax(u, v));
    net.edges.push_back(Edge{u, v, pick(rng, 1, 9), std::nullopt});
  }
  return net;
}

/// Scenario sized by site count; the joint profile space grows as
/// (prices * sites^2) ^ owners.
Scenario synthetic_scenario(std::int32_t vertices, std::int32_t sites,
                            std::int32_t prices, std::int32_t owners) {
  std::mt19937_64 rng(42);
  Scenario sc;
  sc.network = ring_network(vertices, 7);
  sc.raw_points.push_back(RawPoint{1, 1});
  for (VertexId v = 2; v <= 4; ++v) {
    sc.demand_points.push_back(DemandPoint{v, pick(rng, 1, 10)});
  }
  for (std::int32_t i = 0; i < sites; ++i) {
    sc.production_sites.push_back(CandidateSite{
        static_cast<VertexId>(1 + (i * 2) % vertices), SiteKind::Production,
        pick(rng, 0, 30)});
    sc.distribution_sites.push_back(CandidateSite{
        static_cast<VertexId>(1 + (i * 2 + 1) % vertices),
        SiteKind::Distribution, pick(rng, 0, 30)});
  }
  for (std::int32_t p = 0; p < prices; ++p) {
    sc.prices.push_back(5 + 2 * p);
  }
  sc.owner_count = owners;
  return sc;
}

void BM_AllPairsShortestPaths(benchmark::State& state) {
  const Network net = ring_network(static_cast<std::int32_t>(state.range(0)),
                                   11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_pairs_shortest_paths(net));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairsShortestPaths)->Arg(16)->Arg(64)->Arg(128)->Arg(256)
    ->Complexity(benchmark::oNCubed);

void BM_PayoffTensor(benchmark::State& state) {
  const Scenario sc = synthetic_scenario(
      32, static_cast<std::int32_t>(state.range(0)), 2, 2);
  const DistanceOracle oracle = all_pairs_shortest_paths(sc.network);
  for (auto _ : state) {
    benchmark::DoNotOptimize(payoff_tensor(sc, oracle, 1));
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations()) *
      static_cast<std::int64_t>(joint_profiles(sc).count()));
}
BENCHMARK(BM_PayoffTensor)->Arg(3)->Arg(5)->Arg(8);

void BM_PayoffTensorThreads(benchmark::State& state) {
  const Scenario sc = synthetic_scenario(32, 8, 2, 2);
  const DistanceOracle oracle = all_pairs_shortest_paths(sc.network);
  const auto threads = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(payoff_tensor(sc, oracle, threads));
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations()) *
      static_cast<std::int64_t>(joint_profiles(sc).count()));
}
BENCHMARK(BM_PayoffTensorThreads)->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->UseRealTime();

PayoffTensor random_tensor(std::uint64_t profiles, std::int32_t owners) {
  std::mt19937_64 rng(13);
  PayoffTensor tensor(profiles, owners);
  for (std::uint64_t s = 0; s < profiles; ++s) {
    for (std::int32_t i = 0; i < owners; ++i) {
      tensor.set(s, i, pick(rng, -100, 100));
    }
  }
  return tensor;
}

void BM_FindNash(benchmark::State& state) {
  const auto strategies = static_cast<std::int32_t>(state.range(0));
  const std::uint64_t profiles =
      static_cast<std::uint64_t>(strategies) * static_cast<std::uint64_t>(strategies);
  const PayoffTensor tensor = random_tensor(profiles, 2);
  const ProfileSpace space(
      std::vector<Strategy>(static_cast<std::size_t>(strategies)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_nash(tensor, space, 1));
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations()) *
      static_cast<std::int64_t>(profiles));
}
BENCHMARK(BM_FindNash)->Arg(32)->Arg(128)->Arg(512);

void BM_CompromiseSet(benchmark::State& state) {
  const auto strategies = static_cast<std::int32_t>(state.range(0));
  const std::uint64_t profiles =
      static_cast<std::uint64_t>(strategies) * static_cast<std::uint64_t>(strategies);
  const PayoffTensor tensor = random_tensor(profiles, 2);
  const ProfileSpace space(
      std::vector<Strategy>(static_cast<std::size_t>(strategies)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compromise_set(tensor, space));
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations()) *
      static_cast<std::int64_t>(profiles));
}
BENCHMARK(BM_CompromiseSet)->Arg(32)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
