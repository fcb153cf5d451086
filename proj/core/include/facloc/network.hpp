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

#ifndef FACLOC_NETWORK_HPP
#define FACLOC_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facloc/types.hpp"

namespace facloc {

/// Undirected edge with an exact traversal cost. The capacity is stored when
/// the input provides one but no computation uses it.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Money cost = 0;
  std::optional<double> capacity;

  bool operator==(const Edge&) const = default;
};

/// Transportation network: `vertex_count` vertices numbered 1..vertex_count
/// and a set of undirected weighted edges.
struct Network {
  std::int32_t vertex_count = 0;
  std::vector<Edge> edges;

  bool operator==(const Network&) const = default;
};

enum class NetworkFault {
  None,
  BadVertexCount,
  BadVertexId,
  SelfLoop,
  DuplicateEdge,
  NegativeCost,
  Disconnected,
};

/// Outcome of validate(): the first violated invariant, if any, plus
/// non-fatal warnings (currently only "capacity present but unused").
struct NetworkValidation {
  NetworkFault fault = NetworkFault::None;
  std::string message;
  std::vector<std::string> warnings;

  bool ok() const { return fault == NetworkFault::None; }
};

/// Checks every Network invariant: positive vertex count, endpoints in range,
/// no self loops, at most one edge per unordered pair, nonnegative costs,
/// and connectivity. Reports the first violation found.
NetworkValidation validate(const Network& net);

/// All-pairs shortest-path distances with next-hop path reconstruction.
/// Immutable once built; safe to share across threads.
class DistanceOracle {
 public:
  std::int32_t vertex_count() const { return n_; }

  /// Exact shortest-path distance between two vertices (1-based ids).
  Money dist(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return dist_[index(u, v)];
  }

  /// One cost-optimal path from u to v, inclusive of both endpoints.
  /// path(v, v) is [v].
  std::vector<VertexId> path(VertexId u, VertexId v) const;

 private:
  friend DistanceOracle all_pairs_shortest_paths(const Network& net);

  std::size_t index(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }
  void check_vertex(VertexId v) const;

  std::int32_t n_ = 0;
  std::vector<Money> dist_;
  std::vector<VertexId> next_;  // next vertex after row's u on a path to v
};

/// Runs the Floyd-Warshall closure over the validated network.
/// Throws ValidationError (or DisconnectedNetworkError) if validate() fails.
DistanceOracle all_pairs_shortest_paths(const Network& net);

}  // namespace facloc

#endif  // FACLOC_NETWORK_HPP
