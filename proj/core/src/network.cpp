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

#include "facloc/network.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace facloc {

namespace {

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

NetworkValidation validate(const Network& net) {
  NetworkValidation result;
  auto fail = [&result](NetworkFault fault, const std::string& message) {
    result.fault = fault;
    result.message = message;
    return result;
  };

  if (net.vertex_count < 1) {
    return fail(NetworkFault::BadVertexCount,
                "BadVertexCount: vertex_count must be a positive integer, got " +
                    std::to_string(net.vertex_count));
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : net.edges) {
    if (e.u < 1 || e.u > net.vertex_count || e.v < 1 ||
        e.v > net.vertex_count) {
      std::ostringstream msg;
      msg << "BadVertexId: edge (" << e.u << ", " << e.v
          << ") has an endpoint outside [1, " << net.vertex_count << "]";
      return fail(NetworkFault::BadVertexId, msg.str());
    }
    if (e.u == e.v) {
      return fail(NetworkFault::SelfLoop,
                  "SelfLoop: edge (" + std::to_string(e.u) + ", " +
                      std::to_string(e.v) + ") is a self loop");
    }
    if (!seen.insert(ordered(e.u, e.v)).second) {
      return fail(NetworkFault::DuplicateEdge,
                  "DuplicateEdge: more than one edge between vertices " +
                      std::to_string(e.u) + " and " + std::to_string(e.v));
    }
    if (e.cost < 0) {
      std::ostringstream msg;
      msg << "NegativeCost: edge (" << e.u << ", " << e.v << ") has cost "
          << e.cost;
      return fail(NetworkFault::NegativeCost, msg.str());
    }
    if (e.capacity.has_value()) {
      std::ostringstream warning;
      warning << "edge (" << e.u << ", " << e.v
              << ") carries a capacity; capacities are stored but ignored";
      result.warnings.push_back(warning.str());
    }
  }

  // Connectivity by breadth-first search from vertex 1.
  std::vector<std::vector<VertexId>> adjacency(
      static_cast<std::size_t>(net.vertex_count) + 1);
  for (const Edge& e : net.edges) {
    adjacency[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<bool> reached(static_cast<std::size_t>(net.vertex_count) + 1,
                            false);
  std::vector<VertexId> frontier{1};
  reached[1] = true;
  while (!frontier.empty()) {
    VertexId v = frontier.back();
    frontier.pop_back();
    for (VertexId w : adjacency[static_cast<std::size_t>(v)]) {
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = true;
        frontier.push_back(w);
      }
    }
  }
  for (VertexId v = 1; v <= net.vertex_count; ++v) {
    if (!reached[static_cast<std::size_t>(v)]) {
      return fail(NetworkFault::Disconnected,
                  "DisconnectedNetwork: no path between vertices 1 and " +
                      std::to_string(v));
    }
  }

  return result;
}

void DistanceOracle::check_vertex(VertexId v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " outside [1, " + std::to_string(n_) + "]");
  }
}

std::vector<VertexId> DistanceOracle::path(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  std::vector<VertexId> result{u};
  VertexId current = u;
  while (current != v) {
    current = next_[index(current, v)];
    result.push_back(current);
  }
  return result;
}

DistanceOracle all_pairs_shortest_paths(const Network& net) {
  NetworkValidation validation = validate(net);
  if (!validation.ok()) {
    if (validation.fault == NetworkFault::Disconnected) {
      throw DisconnectedNetworkError(validation.message);
    }
    throw ValidationError(validation.message);
  }

  const std::size_t n = static_cast<std::size_t>(net.vertex_count);
  // Absent pairs hold no entry rather than a large sentinel, so the closure
  // never adds a sentinel to a finite cost.
  std::vector<std::optional<Money>> dist(n * n);
  std::vector<VertexId> next(n * n, 0);
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };

  for (std::size_t v = 0; v < n; ++v) {
    dist[at(v, v)] = 0;
    next[at(v, v)] = static_cast<VertexId>(v + 1);
  }
  for (const Edge& e : net.edges) {
    const std::size_t u = static_cast<std::size_t>(e.u - 1);
    const std::size_t v = static_cast<std::size_t>(e.v - 1);
    // Parallel edges are rejected by validate(); both directions are seeded.
    dist[at(u, v)] = e.cost;
    dist[at(v, u)] = e.cost;
    next[at(u, v)] = e.v;
    next[at(v, u)] = e.u;
  }

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ik = dist[at(i, k)];
      if (!ik.has_value()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& kj = dist[at(k, j)];
        if (!kj.has_value()) continue;
        const Money through = *ik + *kj;
        auto& ij = dist[at(i, j)];
        if (!ij.has_value() || through < *ij) {
          ij = through;
          next[at(i, j)] = next[at(i, k)];
        }
      }
    }
  }

  DistanceOracle oracle;
  oracle.n_ = net.vertex_count;
  oracle.dist_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    // Connectivity was checked above, so every entry is present.
    oracle.dist_[i] = *dist[i];
  }
  oracle.next_ = std::move(next);
  return oracle;
}

}  // namespace facloc
