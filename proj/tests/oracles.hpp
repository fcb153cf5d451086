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
// Independent reference implementations used only by tests. Each one is a
// deliberately naive transliteration of the defining rule, sharing no code
// with the library, so agreement between the two is meaningful evidence.

#ifndef FACLOC_TESTS_ORACLES_HPP
#define FACLOC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "facloc/network.hpp"
#include "facloc/scenario.hpp"
#include "facloc/types.hpp"

namespace facloc::testing {

/// Label-correcting single-source shortest paths (repeated edge relaxation),
/// structurally unlike the all-pairs closure in the library.
inline std::vector<std::optional<Money>> oracle_sssp(const Network& net,
                                                     VertexId source) {
  std::vector<std::optional<Money>> label(
      static_cast<std::size_t>(net.vertex_count) + 1);
  label[static_cast<std::size_t>(source)] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : net.edges) {
      const auto u = static_cast<std::size_t>(e.u);
      const auto v = static_cast<std::size_t>(e.v);
      if (label[u] && (!label[v] || *label[v] > *label[u] + e.cost)) {
        label[v] = *label[u] + e.cost;
        changed = true;
      }
      if (label[v] && (!label[u] || *label[u] > *label[v] + e.cost)) {
        label[u] = *label[v] + e.cost;
        changed = true;
      }
    }
  }
  return label;
}

/// All distances via the single-source oracle, indexed [u][v] (1-based).
inline std::vector<std::vector<Money>> oracle_all_distances(const Network& net) {
  std::vector<std::vector<Money>> d(
      static_cast<std::size_t>(net.vertex_count) + 1,
      std::vector<Money>(static_cast<std::size_t>(net.vertex_count) + 1, 0));
  for (VertexId u = 1; u <= net.vertex_count; ++u) {
    const auto labels = oracle_sssp(net, u);
    for (VertexId v = 1; v <= net.vertex_count; ++v) {
      d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          *labels[static_cast<std::size_t>(v)];
    }
  }
  return d;
}

/// Straight-line evaluation of one profile's net incomes from first
/// principles: conflicts, demand routing over the candidate menu, then the
/// revenue-minus-costs formula per active owner. Distances come from the
/// single-source oracle, not the library.
inline std::vector<Money> naive_profile_payoffs(const Scenario& sc,
                                                const JointProfile& profile) {
  const auto dist = oracle_all_distances(sc.network);
  auto d = [&](VertexId a, VertexId b) {
    return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  const auto n = profile.strategies.size();

  // An owner is blocked by any lower-indexed active owner holding the same
  // production vertex or the same distribution vertex.
  std::vector<bool> active(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool blocked = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!active[j]) continue;
      const bool same_m =
          sc.production_sites[static_cast<std::size_t>(
                                  profile.strategies[j].production_site)]
              .vertex ==
          sc.production_sites[static_cast<std::size_t>(
                                  profile.strategies[i].production_site)]
              .vertex;
      const bool same_w =
          sc.distribution_sites[static_cast<std::size_t>(
                                    profile.strategies[j].distribution_site)]
              .vertex ==
          sc.distribution_sites[static_cast<std::size_t>(
                                    profile.strategies[i].distribution_site)]
              .vertex;
      if (same_m || same_w) blocked = true;
    }
    active[i] = !blocked;
  }

  // Effective price of every candidate distribution site: the operator's
  // price when occupied, the cheapest menu price when closed.
  const Money floor = *std::min_element(sc.prices.begin(), sc.prices.end());
  const std::int32_t no_operator = -1;
  std::vector<std::int32_t> site_operator(sc.distribution_sites.size(),
                                          no_operator);
  std::vector<Money> site_price(sc.distribution_sites.size(), floor);
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    const auto w =
        static_cast<std::size_t>(profile.strategies[i].distribution_site);
    if (site_operator[w] == no_operator) {
      site_operator[w] = static_cast<std::int32_t>(i);
      site_price[w] = sc.prices[static_cast<std::size_t>(
          profile.strategies[i].price_index)];
    }
  }

  // Each demand point shops over the full candidate menu; it is served only
  // when the winning site has an operator.
  std::vector<Quantity> served(n, 0);
  for (const DemandPoint& k : sc.demand_points) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t w = 0; w < sc.distribution_sites.size(); ++w) {
      if (!have) {
        best = w;
        have = true;
        continue;
      }
      const Money cw =
          site_price[w] * k.quantity + d(k.vertex, sc.distribution_sites[w].vertex);
      const Money cb = site_price[best] * k.quantity +
                       d(k.vertex, sc.distribution_sites[best].vertex);
      if (cw < cb) {
        best = w;
      } else if (cw == cb) {
        if (sc.distribution_sites[w].vertex < sc.distribution_sites[best].vertex) {
          best = w;
        } else if (sc.distribution_sites[w].vertex ==
                       sc.distribution_sites[best].vertex &&
                   site_operator[w] != no_operator &&
                   (site_operator[best] == no_operator ||
                    site_operator[w] < site_operator[best])) {
          best = w;
        }
      }
    }
    if (site_operator[best] != no_operator) {
      served[static_cast<std::size_t>(site_operator[best])] += k.quantity;
    }
  }

  // TC = P(w) D(w) - (C + PW + PM + PL); blocked owners take 0.
  std::vector<Money> payoff(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    const Strategy& st = profile.strategies[i];
    const CandidateSite& m =
        sc.production_sites[static_cast<std::size_t>(st.production_site)];
    const CandidateSite& w =
        sc.distribution_sites[static_cast<std::size_t>(st.distribution_site)];
    const RawPoint* raw = &sc.raw_points.front();
    for (const RawPoint& cand : sc.raw_points) {
      const Money mine = cand.unit_price * served[i] + d(cand.vertex, m.vertex);
      const Money held = raw->unit_price * served[i] + d(raw->vertex, m.vertex);
      if (mine < held || (mine == held && cand.vertex < raw->vertex)) {
        raw = &cand;
      }
    }
    const Money revenue =
        sc.prices[static_cast<std::size_t>(st.price_index)] * served[i];
    const Money transport = d(raw->vertex, m.vertex) + d(m.vertex, w.vertex);
    const Money costs = transport + w.fixed_cost + m.fixed_cost +
                        raw->unit_price * served[i];
    payoff[i] = revenue - costs;
  }
  return payoff;
}

/// Payoff table for definitional solver oracles: payoffs[profile][owner]
/// with profiles in mixed-radix order, owner 0 the most significant digit.
using PayoffTable = std::vector<std::vector<Money>>;

inline std::vector<std::int32_t> profile_digits(std::uint64_t index,
                                                std::int32_t strategies,
                                                std::int32_t owners) {
  std::vector<std::int32_t> digit(static_cast<std::size_t>(owners), 0);
  for (std::int32_t i = owners - 1; i >= 0; --i) {
    digit[static_cast<std::size_t>(i)] =
        static_cast<std::int32_t>(index % static_cast<std::uint64_t>(strategies));
    index /= static_cast<std::uint64_t>(strategies);
  }
  return digit;
}

inline std::uint64_t profile_index(const std::vector<std::int32_t>& digit,
                                   std::int32_t strategies) {
  std::uint64_t index = 0;
  for (std::int32_t d : digit) {
    index = index * static_cast<std::uint64_t>(strategies) +
            static_cast<std::uint64_t>(d);
  }
  return index;
}

/// Every profile where no owner can strictly gain by a unilateral deviation;
/// checks all deviations literally.
inline std::vector<std::uint64_t> brute_force_nash(const PayoffTable& payoffs,
                                                   std::int32_t strategies,
                                                   std::int32_t owners) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t s = 0; s < payoffs.size(); ++s) {
    bool equilibrium = true;
    for (std::int32_t i = 0; i < owners && equilibrium; ++i) {
      auto digit = profile_digits(s, strategies, owners);
      for (std::int32_t alt = 0; alt < strategies; ++alt) {
        digit[static_cast<std::size_t>(i)] = alt;
        const std::uint64_t t = profile_index(digit, strategies);
        if (payoffs[t][static_cast<std::size_t>(i)] >
            payoffs[s][static_cast<std::size_t>(i)]) {
          equilibrium = false;
          break;
        }
      }
    }
    if (equilibrium) result.push_back(s);
  }
  return result;
}

/// Exhaustive min-max-regret scan: per-owner ideals, per-profile worst
/// residual, all minimizers plus the objective.
struct CompromiseScan {
  std::vector<std::uint64_t> profiles;
  Money objective = 0;
};

inline CompromiseScan exhaustive_compromise(const PayoffTable& payoffs) {
  const std::size_t owners = payoffs.front().size();
  std::vector<Money> ideal(owners, std::numeric_limits<Money>::min());
  for (const auto& row : payoffs) {
    for (std::size_t i = 0; i < owners; ++i) {
      ideal[i] = std::max(ideal[i], row[i]);
    }
  }
  std::vector<Money> gamma(payoffs.size());
  for (std::size_t s = 0; s < payoffs.size(); ++s) {
    Money worst = std::numeric_limits<Money>::min();
    for (std::size_t i = 0; i < owners; ++i) {
      worst = std::max(worst, ideal[i] - payoffs[s][i]);
    }
    gamma[s] = worst;
  }
  CompromiseScan scan;
  scan.objective = *std::min_element(gamma.begin(), gamma.end());
  for (std::size_t s = 0; s < payoffs.size(); ++s) {
    if (gamma[s] == scan.objective) scan.profiles.push_back(s);
  }
  return scan;
}

}  // namespace facloc::testing

#endif  // FACLOC_TESTS_ORACLES_HPP
