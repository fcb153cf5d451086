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

#include "facloc/solvers.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace facloc {
namespace {

void fill_report(SolutionReport& report, const PayoffTensor& tensor,
                 const ProfileSpace& space) {
  report.profiles.reserve(report.profile_indices.size());
  report.values.reserve(report.profile_indices.size());
  for (std::uint64_t s : report.profile_indices) {
    report.profiles.push_back(space.at(s));
    report.values.push_back(tensor.payoffs(s));
  }
}

bool is_equilibrium(const PayoffTensor& tensor, const ProfileSpace& space,
                    std::uint64_t s) {
  for (std::int32_t owner = 0; owner < space.owner_count(); ++owner) {
    const Money mine = tensor.payoff(s, owner);
    for (std::int32_t alt = 0; alt < space.strategy_count(); ++alt) {
      if (tensor.payoff(space.with_strategy(s, owner, alt), owner) > mine) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

IdealVector ideal_vector(const PayoffTensor& tensor) {
  IdealVector ideal(static_cast<std::size_t>(tensor.owner_count()),
                    std::numeric_limits<Money>::min());
  for (std::uint64_t s = 0; s < tensor.profile_count(); ++s) {
    for (std::int32_t i = 0; i < tensor.owner_count(); ++i) {
      ideal[static_cast<std::size_t>(i)] =
          std::max(ideal[static_cast<std::size_t>(i)], tensor.payoff(s, i));
    }
  }
  return ideal;
}

SolutionReport find_nash(const PayoffTensor& tensor, const ProfileSpace& space,
                         std::int32_t threads) {
  SolutionReport report;
  report.kind = SolutionKind::Nash;

  std::uint64_t workers = threads > 0
                              ? static_cast<std::uint64_t>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::uint64_t>(workers,
                                    std::max<std::uint64_t>(1, space.count()));

  if (workers <= 1) {
    for (std::uint64_t s = 0; s < space.count(); ++s) {
      if (is_equilibrium(tensor, space, s)) report.profile_indices.push_back(s);
    }
  } else {
    // Fixed disjoint chunks concatenated in chunk order keep the report
    // identical to the single-threaded scan.
    const std::uint64_t chunk = (space.count() + workers - 1) / workers;
    std::vector<std::vector<std::uint64_t>> found(
        static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (std::uint64_t t = 0; t < workers; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(space.count(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, t, begin, end] {
        for (std::uint64_t s = begin; s < end; ++s) {
          if (is_equilibrium(tensor, space, s)) {
            found[static_cast<std::size_t>(t)].push_back(s);
          }
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
    for (const auto& part : found) {
      report.profile_indices.insert(report.profile_indices.end(), part.begin(),
                                    part.end());
    }
  }

  fill_report(report, tensor, space);
  return report;
}

SolutionReport compromise_set(const PayoffTensor& tensor,
                              const ProfileSpace& space) {
  SolutionReport report;
  report.kind = SolutionKind::Compromise;

  const IdealVector ideal = ideal_vector(tensor);
  std::optional<Money> best;
  for (std::uint64_t s = 0; s < space.count(); ++s) {
    Money worst = std::numeric_limits<Money>::min();
    for (std::int32_t i = 0; i < tensor.owner_count(); ++i) {
      worst = std::max(worst,
                       ideal[static_cast<std::size_t>(i)] - tensor.payoff(s, i));
    }
    if (!best || worst < *best) {
      best = worst;
      report.profile_indices.clear();
    }
    if (worst == *best) report.profile_indices.push_back(s);
  }

  report.objective = best;
  fill_report(report, tensor, space);
  return report;
}

}  // namespace facloc
