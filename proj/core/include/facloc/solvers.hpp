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

#ifndef FACLOC_SOLVERS_HPP
#define FACLOC_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "facloc/market_game.hpp"
#include "facloc/scenario.hpp"
#include "facloc/types.hpp"

namespace facloc {

/// Per-owner maxima over the whole tensor; the reference point the
/// compromise residuals are measured from.
using IdealVector = std::vector<Money>;

enum class SolutionKind { Nash, Compromise };

/// Solver output: the selected profiles (by index and materialized), their
/// payoff vectors, and for the compromise solver the achieved min-max
/// residual. The Nash set may be empty; the compromise set never is.
struct SolutionReport {
  SolutionKind kind = SolutionKind::Nash;
  std::vector<std::uint64_t> profile_indices;
  std::vector<JointProfile> profiles;
  std::vector<std::vector<Money>> values;
  std::optional<Money> objective;

  bool empty() const { return profile_indices.empty(); }
};

IdealVector ideal_vector(const PayoffTensor& tensor);

/// All profiles where no owner can raise its own payoff by a unilateral
/// strategy change (weak best response), in enumeration order. `threads`
/// <= 0 picks the hardware concurrency; the report does not depend on it.
SolutionReport find_nash(const PayoffTensor& tensor, const ProfileSpace& space,
                         std::int32_t threads = 0);

/// All profiles minimizing the largest per-owner residual M_i - payoff_i,
/// in enumeration order, with the achieved objective.
SolutionReport compromise_set(const PayoffTensor& tensor,
                              const ProfileSpace& space);

}  // namespace facloc

#endif  // FACLOC_SOLVERS_HPP
