// Copyright 2026 bigm developers
//
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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bigm/model.hpp"
#include "bigm/sequence.hpp"

namespace bigm {

/// Default ceiling on the number of box points a brute-force run may
/// visit before it refuses with SearchSpaceTooLarge.
inline constexpr std::int64_t kDefaultGuard = 10'000'000;

struct OracleReport {
  std::int64_t feasible_count = 0;
  std::optional<std::int64_t> optimum;  // absent for Feasibility objectives
  std::optional<Assignment> argmax;     // lexicographically first optimum
  std::optional<std::vector<Assignment>> enumerated;
};

struct OracleOptions {
  bool collect = false;
  std::int64_t guard = kDefaultGuard;
  /// Called on every feasible assignment, in lexicographic order.
  std::function<void(const Assignment&)> visit;
};

/// Walks the full integer box in lexicographic order (ascending VarId,
/// ascending value) and evaluates every row and the objective with exact
/// integer arithmetic. Never consults the LP or MILP layers.
/// Throws SearchSpaceTooLarge, ValidationError.
OracleReport brute_force(const Model& model, const OracleOptions& options = {});

/// Independent check of the Soft-mode sequence objective: enumerates raw
/// state sequences and scores each application arithmetically
/// (s_step mod k == r), never via the big-M encoding. Require-mode
/// applications filter the sequences; Soft-mode weights are summed when
/// satisfied. Returns the maximum score, or nullopt when no sequence
/// passes the Require filter. Throws SearchSpaceTooLarge, UnknownKernel.
std::optional<std::int64_t> property_oracle_sequence(
    const SequenceSpec& spec, std::span<const KernelApplication> applications,
    std::int64_t guard = kDefaultGuard);

}  // namespace bigm
