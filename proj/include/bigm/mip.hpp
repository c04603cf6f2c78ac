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
#include <iosfwd>
#include <optional>
#include <vector>

#include "bigm/model.hpp"
#include "bigm/oracle.hpp"

namespace bigm {

enum class MipStatus { Optimal, Infeasible };

struct MipResult {
  MipStatus status = MipStatus::Infeasible;
  std::optional<Assignment> best;
  std::int64_t objective = 0;  // exact; 0 for Feasibility objectives
  std::int64_t bound = 0;      // dual bound at termination
  std::int64_t nodes = 0;      // nodes explored
};

struct MipOptions {
  bool verbose = false;
  std::ostream* log = nullptr;  // defaults to std::cerr when verbose
};

/// Depth-first branch-and-bound over the LP relaxation. Branches on the
/// most fractional variable (ties: lowest id) into x <= floor(v) then
/// x >= ceil(v), exploring the floor child first. Nodes are pruned when
/// floor of the LP bound cannot beat the incumbent; integral LP points
/// are re-verified with exact integer arithmetic before they become
/// incumbents. Exact by exhaustion of the node stack.
/// Throws ValidationError, NumericalFailure.
MipResult solve_mip(const Model& model, const MipOptions& options = {});

struct EnumerateOptions {
  std::int64_t limit = -1;  // < 0 means no limit
  std::int64_t guard = kDefaultGuard;
  /// Called on each feasible assignment as it is found.
  std::function<void(const Assignment&)> visit;
  bool collect = true;
};

struct EnumerateResult {
  std::vector<Assignment> assignments;  // empty when collect is off
  std::int64_t count = 0;
  bool truncated = false;
};

/// All feasible integer assignments in lexicographic order (ascending
/// VarId, ascending value), found by exact depth-first search with
/// per-row partial-sum pruning. Never touches the LP layer. Requires the
/// box to fit under `guard` unless a limit is set.
/// Throws SearchSpaceTooLarge, ValidationError.
EnumerateResult enumerate(const Model& model,
                          const EnumerateOptions& options = {});

}  // namespace bigm
