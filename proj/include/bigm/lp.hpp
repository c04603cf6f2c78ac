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

#include <span>
#include <vector>

#include "bigm/model.hpp"

namespace bigm {

// Shared numeric tolerances. Feasibility applies to rows of a solved LP
// point, optimality to reduced costs, integrality to rounding inside the
// branch-and-bound layer.
inline constexpr double kLpFeasTol = 1e-7;
inline constexpr double kLpBoundTol = 1e-9;
inline constexpr double kLpOptTol = 1e-9;
inline constexpr double kMipIntTol = 1e-6;

struct LpRow {
  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  Sense sense = Sense::LE;
  double rhs = 0.0;
};

/// Continuous relaxation of a model: same rows, box bounds per variable,
/// integrality dropped. Integer data is converted to float exactly once,
/// here.
struct LpProblem {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<LpRow> rows;
  ObjectiveSense sense = ObjectiveSense::Feasibility;
  std::vector<double> objective;  // dense, one weight per variable
};

enum class LpStatus { Optimal, Infeasible };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> point;  // indexed by VarId; empty when Infeasible
  double objective = 0.0;     // in the problem's own sense
};

/// Throws ValidationError when the model does not validate.
LpProblem relax(const Model& model);

/// Bounded-variable two-phase primal simplex. Deterministic: Dantzig
/// pricing with lowest-index ties, switching to Bland's rule after 50
/// consecutive degenerate pivots. Unboundedness cannot occur (every
/// column has finite bounds). Throws NumericalFailure if the pivot
/// safeguards are exhausted or the final point fails verification.
LpOutcome solve_lp(const LpProblem& problem);

/// Same, with substitute bounds (used by branch-and-bound nodes).
LpOutcome solve_lp(const LpProblem& problem, std::span<const double> lo,
                   std::span<const double> hi);

}  // namespace bigm
