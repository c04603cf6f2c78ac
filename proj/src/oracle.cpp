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

#include "bigm/oracle.hpp"

#include <string>

namespace bigm {
namespace {

// Number of points in the integer box, or nullopt on overflow past guard.
std::optional<std::int64_t> box_size(const Model& model, std::int64_t guard) {
  std::int64_t size = 1;
  for (const Variable& v : model.variables()) {
    std::int64_t span = v.hi - v.lo + 1;
    if (size > guard / span) return std::nullopt;
    size *= span;
  }
  return size;
}

struct CongruenceApp {
  int step;
  std::int64_t k;
  std::int64_t r;
  KernelMode mode;
  std::int64_t weight;
};

// Registered kernel names all denote congruences; resolve without going
// anywhere near the encoding.
CongruenceApp resolve_arithmetic(const KernelApplication& app) {
  auto [k, r] = kernel_congruence_params(app.kernel);  // UnknownKernel
  return CongruenceApp{app.step, k, r, app.mode, app.weight};
}

}  // namespace

OracleReport brute_force(const Model& model, const OracleOptions& options) {
  require_valid(model);
  if (!box_size(model, options.guard)) {
    raise(ErrorCode::SearchSpaceTooLarge,
          "variable box exceeds the guard of " +
              std::to_string(options.guard) + " points");
  }

  const std::size_t n = model.num_vars();
  const bool has_objective =
      model.objective().sense != ObjectiveSense::Feasibility;
  const bool maximize = model.objective().sense == ObjectiveSense::Maximize;

  OracleReport report;
  if (options.collect) report.enumerated.emplace();

  std::vector<std::int64_t> point(n);
  for (std::size_t i = 0; i < n; ++i) point[i] = model.variables()[i].lo;

  while (true) {
    Assignment assignment(point);
    bool feasible = true;
    for (const LinearConstraint& row : model.constraints()) {
      if (!eval_constraint(row, assignment)) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      ++report.feasible_count;
      if (has_objective) {
        std::int64_t value = eval_objective(model.objective(), assignment);
        bool better = !report.optimum ||
                      (maximize ? value > *report.optimum
                                : value < *report.optimum);
        if (better) {
          report.optimum = value;
          report.argmax = assignment;
        }
      }
      if (options.collect) report.enumerated->push_back(assignment);
      if (options.visit) options.visit(assignment);
    }

    // lexicographic odometer, last variable fastest
    std::size_t i = n;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (point[i] < model.variables()[i].hi) {
        ++point[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          point[j] = model.variables()[j].lo;
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) return report;
  }
}

std::optional<std::int64_t> property_oracle_sequence(
    const SequenceSpec& spec, std::span<const KernelApplication> applications,
    std::int64_t guard) {
  if (spec.length < 1 || spec.state_lo < 0 || spec.state_lo > spec.state_hi) {
    raise(ErrorCode::InvalidSpec, "invalid sequence spec");
  }
  const std::size_t n = static_cast<std::size_t>(spec.length) + 1;
  const std::int64_t span = spec.state_hi - spec.state_lo + 1;
  std::int64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > guard / span) {
      raise(ErrorCode::SearchSpaceTooLarge,
            "state space exceeds the guard of " + std::to_string(guard) +
                " sequences");
    }
    size *= span;
  }

  std::vector<CongruenceApp> apps;
  apps.reserve(applications.size());
  for (const KernelApplication& app : applications) {
    if (app.step < 1 || app.step > spec.length) {
      raise(ErrorCode::BadStep, "kernel step " + std::to_string(app.step) +
                                    " outside [1, " +
                                    std::to_string(spec.length) + "]");
    }
    apps.push_back(resolve_arithmetic(app));
  }

  std::optional<std::int64_t> best;
  std::vector<std::int64_t> states(n, spec.state_lo);
  while (true) {
    bool admissible = true;
    std::int64_t score = 0;
    for (const CongruenceApp& app : apps) {
      bool satisfied = states[app.step] % app.k == app.r;
      if (app.mode == KernelMode::Require && !satisfied) {
        admissible = false;
        break;
      }
      if (app.mode == KernelMode::Soft && satisfied) score += app.weight;
    }
    if (admissible && (!best || score > *best)) best = score;

    std::size_t i = n;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (states[i] < spec.state_hi) {
        ++states[i];
        for (std::size_t j = i + 1; j < n; ++j) states[j] = spec.state_lo;
        advanced = true;
        break;
      }
    }
    if (!advanced) return best;
  }
}

}  // namespace bigm
