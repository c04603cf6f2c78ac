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

#include "bigm/mip.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>

#include "bigm/lp.hpp"

namespace bigm {
namespace {

bool exactly_feasible(const Model& model, const Assignment& assignment) {
  for (std::size_t j = 0; j < model.num_vars(); ++j) {
    const Variable& v = model.variables()[j];
    std::int64_t value = assignment.at(v.id);
    if (value < v.lo || value > v.hi) return false;
  }
  for (const LinearConstraint& row : model.constraints()) {
    if (!eval_constraint(row, assignment)) return false;
  }
  return true;
}

std::optional<std::int64_t> box_points(const Model& model,
                                       std::int64_t guard) {
  std::int64_t size = 1;
  for (const Variable& v : model.variables()) {
    std::int64_t span = v.hi - v.lo + 1;
    if (size > guard / span) return std::nullopt;
    size *= span;
  }
  return size;
}

}  // namespace

MipResult solve_mip(const Model& model, const MipOptions& options) {
  require_valid(model);
  const std::size_t n = model.num_vars();
  const ObjectiveSense sense = model.objective().sense;
  const std::int64_t sign = sense == ObjectiveSense::Minimize ? -1 : 1;

  // Canonical internal orientation: always maximize.
  LpProblem relaxation = relax(model);
  relaxation.sense = ObjectiveSense::Maximize;
  if (sense == ObjectiveSense::Minimize) {
    for (double& w : relaxation.objective) w = -w;
  } else if (sense == ObjectiveSense::Feasibility) {
    std::fill(relaxation.objective.begin(), relaxation.objective.end(), 0.0);
  }

  struct Node {
    std::vector<double> lo;
    std::vector<double> hi;
  };
  std::vector<Node> stack;
  stack.push_back(Node{relaxation.lo, relaxation.hi});

  std::ostream* log = options.log ? options.log : &std::cerr;
  std::optional<Assignment> incumbent;
  std::int64_t incumbent_value = std::numeric_limits<std::int64_t>::min();
  std::int64_t nodes = 0;

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    ++nodes;

    LpOutcome lp = solve_lp(relaxation, node.lo, node.hi);
    if (lp.status == LpStatus::Infeasible) {
      if (options.verbose) {
        *log << "node=" << nodes << " bound=infeasible incumbent="
             << (incumbent ? std::to_string(sign * incumbent_value) : "-")
             << "\n";
      }
      continue;
    }

    // Integer objective data: anything below the next integer cannot beat
    // the incumbent.
    const std::int64_t node_bound = static_cast<std::int64_t>(
        std::floor(lp.objective + kMipIntTol));
    if (options.verbose) {
      *log << "node=" << nodes << " bound=" << sign * node_bound
           << " incumbent="
           << (incumbent ? std::to_string(sign * incumbent_value) : "-")
           << "\n";
    }
    if (incumbent && node_bound <= incumbent_value) continue;

    // Most fractional variable, ties to the lowest id.
    int branch_var = -1;
    double branch_frac = kMipIntTol;
    for (std::size_t j = 0; j < n; ++j) {
      double v = lp.point[j];
      double frac = std::abs(v - std::llround(v));
      if (frac > branch_frac) {
        branch_frac = frac;
        branch_var = static_cast<int>(j);
      }
    }

    if (branch_var < 0) {
      // LP point is integral; accept only if exactly feasible.
      std::vector<std::int64_t> values(n);
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t v = std::llround(lp.point[j]);
        v = std::max(v, static_cast<std::int64_t>(std::ceil(node.lo[j])));
        v = std::min(v, static_cast<std::int64_t>(std::floor(node.hi[j])));
        values[j] = v;
      }
      Assignment candidate(std::move(values));
      if (exactly_feasible(model, candidate)) {
        std::int64_t value =
            sign * eval_objective(model.objective(), candidate);
        if (!incumbent || value > incumbent_value) {
          incumbent = std::move(candidate);
          incumbent_value = value;
          if (options.verbose) {
            *log << "node=" << nodes << " bound=" << sign * node_bound
                 << " incumbent=" << sign * incumbent_value << "\n";
          }
        }
        continue;
      }
      // Float artifacts only: the rounded point is infeasible in exact
      // arithmetic. Split the box to keep the search exact.
      int split = -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (node.lo[j] < node.hi[j] - 0.5) {
          split = static_cast<int>(j);
          break;
        }
      }
      if (split < 0) continue;  // single point, exactly infeasible
      std::int64_t lo_i = static_cast<std::int64_t>(std::ceil(node.lo[split]));
      std::int64_t hi_i = static_cast<std::int64_t>(std::floor(node.hi[split]));
      std::int64_t mid = lo_i + (hi_i - lo_i) / 2;
      Node upper = node;
      upper.lo[split] = static_cast<double>(mid + 1);
      Node lower = std::move(node);
      lower.hi[split] = static_cast<double>(mid);
      stack.push_back(std::move(upper));
      stack.push_back(std::move(lower));
      continue;
    }

    // Children x <= floor(v), x >= ceil(v); floor child explored first.
    const double v = lp.point[branch_var];
    const double fl = std::floor(v);
    if (fl + 1.0 <= node.hi[branch_var]) {
      Node ceil_child = node;
      ceil_child.lo[branch_var] = fl + 1.0;
      stack.push_back(std::move(ceil_child));
    }
    if (fl >= node.lo[branch_var]) {
      Node floor_child = std::move(node);
      floor_child.hi[branch_var] = fl;
      stack.push_back(std::move(floor_child));
    }
  }

  MipResult result;
  result.nodes = nodes;
  if (!incumbent) {
    result.status = MipStatus::Infeasible;
    return result;
  }
  result.status = MipStatus::Optimal;
  result.best = std::move(incumbent);
  result.objective = sign * incumbent_value;
  result.bound = result.objective;
  return result;
}

EnumerateResult enumerate(const Model& model,
                          const EnumerateOptions& options) {
  require_valid(model);
  if (options.limit < 0 && !box_points(model, options.guard)) {
    raise(ErrorCode::SearchSpaceTooLarge,
          "variable box exceeds the guard of " + std::to_string(options.guard) +
              " points; set a limit to search anyway");
  }

  const std::size_t n = model.num_vars();

  struct RowState {
    std::int64_t partial = 0;
    std::int64_t res_min = 0;
    std::int64_t res_max = 0;
    Sense sense = Sense::LE;
    std::int64_t rhs = 0;
  };
  struct VarTerm {
    int row;
    std::int64_t coef;
    std::int64_t contrib_min;
    std::int64_t contrib_max;
  };

  std::vector<RowState> rows(model.num_constraints());
  std::vector<std::vector<VarTerm>> var_terms(n);
  for (std::size_t r = 0; r < model.num_constraints(); ++r) {
    const LinearConstraint& row = model.constraints()[r];
    rows[r].sense = row.sense;
    rows[r].rhs = row.rhs;
    for (const LinearTerm& term : row.terms) {
      const Variable& v = model.var(term.var);
      std::int64_t a = term.coef * v.lo;
      std::int64_t b = term.coef * v.hi;
      VarTerm vt{static_cast<int>(r), term.coef, std::min(a, b),
                 std::max(a, b)};
      rows[r].res_min += vt.contrib_min;
      rows[r].res_max += vt.contrib_max;
      var_terms[term.var.index].push_back(vt);
    }
  }

  auto possible = [](const RowState& row) {
    switch (row.sense) {
      case Sense::LE: return row.partial + row.res_min <= row.rhs;
      case Sense::GE: return row.partial + row.res_max >= row.rhs;
      case Sense::EQ:
        return row.partial + row.res_min <= row.rhs &&
               row.partial + row.res_max >= row.rhs;
    }
    return false;
  };

  EnumerateResult result;
  for (const RowState& row : rows) {
    if (!possible(row)) return result;
  }

  std::vector<std::int64_t> point(n);
  bool aborted = false;

  std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
    if (aborted) return;
    if (depth == n) {
      ++result.count;
      Assignment assignment(point);
      if (options.visit) options.visit(assignment);
      if (options.collect) result.assignments.push_back(std::move(assignment));
      if (options.limit >= 0 && result.count >= options.limit) aborted = true;
      return;
    }
    const Variable& v = model.variables()[depth];
    for (std::int64_t value = v.lo; value <= v.hi && !aborted; ++value) {
      point[depth] = value;
      bool viable = true;
      for (const VarTerm& vt : var_terms[depth]) {
        RowState& row = rows[vt.row];
        row.partial += vt.coef * value;
        row.res_min -= vt.contrib_min;
        row.res_max -= vt.contrib_max;
      }
      for (const VarTerm& vt : var_terms[depth]) {
        if (!possible(rows[vt.row])) {
          viable = false;
          break;
        }
      }
      if (viable) dfs(depth + 1);
      for (const VarTerm& vt : var_terms[depth]) {
        RowState& row = rows[vt.row];
        row.partial -= vt.coef * value;
        row.res_min += vt.contrib_min;
        row.res_max += vt.contrib_max;
      }
    }
  };
  dfs(0);
  result.truncated = aborted;
  return result;
}

}  // namespace bigm
