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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bigm/errors.hpp"

namespace bigm {

/// Dense variable identifier. Indices are contiguous from 0 in creation
/// order and stable for the lifetime of the owning model.
struct VarId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VarId, VarId) = default;
};

enum class VarKind { IntBounded, Binary };

struct Variable {
  VarId id;
  std::string name;
  VarKind kind = VarKind::IntBounded;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

enum class Sense { LE, GE, EQ };

struct LinearTerm {
  VarId var;
  std::int64_t coef = 0;

  friend constexpr auto operator<=>(const LinearTerm&,
                                    const LinearTerm&) = default;
};

/// One pure linear row: sum(coef * var) sense rhs. All data is exact
/// integer; indicator constraints are stored pre-expanded into this form.
struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Sense sense = Sense::LE;
  std::int64_t rhs = 0;
  std::string label;  // auto-assigned "c<index>" when left empty
};

enum class ObjectiveSense { Maximize, Minimize, Feasibility };

struct Objective {
  ObjectiveSense sense = ObjectiveSense::Feasibility;
  std::vector<LinearTerm> terms;  // empty when sense == Feasibility
};

/// Total map VarId -> integer, dense over a model's variables.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::int64_t> values)
      : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  bool has(VarId id) const { return id.index < values_.size(); }

  /// Throws MissingValue when the assignment does not cover `id`.
  std::int64_t at(VarId id) const;
  std::int64_t operator[](VarId id) const { return at(id); }

  const std::vector<std::int64_t>& values() const { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::int64_t> values_;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

/// Integer linear model: variables with finite bounds, linear rows, one
/// objective. Built single-threaded; once validated it is treated as
/// immutable and may be shared read-only across concurrent solver runs.
class Model {
 public:
  Model() = default;

  /// Appends a bounded integer variable.
  /// Throws DuplicateName, InvertedBounds.
  VarId add_int_var(std::string name, std::int64_t lo, std::int64_t hi);

  /// Appends a binary variable with bounds [0, 1]. Throws DuplicateName.
  VarId add_bool_var(std::string name);

  /// Appends a constraint and returns its index. Rows keep insertion
  /// order, so repeated builds produce identical models.
  /// Throws UnknownVar, DuplicateTerm.
  std::size_t add_constraint(LinearConstraint constraint);

  void set_objective(Objective objective);

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  const Objective& objective() const { return objective_; }

  std::size_t num_vars() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }

  const Variable& var(VarId id) const;
  std::optional<VarId> find_var(std::string_view name) const;

  /// Checks every structural invariant and returns the violations found
  /// (empty means the model is well formed). Never throws; solvers refuse
  /// models for which this is non-empty.
  std::vector<Violation> validate() const;

  /// Reassembles a model from raw parts without any checking, e.g. for
  /// deserializers and for tests that need to exercise validate() on
  /// broken input. Run validate() before handing the result to a solver.
  static Model from_parts(std::vector<Variable> variables,
                          std::vector<LinearConstraint> constraints,
                          Objective objective);

 private:
  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  Objective objective_;
  std::unordered_map<std::string, VarId> by_name_;
};

/// Exact integer evaluation; true iff the row holds under `assignment`.
/// Throws MissingValue when a referenced variable has no value.
bool eval_constraint(const LinearConstraint& constraint,
                     const Assignment& assignment);

/// Exact integer objective value; Feasibility evaluates to 0.
/// Throws MissingValue.
std::int64_t eval_objective(const Objective& objective,
                            const Assignment& assignment);

/// Throws ValidationError listing all violations unless validate() is
/// clean. Solvers call this on entry.
void require_valid(const Model& model);

}  // namespace bigm
