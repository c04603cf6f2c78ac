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

#include "bigm/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bigm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvertedBounds: return "InvertedBounds";
    case ErrorCode::UnknownVar: return "UnknownVar";
    case ErrorCode::DuplicateTerm: return "DuplicateTerm";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::BadStep: return "BadStep";
    case ErrorCode::UnknownKernel: return "UnknownKernel";
    case ErrorCode::NotOneHot: return "NotOneHot";
    case ErrorCode::PartialMapping: return "PartialMapping";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::int64_t Assignment::at(VarId id) const {
  if (!has(id)) {
    raise(ErrorCode::MissingValue,
          "assignment has no value for variable #" + std::to_string(id.index));
  }
  return values_[id.index];
}

VarId Model::add_int_var(std::string name, std::int64_t lo, std::int64_t hi) {
  if (name.empty()) {
    raise(ErrorCode::DuplicateName, "variable name must be nonempty");
  }
  if (by_name_.contains(name)) {
    raise(ErrorCode::DuplicateName, "duplicate variable name '" + name + "'");
  }
  if (lo > hi) {
    raise(ErrorCode::InvertedBounds,
          "variable '" + name + "' has lo " + std::to_string(lo) + " > hi " +
              std::to_string(hi));
  }
  VarId id{static_cast<std::uint32_t>(variables_.size())};
  by_name_.emplace(name, id);
  variables_.push_back(
      Variable{id, std::move(name), VarKind::IntBounded, lo, hi});
  return id;
}

VarId Model::add_bool_var(std::string name) {
  VarId id = add_int_var(std::move(name), 0, 1);
  variables_.back().kind = VarKind::Binary;
  return id;
}

std::size_t Model::add_constraint(LinearConstraint constraint) {
  std::set<std::uint32_t> seen;
  for (const LinearTerm& term : constraint.terms) {
    if (term.var.index >= variables_.size()) {
      raise(ErrorCode::UnknownVar,
            "constraint references unknown variable #" +
                std::to_string(term.var.index));
    }
    if (!seen.insert(term.var.index).second) {
      raise(ErrorCode::DuplicateTerm,
            "constraint repeats variable '" + var(term.var).name + "'");
    }
  }
  if (constraint.label.empty()) {
    constraint.label = "c" + std::to_string(constraints_.size());
  }
  constraints_.push_back(std::move(constraint));
  return constraints_.size() - 1;
}

void Model::set_objective(Objective objective) {
  objective_ = std::move(objective);
}

const Variable& Model::var(VarId id) const {
  if (id.index >= variables_.size()) {
    raise(ErrorCode::UnknownVar,
          "unknown variable #" + std::to_string(id.index));
  }
  return variables_[id.index];
}

std::optional<VarId> Model::find_var(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Model Model::from_parts(std::vector<Variable> variables,
                        std::vector<LinearConstraint> constraints,
                        Objective objective) {
  Model m;
  m.variables_ = std::move(variables);
  m.constraints_ = std::move(constraints);
  m.objective_ = std::move(objective);
  for (const Variable& v : m.variables_) {
    m.by_name_.emplace(v.name, v.id);
  }
  return m;
}

std::vector<Violation> Model::validate() const {
  std::vector<Violation> out;
  std::set<std::string> names;
  std::set<std::string> labels;

  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const Variable& v = variables_[i];
    if (v.id.index != i) {
      out.push_back({ErrorCode::ValidationError,
                     "variable '" + v.name + "' has id " +
                         std::to_string(v.id.index) + ", expected " +
                         std::to_string(i)});
    }
    if (v.name.empty()) {
      out.push_back({ErrorCode::ValidationError,
                     "variable #" + std::to_string(i) + " has empty name"});
    }
    if (!names.insert(v.name).second) {
      out.push_back({ErrorCode::DuplicateName,
                     "duplicate variable name '" + v.name + "'"});
    }
    if (v.lo > v.hi) {
      out.push_back({ErrorCode::InvertedBounds,
                     "variable '" + v.name + "' has lo " +
                         std::to_string(v.lo) + " > hi " +
                         std::to_string(v.hi)});
    }
    if (v.kind == VarKind::Binary && (v.lo != 0 || v.hi != 1)) {
      out.push_back({ErrorCode::ValidationError,
                     "binary variable '" + v.name + "' must have bounds [0,1]"});
    }
  }

  for (const LinearConstraint& c : constraints_) {
    std::set<std::uint32_t> seen;
    for (const LinearTerm& term : c.terms) {
      if (term.var.index >= variables_.size()) {
        out.push_back({ErrorCode::UnknownVar,
                       "constraint '" + c.label +
                           "' references unknown variable #" +
                           std::to_string(term.var.index)});
      } else if (!seen.insert(term.var.index).second) {
        out.push_back({ErrorCode::DuplicateTerm,
                       "constraint '" + c.label + "' repeats variable '" +
                           variables_[term.var.index].name + "'"});
      }
    }
    if (!c.label.empty() && !labels.insert(c.label).second) {
      out.push_back({ErrorCode::DuplicateName,
                     "duplicate constraint label '" + c.label + "'"});
    }
  }

  if (objective_.sense == ObjectiveSense::Feasibility &&
      !objective_.terms.empty()) {
    out.push_back({ErrorCode::ValidationError,
                   "feasibility objective must have no terms"});
  }
  for (const LinearTerm& term : objective_.terms) {
    if (term.var.index >= variables_.size()) {
      out.push_back({ErrorCode::UnknownVar,
                     "objective references unknown variable #" +
                         std::to_string(term.var.index)});
    }
  }
  return out;
}

bool eval_constraint(const LinearConstraint& constraint,
                     const Assignment& assignment) {
  std::int64_t sum = 0;
  for (const LinearTerm& term : constraint.terms) {
    sum += term.coef * assignment.at(term.var);
  }
  switch (constraint.sense) {
    case Sense::LE: return sum <= constraint.rhs;
    case Sense::GE: return sum >= constraint.rhs;
    case Sense::EQ: return sum == constraint.rhs;
  }
  return false;
}

std::int64_t eval_objective(const Objective& objective,
                            const Assignment& assignment) {
  if (objective.sense == ObjectiveSense::Feasibility) return 0;
  std::int64_t sum = 0;
  for (const LinearTerm& term : objective.terms) {
    sum += term.coef * assignment.at(term.var);
  }
  return sum;
}

void require_valid(const Model& model) {
  std::vector<Violation> violations = model.validate();
  if (violations.empty()) return;
  std::ostringstream out;
  out << "model failed validation:";
  for (const Violation& v : violations) {
    out << "\n  [" << error_code_name(v.code) << "] " << v.message;
  }
  raise(ErrorCode::ValidationError, out.str());
}

}  // namespace bigm
