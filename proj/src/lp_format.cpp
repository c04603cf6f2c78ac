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

#include "bigm/lp_format.hpp"

#include <sstream>

namespace bigm {

std::string format_expr(const Model& model,
                        const std::vector<LinearTerm>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const LinearTerm& term : terms) {
    const std::string& name = model.var(term.var).name;
    std::int64_t coef = term.coef;
    if (first) {
      if (coef == 1) {
        out << name;
      } else if (coef == -1) {
        out << "- " << name;
      } else {
        out << coef << " " << name;
      }
      first = false;
      continue;
    }
    std::int64_t magnitude = coef < 0 ? -coef : coef;
    out << (coef < 0 ? " - " : " + ");
    if (magnitude != 1) out << magnitude << " ";
    out << name;
  }
  return out.str();
}

std::string format_row(const Model& model, const LinearConstraint& row) {
  const char* op = row.sense == Sense::LE   ? "<="
                   : row.sense == Sense::GE ? ">="
                                            : "=";
  std::ostringstream out;
  out << format_expr(model, row.terms) << " " << op << " " << row.rhs;
  return out.str();
}

std::string write_lp(const Model& model) {
  std::ostringstream out;
  const Objective& objective = model.objective();
  out << (objective.sense == ObjectiveSense::Maximize ? "Maximize"
                                                      : "Minimize")
      << "\n obj:";
  if (!objective.terms.empty()) {
    out << " " << format_expr(model, objective.terms);
  }
  out << "\nSubject To\n";
  for (const LinearConstraint& row : model.constraints()) {
    out << " " << row.label << ": " << format_row(model, row) << "\n";
  }
  out << "Bounds\n";
  for (const Variable& v : model.variables()) {
    out << " " << v.lo << " <= " << v.name << " <= " << v.hi << "\n";
  }
  out << "General\n";
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::IntBounded) out << " " << v.name << "\n";
  }
  out << "Binary\n";
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::Binary) out << " " << v.name << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace bigm
