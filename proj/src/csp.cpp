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

#include "bigm/csp.hpp"

#include <algorithm>

namespace bigm {

int Domain::index_of(const std::string& label) const {
  auto it = std::find(values.begin(), values.end(), label);
  if (it == values.end()) return -1;
  return static_cast<int>(it - values.begin());
}

int CspInstance::var_index(const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) return -1;
  return static_cast<int>(it - variables.begin());
}

BinaryRelation neq_relation(const Domain& domain) {
  BinaryRelation relation;
  const int n = static_cast<int>(domain.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) relation.add(a, b);
    }
  }
  return relation;
}

bool check_homomorphism(const CspInstance& instance, const Mapping& mapping) {
  std::vector<int> value_of(instance.variables.size(), -1);
  for (std::size_t i = 0; i < instance.variables.size(); ++i) {
    auto it = mapping.find(instance.variables[i]);
    if (it == mapping.end()) {
      raise(ErrorCode::PartialMapping,
            "mapping misses variable '" + instance.variables[i] + "'");
    }
    int d = instance.domain.index_of(it->second);
    if (d < 0) {
      raise(ErrorCode::PartialMapping,
            "mapping sends '" + instance.variables[i] +
                "' to unknown value '" + it->second + "'");
    }
    value_of[i] = d;
  }
  for (const CspConstraint& c : instance.constraints) {
    if (!c.relation.allows(value_of[c.u], value_of[c.v])) return false;
  }
  return true;
}

bool CspCodebook::covers(VarId id) const {
  for (const auto& block : ids) {
    for (VarId candidate : block) {
      if (candidate == id) return true;
    }
  }
  return false;
}

CspCodebook encode_csp_into(Model& model, const CspInstance& instance) {
  CspCodebook codebook;
  codebook.variables = instance.variables;
  codebook.labels = instance.domain.values;

  const int num_values = static_cast<int>(instance.domain.size());
  for (const std::string& var : instance.variables) {
    std::vector<VarId> block;
    block.reserve(num_values);
    for (const std::string& label : instance.domain.values) {
      block.push_back(model.add_bool_var("y_" + var + "_" + label));
    }
    // exactly one value per variable
    LinearConstraint one_hot;
    for (VarId id : block) one_hot.terms.push_back({id, 1});
    one_hot.sense = Sense::EQ;
    one_hot.rhs = 1;
    model.add_constraint(std::move(one_hot));
    codebook.ids.push_back(std::move(block));
  }

  // one cut per forbidden ordered pair; a self-loop's diagonal pair
  // collapses to a single term (2y <= 1 forces y = 0)
  for (const CspConstraint& c : instance.constraints) {
    for (int a = 0; a < num_values; ++a) {
      for (int b = 0; b < num_values; ++b) {
        if (c.relation.allows(a, b)) continue;
        LinearConstraint cut;
        if (c.u == c.v && a == b) {
          cut.terms = {{codebook.ids[c.u][a], 2}};
        } else {
          cut.terms = {{codebook.ids[c.u][a], 1}, {codebook.ids[c.v][b], 1}};
        }
        cut.sense = Sense::LE;
        cut.rhs = 1;
        model.add_constraint(std::move(cut));
      }
    }
  }
  return codebook;
}

std::pair<Model, CspCodebook> encode_csp(const CspInstance& instance) {
  Model model;
  CspCodebook codebook = encode_csp_into(model, instance);
  model.set_objective(Objective{ObjectiveSense::Feasibility, {}});
  return {std::move(model), std::move(codebook)};
}

Mapping decode(const CspCodebook& codebook, const Assignment& assignment) {
  Mapping mapping;
  for (std::size_t v = 0; v < codebook.ids.size(); ++v) {
    int hot = -1;
    for (std::size_t d = 0; d < codebook.ids[v].size(); ++d) {
      if (assignment.at(codebook.ids[v][d]) == 0) continue;
      if (hot >= 0) {
        raise(ErrorCode::NotOneHot, "variable '" + codebook.variables[v] +
                                        "' has more than one hot value");
      }
      hot = static_cast<int>(d);
    }
    if (hot < 0) {
      raise(ErrorCode::NotOneHot,
            "variable '" + codebook.variables[v] + "' has no hot value");
    }
    mapping[codebook.variables[v]] = codebook.labels[hot];
  }
  return mapping;
}

CspInstance worked_instance() {
  CspInstance instance;
  instance.domain = Domain{{"Blue", "Red", "Green"}};
  instance.variables = {"x1", "x2", "x3", "x4", "x5"};
  BinaryRelation neq = neq_relation(instance.domain);
  const std::pair<int, int> edges[] = {
      {0, 1},  // x1, x2
      {1, 2},  // x2, x3
      {0, 3},  // x1, x4
      {3, 4},  // x4, x5
      {4, 2},  // x5, x3
      {3, 1},  // x4, x2
      {4, 1},  // x5, x2
  };
  for (auto [u, v] : edges) {
    instance.constraints.push_back(CspConstraint{u, v, neq});
  }
  return instance;
}

}  // namespace bigm
