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
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bigm/model.hpp"

namespace bigm {

/// Ordered list of distinct value labels. Order is fixed because the
/// one-hot encoding derives variable ids from it.
struct Domain {
  std::vector<std::string> values;

  int index_of(const std::string& label) const;  // -1 when absent
  std::size_t size() const { return values.size(); }
};

/// Set of allowed ordered pairs of domain indices.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::set<std::pair<int, int>> allowed)
      : allowed_(std::move(allowed)) {}

  void add(int a, int b) { allowed_.insert({a, b}); }
  bool allows(int a, int b) const { return allowed_.contains({a, b}); }
  std::size_t size() const { return allowed_.size(); }
  const std::set<std::pair<int, int>>& pairs() const { return allowed_; }

 private:
  std::set<std::pair<int, int>> allowed_;
};

/// One binary constraint: the ordered scope (u, v) must map into the
/// relation. Scopes are directed exactly as written; no symmetrization
/// is applied.
struct CspConstraint {
  int u = 0;  // index into CspInstance::variables
  int v = 0;
  BinaryRelation relation;
};

struct CspInstance {
  Domain domain;
  std::vector<std::string> variables;
  std::vector<CspConstraint> constraints;

  int var_index(const std::string& name) const;  // -1 when absent
};

/// Total variable -> value-label map.
using Mapping = std::map<std::string, std::string>;

/// All ordered pairs (a, b) with a != b; 6 pairs for a 3-value domain.
BinaryRelation neq_relation(const Domain& domain);

/// True iff for every constraint with scope (u, v) the image
/// (mapping[u], mapping[v]) lies in the constraint's relation.
/// Throws PartialMapping when the mapping misses a variable or uses a
/// label outside the domain.
bool check_homomorphism(const CspInstance& instance, const Mapping& mapping);

/// Deterministic (variable, value) <-> model-variable table for a one-hot
/// encoding, variable-major in domain order.
struct CspCodebook {
  std::vector<std::string> variables;
  std::vector<std::string> labels;
  std::vector<std::vector<VarId>> ids;  // ids[var][value]

  VarId id_of(int var, int value) const { return ids[var][value]; }
  bool covers(VarId id) const;
};

/// Appends the one-hot encoding of `instance` to `model`: a binary
/// y_<var>_<label> per (variable, value), one exactly-one row per
/// variable, and one row y_u_a + y_v_b <= 1 per forbidden pair (a, b) of
/// each constraint. The objective is left untouched.
CspCodebook encode_csp_into(Model& model, const CspInstance& instance);

/// Fresh feasibility model plus codebook for `instance`.
std::pair<Model, CspCodebook> encode_csp(const CspInstance& instance);

/// Reads the one-hot blocks back into a mapping. Throws NotOneHot when a
/// block does not have exactly one hot binary, MissingValue when the
/// assignment does not cover the block.
Mapping decode(const CspCodebook& codebook, const Assignment& assignment);

/// The bundled 3-coloring instance: colors {Blue, Red, Green}, variables
/// x1..x5 and the seven inequality edges of the demo graph. It has
/// exactly 6 proper colorings.
CspInstance worked_instance();

}  // namespace bigm
