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

#include "bigm/reify.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bigm {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_spec(const Model& model, const CongruenceSpec& spec) {
  const Variable& x = model.var(spec.target);  // throws UnknownVar
  if (x.kind != VarKind::IntBounded) {
    raise(ErrorCode::InvalidSpec,
          "congruence target '" + x.name + "' must be a bounded integer");
  }
  if (x.lo < 0) {
    raise(ErrorCode::InvalidSpec,
          "congruence target '" + x.name + "' must have lo >= 0");
  }
  if (spec.modulus < 1) {
    raise(ErrorCode::InvalidSpec,
          "modulus must be >= 1, got " + std::to_string(spec.modulus));
  }
  if (spec.remainder < 0 || spec.remainder >= spec.modulus) {
    raise(ErrorCode::InvalidSpec,
          "remainder must lie in [0, modulus), got " +
              std::to_string(spec.remainder));
  }
}

// Picks the paper's names for the parity kernels and a mod-style name
// otherwise, uniquified with a numeric suffix when already taken.
std::string fresh_name(const Model& model, const std::string& base) {
  if (!model.find_var(base)) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!model.find_var(candidate)) return candidate;
  }
}

std::string kernel_stem(const CongruenceSpec& spec) {
  if (spec.modulus == 2 && spec.remainder == 0) return "even";
  if (spec.modulus == 2 && spec.remainder == 1) return "odd";
  return "mod" + std::to_string(spec.modulus) + "_" +
         std::to_string(spec.remainder);
}

}  // namespace

std::int64_t congruence_aux_hi(const Model& model, const CongruenceSpec& spec) {
  check_spec(model, spec);
  const Variable& x = model.var(spec.target);
  return std::max<std::int64_t>(
      0, floor_div(x.hi - spec.remainder, spec.modulus));
}

BigM compute_big_m(const Model& model, const CongruenceSpec& spec,
                   std::int64_t n_hi) {
  check_spec(model, spec);
  if (n_hi < 0) {
    raise(ErrorCode::InvalidSpec, "auxiliary upper bound must be >= 0");
  }
  const Variable& x = model.var(spec.target);
  std::int64_t m = std::max(x.hi - spec.remainder,
                            spec.modulus * n_hi + spec.remainder - x.lo);
  return BigM{std::max<std::int64_t>(0, m)};
}

ReifiedTerm reify_congruence(Model& model, const CongruenceSpec& spec,
                             std::int64_t weight) {
  check_spec(model, spec);
  const std::int64_t k = spec.modulus;
  const std::int64_t r = spec.remainder;
  const std::int64_t n_hi = congruence_aux_hi(model, spec);
  const std::int64_t m = compute_big_m(model, spec, n_hi).value;
  const std::string stem = kernel_stem(spec);

  VarId n = model.add_int_var(fresh_name(model, "n_" + stem), 0, n_hi);
  VarId b = model.add_bool_var(fresh_name(model, "b_" + stem));

  // x - k*n - r <= M*(1 - b)   =>   x - k*n + M*b <= M + r
  model.add_constraint(LinearConstraint{
      {{spec.target, 1}, {n, -k}, {b, m}}, Sense::LE, m + r, ""});
  // x - k*n - r >= -M*(1 - b)  =>   x - k*n - M*b >= r - M
  model.add_constraint(LinearConstraint{
      {{spec.target, 1}, {n, -k}, {b, -m}}, Sense::GE, r - m, ""});

  return ReifiedTerm{b, weight};
}

void require(Model& model, const ReifiedTerm& term) {
  model.var(term.indicator);  // throws UnknownVar
  model.add_constraint(
      LinearConstraint{{{term.indicator, 1}}, Sense::EQ, 1, ""});
}

std::pair<ReifiedTerm, ReifiedTerm> complement_pair(Model& model, VarId x) {
  ReifiedTerm even = reify_congruence(model, CongruenceSpec{x, 2, 0});
  ReifiedTerm odd = reify_congruence(model, CongruenceSpec{x, 2, 1});
  model.add_constraint(LinearConstraint{
      {{even.indicator, 1}, {odd.indicator, 1}}, Sense::EQ, 1, ""});
  return {even, odd};
}

void cardinality(Model& model, std::span<const VarId> indicators,
                 CardinalitySense sense, std::int64_t k) {
  for (VarId id : indicators) {
    if (model.var(id).kind != VarKind::Binary) {
      raise(ErrorCode::NotBinary,
            "cardinality over non-binary variable '" + model.var(id).name +
                "'");
    }
  }
  if (k < 0 || k > static_cast<std::int64_t>(indicators.size())) {
    raise(ErrorCode::BadK, "cardinality bound " + std::to_string(k) +
                               " outside [0, " +
                               std::to_string(indicators.size()) + "]");
  }
  LinearConstraint row;
  for (VarId id : indicators) row.terms.push_back({id, 1});
  row.rhs = k;
  switch (sense) {
    case CardinalitySense::AtLeast: row.sense = Sense::GE; break;
    case CardinalitySense::AtMost: row.sense = Sense::LE; break;
    case CardinalitySense::Exactly: row.sense = Sense::EQ; break;
  }
  model.add_constraint(std::move(row));
}

void maximize_weighted(Model& model, std::span<const ReifiedTerm> terms) {
  if (terms.empty()) {
    model.set_objective(Objective{ObjectiveSense::Feasibility, {}});
    return;
  }
  std::map<std::uint32_t, std::int64_t> weights;  // coalesce, keep id order
  for (const ReifiedTerm& term : terms) {
    if (model.var(term.indicator).kind != VarKind::Binary) {
      raise(ErrorCode::NotBinary,
            "objective indicator '" + model.var(term.indicator).name +
                "' is not binary");
    }
    weights[term.indicator.index] += term.weight;
  }
  Objective objective{ObjectiveSense::Maximize, {}};
  for (const auto& [index, weight] : weights) {
    objective.terms.push_back({VarId{index}, weight});
  }
  model.set_objective(std::move(objective));
}

}  // namespace bigm
