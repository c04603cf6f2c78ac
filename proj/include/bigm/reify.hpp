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
#include <span>
#include <utility>
#include <vector>

#include "bigm/model.hpp"

namespace bigm {

/// A binary indicator paired with an integer weight. Reification kernels
/// hand these back so callers can harden them (require) or aggregate them
/// into a weighted objective (maximize_weighted).
struct ReifiedTerm {
  VarId indicator;
  std::int64_t weight = 1;
};

/// Congruence condition target ≡ remainder (mod modulus) on a bounded
/// integer variable with lo >= 0. modulus >= 1, 0 <= remainder < modulus.
struct CongruenceSpec {
  VarId target;
  std::int64_t modulus = 2;
  std::int64_t remainder = 0;
};

/// Big-M constant for one reification. Must dominate |x - k*n - r| over
/// the whole (x, n) box so that an unset indicator deactivates both rows.
struct BigM {
  std::int64_t value = 0;
};

/// Upper bound for the auxiliary quotient variable: floor((hi(x) - r) / k),
/// clamped to 0 when negative.
std::int64_t congruence_aux_hi(const Model& model, const CongruenceSpec& spec);

/// Smallest valid big-M for `spec` given the auxiliary bound n_hi:
/// max(hi(x) - r, k*n_hi + r - lo(x)), clamped to >= 0. Equals the
/// maximum of |x - k*n - r| over the box, so rows with the indicator
/// unset are satisfiable for every x.
/// Throws InvalidSpec.
BigM compute_big_m(const Model& model, const CongruenceSpec& spec,
                   std::int64_t n_hi);

/// Half-reifies x ≡ r (mod k): adds an auxiliary integer n in [0, n_hi],
/// a binary indicator b, and the two rows
///     x - k*n - r <=  M*(1 - b)
///     x - k*n - r >= -M*(1 - b)
/// expanded to pure linear form. b = 1 forces the congruence; b = 0
/// forces nothing. Returns (b, weight).
/// Throws InvalidSpec.
ReifiedTerm reify_congruence(Model& model, const CongruenceSpec& spec,
                             std::int64_t weight = 1);

/// Hardens a soft indicator by adding b = 1. Throws UnknownVar.
void require(Model& model, const ReifiedTerm& term);

/// Emits the even and odd half-reifications for x plus the coupling row
/// b_even + b_odd = 1. Because every integer is even xor odd this turns
/// the two half-reifications into a full reification: in every feasible
/// solution b_even = 1 iff x is even. Throws InvalidSpec.
std::pair<ReifiedTerm, ReifiedTerm> complement_pair(Model& model, VarId x);

enum class CardinalitySense { AtLeast, AtMost, Exactly };

/// Adds sum(indicators) >=/<=/= k. Throws NotBinary, BadK.
void cardinality(Model& model, std::span<const VarId> indicators,
                 CardinalitySense sense, std::int64_t k);

/// Sets the objective to Maximize sum(weight * indicator). Duplicate
/// indicators are coalesced; an empty list yields Feasibility.
/// Throws NotBinary.
void maximize_weighted(Model& model, std::span<const ReifiedTerm> terms);

}  // namespace bigm
