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

#include <string>

#include "bigm/model.hpp"

namespace bigm {

/// Renders "x - 2 n_even + 10 b_even" style linear expressions; unit
/// coefficients are left implicit. Empty expressions render as "0".
std::string format_expr(const Model& model,
                        const std::vector<LinearTerm>& terms);

/// Renders one row as "<expr> <op> <rhs>" with op in {<=, >=, =}.
std::string format_row(const Model& model, const LinearConstraint& row);

/// Writes the model in LP text layout: objective, Subject To, Bounds,
/// General, Binary, End. Purely a function of the model, so repeated
/// exports are byte-identical. Every variable appears in Bounds and in
/// exactly one of General/Binary.
std::string write_lp(const Model& model);

}  // namespace bigm
