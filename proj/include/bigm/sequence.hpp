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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigm/reify.hpp"

namespace bigm {

/// A chain of bounded integer states s_0..s_T sharing one [lo, hi] box.
/// `length` counts transitions, so length T yields T+1 states.
struct SequenceSpec {
  int length = 1;
  std::int64_t state_lo = 0;
  std::int64_t state_hi = 0;
};

/// Per-step constraint generator. A kernel receives the previous and next
/// state variables plus the model under construction, appends whatever
/// variables and rows it needs, and returns weighted indicators. Kernels
/// must only append; they never touch pre-existing rows.
class TransitionKernel {
 public:
  using Fn =
      std::function<std::vector<ReifiedTerm>(Model&, VarId last, VarId next)>;

  TransitionKernel(std::string name, Fn fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const { return name_; }

  std::vector<ReifiedTerm> apply(Model& model, VarId last_state,
                                 VarId next_state) const {
    return fn_(model, last_state, next_state);
  }

 private:
  std::string name_;
  Fn fn_;
};

/// Parity kernels. Both constrain the next state only; the previous state
/// is received and ignored. Applying one adds a single auxiliary integer,
/// a single binary and two big-M rows, and yields the singleton [(b, 1)].
TransitionKernel kernel_even();
TransitionKernel kernel_odd();

/// General congruence kernel: next_state ≡ r (mod k). kernel_congruence(2, 0)
/// emits rows identical to kernel_even(). Throws InvalidSpec.
TransitionKernel kernel_congruence(std::int64_t k, std::int64_t r);

/// Resolves a registered kernel name: "even", "odd" or "congruence:k:r".
/// Throws UnknownKernel.
TransitionKernel kernel_from_name(std::string_view name);

/// (modulus, remainder) of a registered kernel name, for arithmetic
/// re-evaluation independent of the encoding. Throws UnknownKernel.
std::pair<std::int64_t, std::int64_t> kernel_congruence_params(
    std::string_view name);

enum class KernelMode { Soft, Require };

/// One kernel application at transition step t (constraining state s_t).
struct KernelApplication {
  int step = 1;
  std::string kernel;  // registered kernel name
  KernelMode mode = KernelMode::Soft;
  std::int64_t weight = 1;
};

/// Creates states s_0..s_T and returns their ids in order.
std::vector<VarId> build_sequence(Model& model, const SequenceSpec& spec);

/// Applies each entry in order, invoking its kernel on (s_{t-1}, s_t).
/// Require-mode indicators are hardened in place; Soft-mode terms are
/// returned (kernel weights scaled by the application weight) for
/// maximize_weighted. Throws BadStep, UnknownKernel.
std::vector<ReifiedTerm> apply_kernels(
    Model& model, std::span<const VarId> states,
    std::span<const KernelApplication> applications);

}  // namespace bigm
