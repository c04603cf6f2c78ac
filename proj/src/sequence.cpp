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

#include "bigm/sequence.hpp"

#include <charconv>

namespace bigm {
namespace {

TransitionKernel make_congruence_kernel(std::string name, std::int64_t k,
                                        std::int64_t r) {
  return TransitionKernel(
      std::move(name),
      [k, r](Model& model, VarId /*last_state*/, VarId next_state) {
        ReifiedTerm term =
            reify_congruence(model, CongruenceSpec{next_state, k, r});
        return std::vector<ReifiedTerm>{term};
      });
}

bool parse_int(std::string_view text, std::int64_t& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

TransitionKernel kernel_even() { return make_congruence_kernel("even", 2, 0); }

TransitionKernel kernel_odd() { return make_congruence_kernel("odd", 2, 1); }

TransitionKernel kernel_congruence(std::int64_t k, std::int64_t r) {
  if (k < 1 || r < 0 || r >= k) {
    raise(ErrorCode::InvalidSpec,
          "congruence kernel needs k >= 1 and 0 <= r < k, got k=" +
              std::to_string(k) + " r=" + std::to_string(r));
  }
  std::string name =
      "congruence:" + std::to_string(k) + ":" + std::to_string(r);
  return make_congruence_kernel(std::move(name), k, r);
}

std::pair<std::int64_t, std::int64_t> kernel_congruence_params(
    std::string_view name) {
  if (name == "even") return {2, 0};
  if (name == "odd") return {2, 1};
  constexpr std::string_view kPrefix = "congruence:";
  if (name.starts_with(kPrefix)) {
    std::string_view rest = name.substr(kPrefix.size());
    std::size_t colon = rest.find(':');
    std::int64_t k = 0;
    std::int64_t r = 0;
    if (colon != std::string_view::npos &&
        parse_int(rest.substr(0, colon), k) &&
        parse_int(rest.substr(colon + 1), r) && k >= 1 && r >= 0 && r < k) {
      return {k, r};
    }
  }
  raise(ErrorCode::UnknownKernel,
        "unknown kernel '" + std::string(name) +
            "' (expected even, odd or congruence:k:r)");
}

TransitionKernel kernel_from_name(std::string_view name) {
  auto [k, r] = kernel_congruence_params(name);
  if (name == "even") return kernel_even();
  if (name == "odd") return kernel_odd();
  return kernel_congruence(k, r);
}

std::vector<VarId> build_sequence(Model& model, const SequenceSpec& spec) {
  if (spec.length < 1) {
    raise(ErrorCode::InvalidSpec, "sequence length must be >= 1");
  }
  if (spec.state_lo < 0 || spec.state_lo > spec.state_hi) {
    raise(ErrorCode::InvalidSpec,
          "sequence bounds need 0 <= lo <= hi, got [" +
              std::to_string(spec.state_lo) + ", " +
              std::to_string(spec.state_hi) + "]");
  }
  std::vector<VarId> states;
  states.reserve(static_cast<std::size_t>(spec.length) + 1);
  for (int t = 0; t <= spec.length; ++t) {
    states.push_back(model.add_int_var("s_" + std::to_string(t),
                                       spec.state_lo, spec.state_hi));
  }
  return states;
}

std::vector<ReifiedTerm> apply_kernels(
    Model& model, std::span<const VarId> states,
    std::span<const KernelApplication> applications) {
  std::vector<ReifiedTerm> soft;
  for (const KernelApplication& app : applications) {
    if (app.step < 1 || app.step >= static_cast<int>(states.size())) {
      raise(ErrorCode::BadStep,
            "kernel step " + std::to_string(app.step) + " outside [1, " +
                std::to_string(states.size() - 1) + "]");
    }
    TransitionKernel kernel = kernel_from_name(app.kernel);
    std::vector<ReifiedTerm> terms =
        kernel.apply(model, states[app.step - 1], states[app.step]);
    for (ReifiedTerm& term : terms) {
      term.weight *= app.weight;
      if (app.mode == KernelMode::Require) {
        require(model, term);
      } else {
        soft.push_back(term);
      }
    }
  }
  return soft;
}

}  // namespace bigm
