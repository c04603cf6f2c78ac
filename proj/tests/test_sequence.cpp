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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "bigm/lp_format.hpp"
#include "bigm/oracle.hpp"
#include "bigm/sequence.hpp"
#include "test_util.hpp"

using namespace bigm;
using testutil::feasible_values;

TEST_CASE("build_sequence creates s_0..s_T with shared bounds") {
  SUBCASE("T = 3 gives four states") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {3, 0, 9});
    REQUIRE(states.size() == 4);
    CHECK(m.var(states[0]).name == "s_0");
    CHECK(m.var(states[3]).name == "s_3");
    for (VarId s : states) {
      CHECK(m.var(s).lo == 0);
      CHECK(m.var(s).hi == 9);
    }
  }
  SUBCASE("T = 1 with a point box") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {1, 0, 0});
    CHECK(states.size() == 2);
    CHECK(brute_force(m).feasible_count == 1);
  }
  SUBCASE("unconstrained count is the full box") {
    Model m;
    build_sequence(m, {2, 0, 4});
    CHECK(brute_force(m).feasible_count == 125);  // 5^3
  }
  SUBCASE("invalid specs") {
    Model m;
    CHECK_THROWS_AS(build_sequence(m, {0, 0, 4}), Error);
    CHECK_THROWS_AS(build_sequence(m, {1, 3, 2}), Error);
    CHECK_THROWS_AS(build_sequence(m, {1, -1, 2}), Error);
  }
}

TEST_CASE("built-in kernels reproduce the reference structure") {
  SUBCASE("even kernel at step 1") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {1, 0, 10});
    std::vector<ReifiedTerm> terms =
        kernel_even().apply(m, states[0], states[1]);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].weight == 1);
    CHECK(m.find_var("n_even").has_value());
    CHECK(m.var(*m.find_var("n_even")).hi == 5);
    CHECK(m.find_var("b_even").has_value());
    CHECK(m.num_constraints() == 2);
  }
  SUBCASE("congruence(2,0) emits rows identical to the even kernel") {
    Model a;
    std::vector<VarId> sa = build_sequence(a, {1, 0, 10});
    kernel_even().apply(a, sa[0], sa[1]);
    Model b;
    std::vector<VarId> sb = build_sequence(b, {1, 0, 10});
    kernel_congruence(2, 0).apply(b, sb[0], sb[1]);
    CHECK(write_lp(a) == write_lp(b));
  }
  SUBCASE("odd kernel hardened restricts s_1 to odd values") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {1, 0, 10});
    std::vector<ReifiedTerm> terms =
        kernel_odd().apply(m, states[0], states[1]);
    require(m, terms[0]);
    CHECK(feasible_values(m, states[1]) ==
          std::set<std::int64_t>{1, 3, 5, 7, 9});
  }
  SUBCASE("even kernel on a zero box stays feasible") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {1, 0, 0});
    require(m, kernel_even().apply(m, states[0], states[1])[0]);
    CHECK(brute_force(m).feasible_count > 0);
  }
  SUBCASE("congruence(3,0) at step 1") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {1, 0, 9});
    require(m, kernel_congruence(3, 0).apply(m, states[0], states[1])[0]);
    CHECK(feasible_values(m, states[1]) == std::set<std::int64_t>{0, 3, 6, 9});
  }
  SUBCASE("congruence(1,0) is a tautology") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {1, 0, 4});
    require(m, kernel_congruence(1, 0).apply(m, states[0], states[1])[0]);
    CHECK(feasible_values(m, states[1]) ==
          std::set<std::int64_t>{0, 1, 2, 3, 4});
  }
  SUBCASE("bad congruence parameters") {
    CHECK_THROWS_AS(kernel_congruence(0, 0), Error);
    CHECK_THROWS_AS(kernel_congruence(3, 3), Error);
  }
}

TEST_CASE("kernel_from_name resolves the registered names") {
  CHECK(kernel_from_name("even").name() == "even");
  CHECK(kernel_from_name("odd").name() == "odd");
  CHECK(kernel_from_name("congruence:5:2").name() == "congruence:5:2");
  CHECK(kernel_congruence_params("even") == std::pair<std::int64_t,
                                                      std::int64_t>{2, 0});
  CHECK(kernel_congruence_params("odd") == std::pair<std::int64_t,
                                                     std::int64_t>{2, 1});
  CHECK(kernel_congruence_params("congruence:7:3") ==
        std::pair<std::int64_t, std::int64_t>{7, 3});
  CHECK_THROWS_AS(kernel_from_name("prime"), Error);
  CHECK_THROWS_AS(kernel_from_name("congruence:2"), Error);
  CHECK_THROWS_AS(kernel_from_name("congruence:2:5"), Error);
}

TEST_CASE("apply_kernels runs applications in order") {
  SUBCASE("alternating parity has the obvious witness") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {3, 0, 9});
    std::vector<KernelApplication> apps{
        {1, "odd", KernelMode::Require, 1},
        {2, "even", KernelMode::Require, 1},
        {3, "odd", KernelMode::Require, 1},
    };
    std::vector<ReifiedTerm> soft = apply_kernels(m, states, apps);
    CHECK(soft.empty());
    Assignment witness = [&] {
      // s = (0, 1, 0, 1); auxiliaries chosen to match
      std::vector<std::int64_t> values(m.num_vars(), 0);
      values[states[1].index] = 1;
      values[states[3].index] = 1;
      // indicators are forced to 1 by require rows
      values[m.find_var("b_odd")->index] = 1;
      values[m.find_var("b_even")->index] = 1;
      values[m.find_var("b_odd_2")->index] = 1;
      return Assignment(values);
    }();
    bool feasible = true;
    for (const LinearConstraint& row : m.constraints()) {
      if (!eval_constraint(row, witness)) feasible = false;
    }
    CHECK(feasible);
    CHECK(brute_force(m).feasible_count > 0);
  }
  SUBCASE("two required even kernels leave 45 raw sequences") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {2, 0, 4});
    std::vector<KernelApplication> apps{
        {1, "even", KernelMode::Require, 1},
        {2, "even", KernelMode::Require, 1},
    };
    apply_kernels(m, states, apps);
    // project onto the raw states: s_0 free (5), s_1 and s_2 in {0,2,4}
    auto projection = testutil::feasible_projection(m, states);
    CHECK(projection.size() == 45);
  }
  SUBCASE("soft terms are returned, scaled by the application weight") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {1, 0, 9});
    std::vector<KernelApplication> apps{
        {1, "even", KernelMode::Soft, 3},
        {1, "odd", KernelMode::Soft, 1},
    };
    std::vector<ReifiedTerm> soft = apply_kernels(m, states, apps);
    REQUIRE(soft.size() == 2);
    CHECK(soft[0].weight == 3);
    CHECK(soft[1].weight == 1);
  }
  SUBCASE("bad step and unknown kernel") {
    Model m;
    std::vector<VarId> states = build_sequence(m, {2, 0, 4});
    std::vector<KernelApplication> bad_step{{5, "even", KernelMode::Soft, 1}};
    CHECK_THROWS_AS(apply_kernels(m, states, bad_step), Error);
    std::vector<KernelApplication> bad_kernel{
        {1, "primes", KernelMode::Soft, 1}};
    CHECK_THROWS_AS(apply_kernels(m, states, bad_kernel), Error);
  }
}

TEST_CASE("kernel purity: applying a kernel only appends") {
  Model m;
  std::vector<VarId> states = build_sequence(m, {2, 0, 6});
  std::vector<KernelApplication> first{{1, "odd", KernelMode::Require, 1}};
  apply_kernels(m, states, first);

  std::vector<LinearConstraint> before = m.constraints();
  std::vector<Variable> vars_before = m.variables();

  std::vector<KernelApplication> second{
      {2, "congruence:3:1", KernelMode::Soft, 2}};
  apply_kernels(m, states, second);

  REQUIRE(m.num_constraints() >= before.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(m.constraints()[i].terms == before[i].terms);
    CHECK(m.constraints()[i].rhs == before[i].rhs);
    CHECK(m.constraints()[i].label == before[i].label);
  }
  for (std::size_t i = 0; i < vars_before.size(); ++i) {
    CHECK(m.variables()[i].name == vars_before[i].name);
    CHECK(m.variables()[i].lo == vars_before[i].lo);
    CHECK(m.variables()[i].hi == vars_before[i].hi);
  }
}

TEST_CASE("require-mode order does not change the feasible set") {
  std::vector<KernelApplication> apps{
      {1, "odd", KernelMode::Require, 1},
      {2, "even", KernelMode::Require, 1},
      {2, "congruence:3:1", KernelMode::Require, 1},
  };
  std::sort(apps.begin(), apps.end(),
            [](const KernelApplication& a, const KernelApplication& b) {
              return a.kernel < b.kernel;
            });
  std::set<std::vector<std::int64_t>> reference;
  bool have_reference = false;
  do {
    Model m;
    std::vector<VarId> states = build_sequence(m, {2, 0, 6});
    apply_kernels(m, states, apps);
    auto projection = testutil::feasible_projection(m, states);
    if (!have_reference) {
      reference = projection;
      have_reference = true;
    } else {
      CHECK(projection == reference);
    }
  } while (std::next_permutation(
      apps.begin(), apps.end(),
      [](const KernelApplication& a, const KernelApplication& b) {
        return a.kernel < b.kernel;
      }));
  CHECK(!reference.empty());
}

TEST_CASE("soft-mode optimum equals the arithmetic property oracle") {
  // Boxes stay small here because the check runs the exhaustive oracle
  // over states and auxiliaries; the acceptance suite covers the full
  // spec sizes through the branch-and-bound path.
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    auto gen = testutil::rng(4200 + seed);
    SequenceSpec spec{static_cast<int>(testutil::pick(gen, 1, 2)),
                      0, testutil::pick(gen, 0, 6)};
    std::vector<KernelApplication> apps;
    const int num_apps = static_cast<int>(testutil::pick(gen, 1, 3));
    for (int i = 0; i < num_apps; ++i) {
      std::int64_t k = testutil::pick(gen, 1, 4);
      std::int64_t r = testutil::pick(gen, 0, k - 1);
      apps.push_back({static_cast<int>(testutil::pick(gen, 1, spec.length)),
                      "congruence:" + std::to_string(k) + ":" +
                          std::to_string(r),
                      KernelMode::Soft, testutil::pick(gen, 1, 3)});
    }
    Model m;
    std::vector<VarId> states = build_sequence(m, spec);
    std::vector<ReifiedTerm> soft = apply_kernels(m, states, apps);
    maximize_weighted(m, soft);
    OracleReport milp_level = brute_force(m);
    std::optional<std::int64_t> property =
        property_oracle_sequence(spec, apps);
    CAPTURE(seed); CAPTURE(spec.length); CAPTURE(spec.state_hi);
    REQUIRE(property.has_value());
    REQUIRE(milp_level.optimum.has_value());
    CHECK(*milp_level.optimum == *property);
  }
}
