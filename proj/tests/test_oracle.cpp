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

#include "bigm/csp.hpp"
#include "bigm/mip.hpp"
#include "bigm/oracle.hpp"
#include "bigm/reify.hpp"
#include "test_util.hpp"

using namespace bigm;

TEST_CASE("brute_force sweeps the whole box exactly") {
  SUBCASE("require even, maximize x") {
    Model m;
    VarId x = m.add_int_var("x", 0, 10);
    require(m, reify_congruence(m, {x, 2, 0}));
    m.set_objective(Objective{ObjectiveSense::Maximize, {{x, 1}}});
    OracleReport report = brute_force(m);
    CHECK(report.feasible_count == 6);  // n is forced once b = 1
    REQUIRE(report.optimum.has_value());
    CHECK(*report.optimum == 10);
    REQUIRE(report.argmax.has_value());
    CHECK(report.argmax->at(x) == 10);
  }
  SUBCASE("worked coloring model has 6 points") {
    auto [model, codebook] = encode_csp(worked_instance());
    CHECK(brute_force(model).feasible_count == 6);
  }
  SUBCASE("empty model counts the empty assignment") {
    Model m;
    OracleReport report = brute_force(m);
    CHECK(report.feasible_count == 1);
    CHECK_FALSE(report.optimum.has_value());
  }
  SUBCASE("guard rejects oversized boxes") {
    Model m;
    m.add_int_var("a", 0, 9999);
    m.add_int_var("b", 0, 9999);
    OracleOptions options;
    options.guard = 1000000;
    CHECK_THROWS_AS((void)brute_force(m, options), Error);
  }
  SUBCASE("collect returns the assignments in visit order") {
    Model m;
    VarId x = m.add_int_var("x", 0, 5);
    require(m, reify_congruence(m, {x, 2, 1}));
    OracleOptions options;
    options.collect = true;
    std::vector<Assignment> visited;
    options.visit = [&](const Assignment& a) { visited.push_back(a); };
    OracleReport report = brute_force(m, options);
    REQUIRE(report.enumerated.has_value());
    CHECK(*report.enumerated == visited);
    CHECK(report.enumerated->size() == 3);
    // the exact-DFS enumerator must agree point for point
    CHECK(enumerate(m).assignments == *report.enumerated);
  }
  SUBCASE("argmax ties break lexicographically") {
    Model m;
    VarId x = m.add_int_var("x", 0, 3);
    (void)x;
    // objective ignores x entirely, so every point ties at 0
    VarId b = m.add_bool_var("b");
    m.set_objective(Objective{ObjectiveSense::Maximize, {{b, 0}}});
    OracleReport report = brute_force(m);
    REQUIRE(report.argmax.has_value());
    CHECK(report.argmax->values() == std::vector<std::int64_t>{0, 0});
  }
  SUBCASE("invalid models are refused") {
    Model m = Model::from_parts(
        {Variable{VarId{0}, "x", VarKind::IntBounded, 4, 2}}, {}, {});
    CHECK_THROWS_AS((void)brute_force(m), Error);
  }
}

TEST_CASE("property oracle scores sequences arithmetically") {
  SUBCASE("parity exclusivity caps soft even+odd at 1") {
    std::vector<KernelApplication> apps{
        {1, "even", KernelMode::Soft, 1},
        {1, "odd", KernelMode::Soft, 1},
    };
    CHECK(property_oracle_sequence({1, 0, 9}, apps) == 1);
  }
  SUBCASE("even and mod-3 align at 0 and 6") {
    std::vector<KernelApplication> apps{
        {1, "even", KernelMode::Soft, 1},
        {1, "congruence:3:0", KernelMode::Soft, 1},
    };
    CHECK(property_oracle_sequence({1, 0, 9}, apps) == 2);
  }
  SUBCASE("no applications score zero") {
    CHECK(property_oracle_sequence({2, 0, 4}, {}) == 0);
  }
  SUBCASE("require filters the admissible sequences") {
    std::vector<KernelApplication> apps{
        {1, "odd", KernelMode::Require, 1},
        {1, "even", KernelMode::Soft, 5},
    };
    // s_1 must be odd, so the soft even property never fires
    CHECK(property_oracle_sequence({1, 0, 9}, apps) == 0);
  }
  SUBCASE("unsatisfiable requires yield no score") {
    std::vector<KernelApplication> apps{
        {1, "congruence:5:4", KernelMode::Require, 1},
    };
    // states in [0,3] can never be 4 mod 5
    CHECK_FALSE(property_oracle_sequence({1, 0, 3}, apps).has_value());
  }
  SUBCASE("weights add across satisfied kernels") {
    std::vector<KernelApplication> apps{
        {1, "even", KernelMode::Soft, 2},
        {2, "odd", KernelMode::Soft, 3},
    };
    CHECK(property_oracle_sequence({2, 0, 5}, apps) == 5);
  }
  SUBCASE("guard and step validation") {
    std::vector<KernelApplication> apps{{1, "even", KernelMode::Soft, 1}};
    CHECK_THROWS_AS(
        (void)property_oracle_sequence({3, 0, 999}, apps, 1000000), Error);
    std::vector<KernelApplication> bad{{9, "even", KernelMode::Soft, 1}};
    CHECK_THROWS_AS((void)property_oracle_sequence({2, 0, 3}, bad), Error);
  }
}
