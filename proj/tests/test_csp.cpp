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

#include <set>
#include <vector>

#include "bigm/csp.hpp"
#include "bigm/lp_format.hpp"
#include "bigm/mip.hpp"
#include "bigm/oracle.hpp"
#include "test_util.hpp"

using namespace bigm;

namespace {

Mapping paper_solution() {
  return {{"x1", "Blue"},
          {"x2", "Red"},
          {"x3", "Green"},
          {"x4", "Green"},
          {"x5", "Blue"}};
}

// The inequality relation exactly as the source text displays it: five
// ordered pairs, (Green, Red) missing.
BinaryRelation five_pair_literal_relation() {
  // domain order Blue=0, Red=1, Green=2
  BinaryRelation relation;
  relation.add(0, 1);  // (Blue, Red)
  relation.add(0, 2);  // (Blue, Green)
  relation.add(1, 0);  // (Red, Blue)
  relation.add(1, 2);  // (Red, Green)
  relation.add(2, 0);  // (Green, Blue)
  return relation;
}

}  // namespace

TEST_CASE("neq_relation holds every ordered pair of distinct values") {
  SUBCASE("three colors give six pairs") {
    Domain domain{{"Blue", "Red", "Green"}};
    BinaryRelation neq = neq_relation(domain);
    CHECK(neq.size() == 6);
    CHECK(neq.allows(2, 0));  // (Green, Blue)
    CHECK(neq.allows(2, 1));  // (Green, Red), absent from the 5-pair listing
    CHECK_FALSE(neq.allows(1, 1));
  }
  SUBCASE("singleton domain has an empty relation") {
    CHECK(neq_relation(Domain{{"only"}}).size() == 0);
  }
  SUBCASE("two values give two pairs") {
    CHECK(neq_relation(Domain{{"a", "b"}}).size() == 2);
  }
}

TEST_CASE("check_homomorphism follows the constraint scopes") {
  CspInstance instance = worked_instance();
  SUBCASE("the published coloring is accepted") {
    CHECK(check_homomorphism(instance, paper_solution()));
  }
  SUBCASE("a monochrome mapping fails") {
    Mapping all_blue;
    for (const std::string& v : instance.variables) all_blue[v] = "Blue";
    CHECK_FALSE(check_homomorphism(instance, all_blue));
  }
  SUBCASE("no constraints accept anything") {
    CspInstance free;
    free.domain = Domain{{"Blue", "Red"}};
    free.variables = {"a", "b"};
    CHECK(check_homomorphism(free, {{"a", "Blue"}, {"b", "Blue"}}));
  }
  SUBCASE("partial or out-of-domain mappings are errors") {
    Mapping partial = paper_solution();
    partial.erase("x3");
    CHECK_THROWS_AS((void)check_homomorphism(instance, partial), Error);
    Mapping bad_label = paper_solution();
    bad_label["x3"] = "Purple";
    CHECK_THROWS_AS((void)check_homomorphism(instance, bad_label), Error);
  }
}

TEST_CASE("the literal five-pair relation breaks the published solution") {
  // The displayed relation omits (Green, Red). Under it the published
  // coloring violates the (x4, x2) scope, which is why the library's
  // neq_relation carries all six pairs.
  CspInstance instance = worked_instance();
  BinaryRelation literal = five_pair_literal_relation();
  for (CspConstraint& c : instance.constraints) c.relation = literal;
  CHECK_FALSE(check_homomorphism(instance, paper_solution()));
  // and it cuts the solution count below the true 6
  CHECK(testutil::accepted_mappings(instance).size() < 6);
}

TEST_CASE("encode_csp produces the expected one-hot structure") {
  SUBCASE("worked instance: 15 binaries, 5 one-hot rows, 21 cuts") {
    auto [model, codebook] = encode_csp(worked_instance());
    CHECK(model.num_vars() == 15);
    CHECK(model.num_constraints() == 26);
    for (const Variable& v : model.variables()) {
      CHECK(v.kind == VarKind::Binary);
    }
    CHECK(model.find_var("y_x1_Blue").has_value());
    CHECK(codebook.ids.size() == 5);
    CHECK(model.objective().sense == ObjectiveSense::Feasibility);
  }
  SUBCASE("one free variable over three values") {
    CspInstance instance;
    instance.domain = Domain{{"Blue", "Red", "Green"}};
    instance.variables = {"v"};
    auto [model, codebook] = encode_csp(instance);
    CHECK(model.num_vars() == 3);
    CHECK(model.num_constraints() == 1);
    CHECK(enumerate(model).count == 3);
  }
  SUBCASE("triangle with three colors has six proper colorings") {
    CspInstance triangle;
    triangle.domain = Domain{{"Blue", "Red", "Green"}};
    triangle.variables = {"a", "b", "c"};
    BinaryRelation neq = neq_relation(triangle.domain);
    triangle.constraints = {{0, 1, neq}, {1, 2, neq}, {0, 2, neq}};
    auto [model, codebook] = encode_csp(triangle);
    CHECK(enumerate(model).count == 6);
    CHECK(testutil::accepted_mappings(triangle).size() == 6);
  }
  SUBCASE("identical instances encode identically") {
    auto [a, ca] = encode_csp(worked_instance());
    auto [b, cb] = encode_csp(worked_instance());
    CHECK(write_lp(a) == write_lp(b));
  }
}

TEST_CASE("decode reads one-hot blocks back") {
  CspInstance instance;
  instance.domain = Domain{{"Blue", "Red"}};
  instance.variables = {"x1"};
  auto [model, codebook] = encode_csp(instance);

  CHECK(decode(codebook, Assignment({1, 0})) == Mapping{{"x1", "Blue"}});
  CHECK_THROWS_AS((void)decode(codebook, Assignment({1, 1})), Error);
  CHECK_THROWS_AS((void)decode(codebook, Assignment({0, 0})), Error);
  CHECK_THROWS_AS((void)decode(codebook, Assignment({1})), Error);
}

TEST_CASE("worked instance fixture") {
  CspInstance instance = worked_instance();
  CHECK(instance.constraints.size() == 7);
  CHECK(instance.variables.size() == 5);
  CHECK(instance.domain.size() == 3);
  SUBCASE("exactly six proper colorings, both routes agree") {
    std::set<Mapping> expected = testutil::accepted_mappings(instance);
    CHECK(expected.size() == 6);
    CHECK(testutil::decoded_solutions(instance) == expected);
    CHECK(expected.contains(paper_solution()));
  }
  SUBCASE("solve + decode round-trips through the homomorphism check") {
    auto [model, codebook] = encode_csp(instance);
    MipResult result = solve_mip(model);
    REQUIRE(result.status == MipStatus::Optimal);
    Mapping decoded = decode(codebook, *result.best);
    CHECK(check_homomorphism(instance, decoded));
  }
}

TEST_CASE("worked-instance symmetry: solutions are the distinct pairs") {
  CspInstance instance = worked_instance();
  std::set<Mapping> solutions = testutil::accepted_mappings(instance);
  REQUIRE(solutions.size() == 6);

  std::set<std::pair<std::string, std::string>> leading_pairs;
  for (const Mapping& mapping : solutions) {
    // the three triangles are rainbow triples
    auto rainbow = [&](const char* a, const char* b, const char* c) {
      std::set<std::string> colors{mapping.at(a), mapping.at(b),
                                   mapping.at(c)};
      return colors.size() == 3;
    };
    CHECK(rainbow("x1", "x2", "x4"));
    CHECK(rainbow("x2", "x3", "x5"));
    CHECK(rainbow("x2", "x4", "x5"));
    // mirrored structure: the left triangle flips the right one
    CHECK(mapping.at("x1") == mapping.at("x5"));
    CHECK(mapping.at("x3") == mapping.at("x4"));
    leading_pairs.insert({mapping.at("x1"), mapping.at("x2")});
  }
  // (x1, x2) determines the rest: six solutions, six distinct pairs
  CHECK(leading_pairs.size() == 6);
}

TEST_CASE("encoding equivalence on random instances") {
  for (std::uint32_t seed = 0; seed < 12; ++seed) {
    CspInstance instance = testutil::random_csp(6100 + seed, 5, 4, 7);
    CAPTURE(seed);
    CHECK(testutil::decoded_solutions(instance) ==
          testutil::accepted_mappings(instance));
  }
}

TEST_CASE("one-hot invariant over every feasible encoded assignment") {
  auto [model, codebook] = encode_csp(worked_instance());
  for (const Assignment& a : enumerate(model).assignments) {
    for (const auto& block : codebook.ids) {
      int hot = 0;
      for (VarId id : block) hot += static_cast<int>(a.at(id));
      CHECK(hot == 1);
    }
  }
}
