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

// Exercises the shared-library surface exactly the way an embedder (or
// the CLI) would: through bigm/bigm.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "bigm/bigm.h"

namespace {

const char* kEvenModel =
    "var x int 0 10\n"
    "reify even x require\n"
    "objective maximize x\n";

const char* kColoringModel =
    "csp {\n"
    "  domain Blue Red Green\n"
    "  vars x1 x2 x3 x4 x5\n"
    "  neq x1 x2\n"
    "  neq x2 x3\n"
    "  neq x1 x4\n"
    "  neq x4 x5\n"
    "  neq x5 x3\n"
    "  neq x4 x2\n"
    "  neq x5 x2\n"
    "}\n";

struct CountCtx {
  long long seen = 0;
  long long stop_after = -1;
};

int counting_cb(void* ctx_void, size_t, const long long*) {
  auto* ctx = static_cast<CountCtx*>(ctx_void);
  ++ctx->seen;
  return ctx->stop_after >= 0 && ctx->seen >= ctx->stop_after ? 1 : 0;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(bigm_version()) > 0);
  CHECK(std::string(bigm_status_name(BIGM_OK)) == "ok");
  CHECK(std::string(bigm_status_name(BIGM_ERR_PARSE)) == "parse-error");
}

TEST_CASE("load, introspect and solve through the C surface") {
  bigm_model* model = nullptr;
  char err[256] = {0};
  REQUIRE(bigm_model_from_string(kEvenModel, &model, err, sizeof err) ==
          BIGM_OK);
  CHECK(bigm_model_num_vars(model) == 3);
  CHECK(bigm_model_num_constraints(model) == 3);
  CHECK(std::string(bigm_model_var_name(model, 0)) == "x");
  CHECK(bigm_model_var_is_binary(model, 2) == 1);
  CHECK(bigm_model_var_lo(model, 1) == 0);
  CHECK(bigm_model_var_hi(model, 1) == 5);
  CHECK(bigm_model_objective_sense(model) == 1);
  CHECK(bigm_model_var_name(model, 99) == nullptr);

  bigm_solution* solution = nullptr;
  REQUIRE(bigm_solve(model, 0, &solution, err, sizeof err) == BIGM_OK);
  CHECK(bigm_solution_optimal(solution) == 1);
  CHECK(bigm_solution_objective(solution) == 10);
  CHECK(bigm_solution_bound(solution) == 10);
  CHECK(bigm_solution_nodes(solution) >= 1);
  CHECK(bigm_solution_value(solution, 0) == 10);
  bigm_solution_free(solution);
  bigm_model_free(model);
}

TEST_CASE("lp export is stable across calls") {
  bigm_model* model = nullptr;
  char err[256];
  REQUIRE(bigm_model_from_string(kEvenModel, &model, err, sizeof err) ==
          BIGM_OK);
  char* first = nullptr;
  char* second = nullptr;
  REQUIRE(bigm_model_write_lp(model, &first, err, sizeof err) == BIGM_OK);
  REQUIRE(bigm_model_write_lp(model, &second, err, sizeof err) == BIGM_OK);
  CHECK(std::string(first) == std::string(second));
  CHECK(std::string(first).find("x - 2 n_even + 10 b_even <= 10") !=
        std::string::npos);
  bigm_text_free(first);
  bigm_text_free(second);
  bigm_model_free(model);
}

TEST_CASE("enumerate and oracle stream solutions") {
  bigm_model* model = nullptr;
  char err[256];
  REQUIRE(bigm_model_from_string(kColoringModel, &model, err, sizeof err) ==
          BIGM_OK);
  CHECK(bigm_model_num_csp_vars(model) == 5);
  CHECK(std::string(bigm_model_csp_var_name(model, 0)) == "x1");
  CHECK(bigm_model_var_in_csp(model, 0) == 1);

  CountCtx count;
  long long total = 0;
  REQUIRE(bigm_enumerate(model, -1, 0, &counting_cb, &count, &total, err,
                         sizeof err) == BIGM_OK);
  CHECK(total == 6);
  CHECK(count.seen == 6);

  CountCtx limited{0, 2};
  long long capped = 0;
  REQUIRE(bigm_enumerate(model, -1, 0, &counting_cb, &limited, &capped, err,
                         sizeof err) == BIGM_OK);
  CHECK(limited.seen == 2);  // callback stopped the search

  bigm_oracle_stats stats{0, 0, 0};
  REQUIRE(bigm_oracle(model, 0, nullptr, nullptr, &stats, err, sizeof err) ==
          BIGM_OK);
  CHECK(stats.feasible_count == 6);
  CHECK(stats.has_optimum == 0);  // feasibility objective
  bigm_model_free(model);
}

TEST_CASE("csp decode through the C surface") {
  bigm_model* model = nullptr;
  char err[256];
  REQUIRE(bigm_model_from_string(kColoringModel, &model, err, sizeof err) ==
          BIGM_OK);
  bigm_solution* solution = nullptr;
  REQUIRE(bigm_solve(model, 0, &solution, err, sizeof err) == BIGM_OK);
  REQUIRE(bigm_solution_optimal(solution) == 1);

  std::vector<long long> values(bigm_model_num_vars(model));
  for (size_t i = 0; i < values.size(); ++i) {
    values[i] = bigm_solution_value(solution, i);
  }
  for (size_t i = 0; i < bigm_model_num_csp_vars(model); ++i) {
    const char* label = nullptr;
    REQUIRE(bigm_model_decode_csp(model, values.data(), values.size(), i,
                                  &label, err, sizeof err) == BIGM_OK);
    std::string color(label);
    CHECK((color == "Blue" || color == "Red" || color == "Green"));
  }
  bigm_solution_free(solution);
  bigm_model_free(model);
}

TEST_CASE("assignment checking through the C surface") {
  bigm_model* model = nullptr;
  char err[256];
  REQUIRE(bigm_model_from_string(kColoringModel, &model, err, sizeof err) ==
          BIGM_OK);

  bigm_check_report* good = nullptr;
  REQUIRE(bigm_check_string(model,
                            "x1 = Blue\nx2 = Red\nx3 = Green\n"
                            "x4 = Green\nx5 = Blue\n",
                            &good, err, sizeof err) == BIGM_OK);
  CHECK(bigm_check_feasible(good) == 1);
  CHECK(bigm_check_num_violations(good) == 0);
  bigm_check_free(good);

  bigm_check_report* bad = nullptr;
  REQUIRE(bigm_check_string(model,
                            "x1 = Blue\nx2 = Blue\nx3 = Blue\n"
                            "x4 = Blue\nx5 = Blue\n",
                            &bad, err, sizeof err) == BIGM_OK);
  CHECK(bigm_check_feasible(bad) == 0);
  CHECK(bigm_check_num_violations(bad) == 7);
  CHECK(bigm_check_violation(bad, 0) != nullptr);
  CHECK(bigm_check_violation(bad, 99) == nullptr);
  bigm_check_free(bad);
  bigm_model_free(model);
}

TEST_CASE("error paths fill the message buffer") {
  bigm_model* model = nullptr;
  char err[256] = {0};
  CHECK(bigm_model_from_file("/nonexistent/x.model", &model, err,
                             sizeof err) == BIGM_ERR_IO);
  CHECK(std::strlen(err) > 0);

  err[0] = '\0';
  CHECK(bigm_model_from_string("frobnicate\n", &model, err, sizeof err) ==
        BIGM_ERR_PARSE);
  CHECK(std::string(err).find("unknown statement") != std::string::npos);

  CHECK(bigm_model_from_string(nullptr, &model, err, sizeof err) ==
        BIGM_ERR_ARGUMENT);
  CHECK(bigm_model_from_string("var x int 0 1\n", nullptr, err, sizeof err) ==
        BIGM_ERR_ARGUMENT);

  // oversized box without a limit
  REQUIRE(bigm_model_from_string(
              "var a int 0 9999\nvar b int 0 9999\nvar c int 0 9999\n",
              &model, err, sizeof err) == BIGM_OK);
  long long count = 0;
  CHECK(bigm_enumerate(model, -1, 0, nullptr, nullptr, &count, err,
                       sizeof err) == BIGM_ERR_TOO_LARGE);
  bigm_model_free(model);
}

TEST_CASE("check file round-trip through a temp path") {
  bigm_model* model = nullptr;
  char err[256];
  REQUIRE(bigm_model_from_string("var x int 0 10\n", &model, err,
                                 sizeof err) == BIGM_OK);
  std::string path = "capi_check_tmp.assign";
  {
    std::ofstream out(path);
    out << "x = 7\n";
  }
  bigm_check_report* report = nullptr;
  REQUIRE(bigm_check_file(model, path.c_str(), &report, err, sizeof err) ==
          BIGM_OK);
  CHECK(bigm_check_feasible(report) == 1);
  bigm_check_free(report);
  CHECK(bigm_check_file(model, "/nonexistent/y.assign", &report, err,
                        sizeof err) == BIGM_ERR_IO);
  std::remove(path.c_str());
  bigm_model_free(model);
}
