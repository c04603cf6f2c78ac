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

// Command-line front end. Talks to the core exclusively through the C API
// in bigm/bigm.h, the same way an external embedder would.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigm/bigm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

using json = nlohmann::json;

struct ModelDeleter {
  void operator()(bigm_model* m) const { bigm_model_free(m); }
};
using ModelPtr = std::unique_ptr<bigm_model, ModelDeleter>;

ModelPtr load_model(const std::string& path, int& exit_code) {
  char err[512];
  bigm_model* raw = nullptr;
  bigm_status status = bigm_model_from_file(path.c_str(), &raw, err,
                                            sizeof err);
  if (status != BIGM_OK) {
    std::cerr << "error: " << err << "\n";
    exit_code = kExitError;
    return nullptr;
  }
  exit_code = kExitOk;
  return ModelPtr(raw);
}

// One printable item per user-visible column: either a model variable or
// a decoded csp variable.
struct Column {
  std::string name;
  bool is_csp = false;
  size_t index = 0;  // model var index or csp var index
};

std::vector<Column> solution_columns(const bigm_model* model,
                                     bool hide_csp_binaries) {
  std::vector<Column> columns;
  for (size_t i = 0; i < bigm_model_num_vars(model); ++i) {
    if (hide_csp_binaries && bigm_model_var_in_csp(model, i)) continue;
    columns.push_back({bigm_model_var_name(model, i), false, i});
  }
  for (size_t i = 0; i < bigm_model_num_csp_vars(model); ++i) {
    columns.push_back({bigm_model_csp_var_name(model, i), true, i});
  }
  std::sort(columns.begin(), columns.end(),
            [](const Column& a, const Column& b) { return a.name < b.name; });
  return columns;
}

std::string decoded_label(const bigm_model* model,
                          const std::vector<long long>& values, size_t i) {
  const char* label = nullptr;
  char err[256];
  if (bigm_model_decode_csp(model, values.data(), values.size(), i, &label,
                            err, sizeof err) != BIGM_OK) {
    return "?";
  }
  return label;
}

json assignment_json(const bigm_model* model,
                     const std::vector<long long>& values) {
  json object = json::object();
  for (size_t i = 0; i < values.size(); ++i) {
    object[bigm_model_var_name(model, i)] = values[i];
  }
  return object;
}

json csp_assignment_json(const bigm_model* model,
                         const std::vector<long long>& values) {
  json object = json::object();
  for (size_t i = 0; i < bigm_model_num_csp_vars(model); ++i) {
    object[bigm_model_csp_var_name(model, i)] = decoded_label(model, values, i);
  }
  return object;
}

int run_solve(const std::string& path, bool as_json, bool verbose) {
  int exit_code = kExitOk;
  ModelPtr model = load_model(path, exit_code);
  if (!model) return exit_code;

  char err[512];
  bigm_solution* solution = nullptr;
  bigm_status status =
      bigm_solve(model.get(), verbose ? 1 : 0, &solution, err, sizeof err);
  if (status != BIGM_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  std::unique_ptr<bigm_solution, decltype(&bigm_solution_free)> guard(
      solution, &bigm_solution_free);

  const bool optimal = bigm_solution_optimal(solution) != 0;
  const int sense = bigm_model_objective_sense(model.get());
  const long long nodes = bigm_solution_nodes(solution);

  if (!optimal) {
    if (as_json) {
      std::cout << json{{"status", "INFEASIBLE"}, {"nodes", nodes}}.dump(2)
                << "\n";
    } else {
      std::cout << "status=INFEASIBLE\n"
                << "nodes=" << nodes << "\n";
    }
    return kExitInfeasible;
  }

  std::vector<long long> values(bigm_model_num_vars(model.get()));
  for (size_t i = 0; i < values.size(); ++i) {
    values[i] = bigm_solution_value(solution, i);
  }

  if (as_json) {
    json report{{"status", "OPTIMAL"}, {"nodes", nodes}};
    if (sense != 0) {
      report["objective"] = bigm_solution_objective(solution);
      report["bound"] = bigm_solution_bound(solution);
    }
    report["assignment"] = assignment_json(model.get(), values);
    if (bigm_model_num_csp_vars(model.get()) > 0) {
      report["csp_assignment"] = csp_assignment_json(model.get(), values);
    }
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "status=OPTIMAL\n";
    if (sense != 0) {
      std::cout << "objective=" << bigm_solution_objective(solution) << "\n"
                << "bound=" << bigm_solution_bound(solution) << "\n";
    }
    std::cout << "nodes=" << nodes << "\n";
    for (const Column& column :
         solution_columns(model.get(), /*hide_csp_binaries=*/false)) {
      std::cout << column.name << " = ";
      if (column.is_csp) {
        std::cout << decoded_label(model.get(), values, column.index);
      } else {
        std::cout << values[column.index];
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

struct StreamContext {
  const bigm_model* model = nullptr;
  std::vector<Column> columns;
  bool as_json = false;
  json solutions = json::array();
};

int stream_solution(void* ctx_void, size_t num_vars, const long long* data) {
  auto* ctx = static_cast<StreamContext*>(ctx_void);
  std::vector<long long> values(data, data + num_vars);
  if (ctx->as_json) {
    json entry{{"assignment", assignment_json(ctx->model, values)}};
    if (bigm_model_num_csp_vars(ctx->model) > 0) {
      entry["csp_assignment"] = csp_assignment_json(ctx->model, values);
    }
    ctx->solutions.push_back(std::move(entry));
    return 0;
  }
  bool first = true;
  for (const Column& column : ctx->columns) {
    if (!first) std::cout << " ";
    first = false;
    std::cout << column.name << "=";
    if (column.is_csp) {
      std::cout << decoded_label(ctx->model, values, column.index);
    } else {
      std::cout << values[column.index];
    }
  }
  std::cout << "\n";
  return 0;
}

int run_enumerate(const std::string& path, long long limit, long long guard,
                  bool as_json) {
  int exit_code = kExitOk;
  ModelPtr model = load_model(path, exit_code);
  if (!model) return exit_code;

  StreamContext ctx;
  ctx.model = model.get();
  ctx.columns = solution_columns(model.get(), /*hide_csp_binaries=*/true);
  ctx.as_json = as_json;

  char err[512];
  long long count = 0;
  bigm_status status = bigm_enumerate(model.get(), limit, guard,
                                      &stream_solution, &ctx, &count, err,
                                      sizeof err);
  if (status != BIGM_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  if (as_json) {
    std::cout << json{{"count", count}, {"solutions", std::move(ctx.solutions)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "count=" << count << "\n";
  }
  return count == 0 ? kExitInfeasible : kExitOk;
}

int run_oracle(const std::string& path, long long guard, bool as_json) {
  int exit_code = kExitOk;
  ModelPtr model = load_model(path, exit_code);
  if (!model) return exit_code;

  StreamContext ctx;
  ctx.model = model.get();
  ctx.columns = solution_columns(model.get(), /*hide_csp_binaries=*/true);
  ctx.as_json = as_json;

  char err[512];
  bigm_oracle_stats stats{0, 0, 0};
  bigm_status status = bigm_oracle(model.get(), guard, &stream_solution, &ctx,
                                   &stats, err, sizeof err);
  if (status != BIGM_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  if (as_json) {
    json report{{"count", stats.feasible_count},
                {"solutions", std::move(ctx.solutions)}};
    if (stats.has_optimum) report["optimum"] = stats.optimum;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "count=" << stats.feasible_count << "\n";
    if (stats.has_optimum) std::cout << "optimum=" << stats.optimum << "\n";
  }
  return stats.feasible_count == 0 ? kExitInfeasible : kExitOk;
}

int run_check(const std::string& path, const std::string& assignment,
              bool as_json) {
  int exit_code = kExitOk;
  ModelPtr model = load_model(path, exit_code);
  if (!model) return exit_code;

  char err[512];
  bigm_check_report* report = nullptr;
  bigm_status status = bigm_check_file(model.get(), assignment.c_str(),
                                       &report, err, sizeof err);
  if (status != BIGM_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  std::unique_ptr<bigm_check_report, decltype(&bigm_check_free)> guard(
      report, &bigm_check_free);

  const bool feasible = bigm_check_feasible(report) != 0;
  if (as_json) {
    json violations = json::array();
    for (size_t i = 0; i < bigm_check_num_violations(report); ++i) {
      violations.push_back(bigm_check_violation(report, i));
    }
    std::cout << json{{"feasible", feasible},
                      {"violations", std::move(violations)}}
                     .dump(2)
              << "\n";
  } else {
    for (size_t i = 0; i < bigm_check_num_violations(report); ++i) {
      std::cout << "violation: " << bigm_check_violation(report, i) << "\n";
    }
    std::cout << (feasible ? "feasible" : "infeasible") << "\n";
  }
  return feasible ? kExitOk : kExitError;
}

int run_encode(const std::string& path, const std::string& out_path) {
  int exit_code = kExitOk;
  ModelPtr model = load_model(path, exit_code);
  if (!model) return exit_code;

  char err[512];
  char* text = nullptr;
  bigm_status status =
      bigm_model_write_lp(model.get(), &text, err, sizeof err);
  if (status != BIGM_OK) {
    std::cerr << "error: " << err << "\n";
    return kExitError;
  }
  std::unique_ptr<char, decltype(&bigm_text_free)> guard(text,
                                                         &bigm_text_free);
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitError;
  }
  out << text;
  if (!out.flush()) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bigm - reified constraints compiled to MILP, solved exactly"};
  app.require_subcommand(1);

  std::string model_path;
  std::string assignment_path;
  std::string out_path;
  bool as_json = false;
  bool verbose = false;
  long long limit = -1;
  long long guard = 0;  // 0 selects the library default

  CLI::App* solve = app.add_subcommand("solve", "Solve with branch-and-bound");
  solve->add_option("file", model_path, "model file")->required();
  solve->add_flag("--json", as_json, "machine-readable output");
  solve->add_flag("--verbose", verbose, "stream search progress to stderr");

  CLI::App* check =
      app.add_subcommand("check", "Check an assignment against a model");
  check->add_option("file", model_path, "model file")->required();
  check->add_option("assignment", assignment_path, "assignment file")
      ->required();
  check->add_flag("--json", as_json, "machine-readable output");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List all feasible assignments");
  enumerate->add_option("file", model_path, "model file")->required();
  enumerate->add_option("--limit", limit, "stop after N solutions");
  enumerate->add_option("--guard", guard, "box-size guard (points)");
  enumerate->add_flag("--json", as_json, "machine-readable output");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Brute-force count and optimum");
  oracle->add_option("file", model_path, "model file")->required();
  oracle->add_option("--guard", guard, "box-size guard (points)");
  oracle->add_flag("--json", as_json, "machine-readable output");

  CLI::App* encode = app.add_subcommand("encode", "Export LP text");
  encode->add_option("file", model_path, "model file")->required();
  encode->add_option("-o,--output", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (solve->parsed()) return run_solve(model_path, as_json, verbose);
  if (check->parsed()) return run_check(model_path, assignment_path, as_json);
  if (enumerate->parsed())
    return run_enumerate(model_path, limit, guard, as_json);
  if (oracle->parsed()) return run_oracle(model_path, guard, as_json);
  if (encode->parsed()) return run_encode(model_path, out_path);
  return kExitError;
}
