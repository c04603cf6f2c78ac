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

#include "bigm/bigm.h"

#include <cstring>
#include <vector>
#include <new>
#include <string>

#include "bigm/lp_format.hpp"
#include "bigm/mip.hpp"
#include "bigm/modelfile.hpp"
#include "bigm/oracle.hpp"

using bigm::Error;
using bigm::ErrorCode;

struct bigm_model {
  bigm::modelfile::CompiledModel compiled;
};

struct bigm_solution {
  bigm::MipResult result;
};

struct bigm_check_report {
  bigm::modelfile::CheckReport report;
};

namespace {

void copy_error(char* err, size_t err_cap, const char* message) {
  if (!err || err_cap == 0) return;
  std::strncpy(err, message, err_cap - 1);
  err[err_cap - 1] = '\0';
}

bigm_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError: return BIGM_ERR_IO;
    case ErrorCode::ParseError: return BIGM_ERR_PARSE;
    case ErrorCode::SearchSpaceTooLarge: return BIGM_ERR_TOO_LARGE;
    case ErrorCode::NumericalFailure: return BIGM_ERR_NUMERICAL;
    default: return BIGM_ERR_VALIDATION;
  }
}

template <typename Fn>
bigm_status guarded(char* err, size_t err_cap, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    copy_error(err, err_cap, e.what());
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    copy_error(err, err_cap, "out of memory");
    return BIGM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    copy_error(err, err_cap, e.what());
    return BIGM_ERR_INTERNAL;
  }
}

// An early visitor stop is not an error; remember it locally.
struct VisitAdapter {
  bigm_visit_cb cb = nullptr;
  void* ctx = nullptr;
  bool stopped = false;
  std::vector<long long> buffer;

  bool emit(const bigm::Assignment& assignment) {
    if (!cb || stopped) return !stopped;
    buffer.assign(assignment.values().begin(), assignment.values().end());
    if (cb(ctx, buffer.size(), buffer.data()) != 0) {
      stopped = true;
    }
    return !stopped;
  }
};

struct StopSearch {};

}  // namespace

extern "C" {

const char* bigm_version(void) { return "0.1.0"; }

const char* bigm_status_name(bigm_status status) {
  switch (status) {
    case BIGM_OK: return "ok";
    case BIGM_ERR_IO: return "io-error";
    case BIGM_ERR_PARSE: return "parse-error";
    case BIGM_ERR_VALIDATION: return "validation-error";
    case BIGM_ERR_ARGUMENT: return "bad-argument";
    case BIGM_ERR_TOO_LARGE: return "search-space-too-large";
    case BIGM_ERR_NUMERICAL: return "numerical-failure";
    case BIGM_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

bigm_status bigm_model_from_file(const char* path, bigm_model** out,
                                 char* err, size_t err_cap) {
  if (!path || !out) {
    copy_error(err, err_cap, "path and out must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    auto model = new bigm_model{bigm::modelfile::load_file(path)};
    *out = model;
    return BIGM_OK;
  });
}

bigm_status bigm_model_from_string(const char* text, bigm_model** out,
                                   char* err, size_t err_cap) {
  if (!text || !out) {
    copy_error(err, err_cap, "text and out must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    auto model = new bigm_model{bigm::modelfile::load_string(text)};
    *out = model;
    return BIGM_OK;
  });
}

void bigm_model_free(bigm_model* model) { delete model; }

size_t bigm_model_num_vars(const bigm_model* model) {
  return model ? model->compiled.model.num_vars() : 0;
}

size_t bigm_model_num_constraints(const bigm_model* model) {
  return model ? model->compiled.model.num_constraints() : 0;
}

const char* bigm_model_var_name(const bigm_model* model, size_t var) {
  if (!model || var >= model->compiled.model.num_vars()) return nullptr;
  return model->compiled.model.variables()[var].name.c_str();
}

int bigm_model_var_is_binary(const bigm_model* model, size_t var) {
  if (!model || var >= model->compiled.model.num_vars()) return 0;
  return model->compiled.model.variables()[var].kind ==
                 bigm::VarKind::Binary
             ? 1
             : 0;
}

long long bigm_model_var_lo(const bigm_model* model, size_t var) {
  if (!model || var >= model->compiled.model.num_vars()) return 0;
  return model->compiled.model.variables()[var].lo;
}

long long bigm_model_var_hi(const bigm_model* model, size_t var) {
  if (!model || var >= model->compiled.model.num_vars()) return 0;
  return model->compiled.model.variables()[var].hi;
}

int bigm_model_objective_sense(const bigm_model* model) {
  if (!model) return 0;
  switch (model->compiled.model.objective().sense) {
    case bigm::ObjectiveSense::Maximize: return 1;
    case bigm::ObjectiveSense::Minimize: return -1;
    case bigm::ObjectiveSense::Feasibility: return 0;
  }
  return 0;
}

size_t bigm_model_num_csp_vars(const bigm_model* model) {
  if (!model || !model->compiled.csp) return 0;
  return model->compiled.csp->variables.size();
}

const char* bigm_model_csp_var_name(const bigm_model* model, size_t i) {
  if (!model || !model->compiled.csp ||
      i >= model->compiled.csp->variables.size()) {
    return nullptr;
  }
  return model->compiled.csp->variables[i].c_str();
}

int bigm_model_var_in_csp(const bigm_model* model, size_t var) {
  if (!model || !model->compiled.codebook ||
      var >= model->compiled.model.num_vars()) {
    return 0;
  }
  return model->compiled.codebook->covers(
             bigm::VarId{static_cast<std::uint32_t>(var)})
             ? 1
             : 0;
}

bigm_status bigm_model_decode_csp(const bigm_model* model,
                                  const long long* values, size_t num_values,
                                  size_t i, const char** label_out, char* err,
                                  size_t err_cap) {
  if (!model || !values || !label_out || !model->compiled.codebook ||
      i >= model->compiled.codebook->variables.size() ||
      num_values != model->compiled.model.num_vars()) {
    copy_error(err, err_cap, "bad decode arguments");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    std::vector<std::int64_t> copy(values, values + num_values);
    bigm::Mapping mapping = bigm::decode(*model->compiled.codebook,
                                         bigm::Assignment(std::move(copy)));
    const std::string& name = model->compiled.codebook->variables[i];
    // mapping labels point into the codebook-owned label list
    const auto& labels = model->compiled.codebook->labels;
    const std::string& label = mapping.at(name);
    for (const std::string& candidate : labels) {
      if (candidate == label) {
        *label_out = candidate.c_str();
        return BIGM_OK;
      }
    }
    return BIGM_ERR_INTERNAL;
  });
}

bigm_status bigm_model_write_lp(const bigm_model* model, char** out,
                                char* err, size_t err_cap) {
  if (!model || !out) {
    copy_error(err, err_cap, "model and out must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    std::string text = bigm::write_lp(model->compiled.model);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
    return BIGM_OK;
  });
}

void bigm_text_free(char* text) { delete[] text; }

bigm_status bigm_solve(const bigm_model* model, int verbose,
                       bigm_solution** out, char* err, size_t err_cap) {
  if (!model || !out) {
    copy_error(err, err_cap, "model and out must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    bigm::MipOptions options;
    options.verbose = verbose != 0;
    *out = new bigm_solution{bigm::solve_mip(model->compiled.model, options)};
    return BIGM_OK;
  });
}

int bigm_solution_optimal(const bigm_solution* solution) {
  return solution && solution->result.status == bigm::MipStatus::Optimal ? 1
                                                                         : 0;
}

long long bigm_solution_objective(const bigm_solution* solution) {
  return solution ? solution->result.objective : 0;
}

long long bigm_solution_bound(const bigm_solution* solution) {
  return solution ? solution->result.bound : 0;
}

long long bigm_solution_nodes(const bigm_solution* solution) {
  return solution ? solution->result.nodes : 0;
}

long long bigm_solution_value(const bigm_solution* solution, size_t var) {
  if (!solution || !solution->result.best ||
      var >= solution->result.best->size()) {
    return 0;
  }
  return solution->result.best->values()[var];
}

void bigm_solution_free(bigm_solution* solution) { delete solution; }

bigm_status bigm_enumerate(const bigm_model* model, long long limit,
                           long long guard, bigm_visit_cb cb, void* ctx,
                           long long* count_out, char* err, size_t err_cap) {
  if (!model) {
    copy_error(err, err_cap, "model must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    VisitAdapter adapter{cb, ctx};
    bigm::EnumerateOptions options;
    options.limit = limit;
    options.guard = guard > 0 ? guard : bigm::kDefaultGuard;
    options.collect = false;
    options.visit = [&adapter](const bigm::Assignment& assignment) {
      if (!adapter.emit(assignment)) throw StopSearch{};
    };
    long long count = 0;
    try {
      count = bigm::enumerate(model->compiled.model, options).count;
    } catch (const StopSearch&) {
      count = -1;  // caller stopped; count unknown
    }
    if (count_out) *count_out = count;
    return BIGM_OK;
  });
}

bigm_status bigm_oracle(const bigm_model* model, long long guard,
                        bigm_visit_cb cb, void* ctx, bigm_oracle_stats* stats,
                        char* err, size_t err_cap) {
  if (!model) {
    copy_error(err, err_cap, "model must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    VisitAdapter adapter{cb, ctx};
    bigm::OracleOptions options;
    options.guard = guard > 0 ? guard : bigm::kDefaultGuard;
    options.visit = [&adapter](const bigm::Assignment& assignment) {
      if (!adapter.emit(assignment)) throw StopSearch{};
    };
    bigm::OracleReport report;
    try {
      report = bigm::brute_force(model->compiled.model, options);
    } catch (const StopSearch&) {
      return BIGM_OK;  // caller stopped; stats left untouched
    }
    if (stats) {
      stats->feasible_count = report.feasible_count;
      stats->has_optimum = report.optimum.has_value() ? 1 : 0;
      stats->optimum = report.optimum.value_or(0);
    }
    return BIGM_OK;
  });
}

bigm_status bigm_check_file(const bigm_model* model, const char* path,
                            bigm_check_report** out, char* err,
                            size_t err_cap) {
  if (!model || !path || !out) {
    copy_error(err, err_cap, "model, path and out must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    *out = new bigm_check_report{
        bigm::modelfile::check_assignment_file(model->compiled, path)};
    return BIGM_OK;
  });
}

bigm_status bigm_check_string(const bigm_model* model, const char* text,
                              bigm_check_report** out, char* err,
                              size_t err_cap) {
  if (!model || !text || !out) {
    copy_error(err, err_cap, "model, text and out must be non-NULL");
    return BIGM_ERR_ARGUMENT;
  }
  return guarded(err, err_cap, [&] {
    *out = new bigm_check_report{
        bigm::modelfile::check_assignment(model->compiled, text)};
    return BIGM_OK;
  });
}

int bigm_check_feasible(const bigm_check_report* report) {
  return report && report->report.feasible ? 1 : 0;
}

size_t bigm_check_num_violations(const bigm_check_report* report) {
  return report ? report->report.violations.size() : 0;
}

const char* bigm_check_violation(const bigm_check_report* report, size_t i) {
  if (!report || i >= report->report.violations.size()) return nullptr;
  return report->report.violations[i].c_str();
}

void bigm_check_free(bigm_check_report* report) { delete report; }

}  // extern "C"
