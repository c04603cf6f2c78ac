/* Copyright 2026 bigm developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the bigm shared library. All functions are thread-compatible:
 * distinct handles may be used concurrently, one handle must not be used
 * from two threads at once. Functions returning bigm_status fill `err`
 * (truncated to err_cap, always NUL-terminated) on failure when err is
 * non-NULL.
 */

#ifndef BIGM_BIGM_H
#define BIGM_BIGM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bigm_status {
  BIGM_OK = 0,
  BIGM_ERR_IO = 1,         /* unreadable or unwritable file */
  BIGM_ERR_PARSE = 2,      /* malformed model or assignment text */
  BIGM_ERR_VALIDATION = 3, /* structurally invalid model or assignment */
  BIGM_ERR_ARGUMENT = 4,   /* bad argument (NULL handle, index out of range) */
  BIGM_ERR_TOO_LARGE = 5,  /* search space exceeds the guard */
  BIGM_ERR_NUMERICAL = 6,  /* LP safeguards exhausted */
  BIGM_ERR_INTERNAL = 7
} bigm_status;

const char* bigm_version(void);
const char* bigm_status_name(bigm_status status);

/* ---- models ---------------------------------------------------------- */

typedef struct bigm_model bigm_model;

bigm_status bigm_model_from_file(const char* path, bigm_model** out,
                                 char* err, size_t err_cap);
bigm_status bigm_model_from_string(const char* text, bigm_model** out,
                                   char* err, size_t err_cap);
void bigm_model_free(bigm_model* model);

size_t bigm_model_num_vars(const bigm_model* model);
size_t bigm_model_num_constraints(const bigm_model* model);
/* NULL when var is out of range. */
const char* bigm_model_var_name(const bigm_model* model, size_t var);
int bigm_model_var_is_binary(const bigm_model* model, size_t var);
long long bigm_model_var_lo(const bigm_model* model, size_t var);
long long bigm_model_var_hi(const bigm_model* model, size_t var);
/* +1 maximize, -1 minimize, 0 feasibility. */
int bigm_model_objective_sense(const bigm_model* model);

/* csp block introspection; counts are 0 when the model has none. */
size_t bigm_model_num_csp_vars(const bigm_model* model);
const char* bigm_model_csp_var_name(const bigm_model* model, size_t i);
/* 1 when model variable `var` belongs to the csp one-hot encoding. */
int bigm_model_var_in_csp(const bigm_model* model, size_t var);
/* Decoded label of csp variable i under a full assignment of the model
 * variables (values has num_vars entries). */
bigm_status bigm_model_decode_csp(const bigm_model* model,
                                  const long long* values, size_t num_values,
                                  size_t i, const char** label_out, char* err,
                                  size_t err_cap);

/* LP text export; *out is heap-allocated, release with bigm_text_free. */
bigm_status bigm_model_write_lp(const bigm_model* model, char** out,
                                char* err, size_t err_cap);
void bigm_text_free(char* text);

/* ---- solving --------------------------------------------------------- */

typedef struct bigm_solution bigm_solution;

/* Branch-and-bound solve. verbose != 0 streams node progress to stderr. */
bigm_status bigm_solve(const bigm_model* model, int verbose,
                       bigm_solution** out, char* err, size_t err_cap);

int bigm_solution_optimal(const bigm_solution* solution); /* 0: infeasible */
long long bigm_solution_objective(const bigm_solution* solution);
long long bigm_solution_bound(const bigm_solution* solution);
long long bigm_solution_nodes(const bigm_solution* solution);
long long bigm_solution_value(const bigm_solution* solution, size_t var);
void bigm_solution_free(bigm_solution* solution);

/* Visitor for streamed assignments; return 0 to continue, nonzero to
 * stop the search early. */
typedef int (*bigm_visit_cb)(void* ctx, size_t num_vars,
                             const long long* values);

/* Exact enumeration in lexicographic order. limit < 0 means unlimited
 * (the box must then fit under guard); guard <= 0 selects the default of
 * 1e7 box points. */
bigm_status bigm_enumerate(const bigm_model* model, long long limit,
                           long long guard, bigm_visit_cb cb, void* ctx,
                           long long* count_out, char* err, size_t err_cap);

typedef struct bigm_oracle_stats {
  long long feasible_count;
  int has_optimum;
  long long optimum;
} bigm_oracle_stats;

/* Brute-force sweep of the full variable box. */
bigm_status bigm_oracle(const bigm_model* model, long long guard,
                        bigm_visit_cb cb, void* ctx, bigm_oracle_stats* stats,
                        char* err, size_t err_cap);

/* ---- assignment checking --------------------------------------------- */

typedef struct bigm_check_report bigm_check_report;

bigm_status bigm_check_file(const bigm_model* model, const char* path,
                            bigm_check_report** out, char* err,
                            size_t err_cap);
bigm_status bigm_check_string(const bigm_model* model, const char* text,
                              bigm_check_report** out, char* err,
                              size_t err_cap);
int bigm_check_feasible(const bigm_check_report* report);
size_t bigm_check_num_violations(const bigm_check_report* report);
const char* bigm_check_violation(const bigm_check_report* report, size_t i);
void bigm_check_free(bigm_check_report* report);

#ifdef __cplusplus
}
#endif

#endif /* BIGM_BIGM_H */
