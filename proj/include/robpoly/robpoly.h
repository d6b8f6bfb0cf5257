// Copyright 2026 The robpoly Authors.
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


/* C interface to robpoly. Every function returns a robpoly_status; on
 * failure robpoly_last_error() describes the problem for the calling
 * thread. Strings handed out by the library are released with
 * robpoly_string_free, handles with their matching *_free. */

#ifndef ROBPOLY_ROBPOLY_H
#define ROBPOLY_ROBPOLY_H

#include <stddef.h>

#if defined(_WIN32)
#define ROBPOLY_API __declspec(dllexport)
#else
#define ROBPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum robpoly_status {
  ROBPOLY_OK = 0,
  ROBPOLY_ERR_INVALID_ARGUMENT = 1,
  ROBPOLY_ERR_DIMENSION = 2,
  ROBPOLY_ERR_NUMERICAL = 3,
  ROBPOLY_ERR_IO = 4,
  ROBPOLY_ERR_PARSE = 5,
  ROBPOLY_ERR_INTERNAL = 6
} robpoly_status;

typedef struct robpoly_poly robpoly_poly;
typedef struct robpoly_samples robpoly_samples;
typedef struct robpoly_report robpoly_report;

ROBPOLY_API const char* robpoly_version(void);
ROBPOLY_API const char* robpoly_last_error(void);
ROBPOLY_API const char* robpoly_status_name(robpoly_status status);
ROBPOLY_API void robpoly_string_free(char* s);

/* Polynomials: tensor Chebyshev coefficients, (d+1)^n of them, last
 * variable fastest. */
ROBPOLY_API robpoly_status robpoly_poly_create(int n, int d, const double* coeffs,
                                               size_t count, robpoly_poly** out);
ROBPOLY_API robpoly_status robpoly_poly_from_json(const char* json, robpoly_poly** out);
ROBPOLY_API robpoly_status robpoly_poly_to_json(const robpoly_poly* p, char** out);
ROBPOLY_API robpoly_status robpoly_poly_dim(const robpoly_poly* p, int* n, int* d);
ROBPOLY_API robpoly_status robpoly_poly_coeffs(const robpoly_poly* p, double* buf,
                                               size_t count);
ROBPOLY_API robpoly_status robpoly_poly_eval(const robpoly_poly* p, const double* x,
                                             size_t n, double* out);
ROBPOLY_API robpoly_status robpoly_poly_sup_norm(const robpoly_poly* p, double* out);
ROBPOLY_API robpoly_status robpoly_poly_l1_norm(const robpoly_poly* p, double* out);
ROBPOLY_API robpoly_status robpoly_poly_distance(const robpoly_poly* a,
                                                 const robpoly_poly* b, double* out);
ROBPOLY_API void robpoly_poly_free(robpoly_poly* p);

/* Sample sets: CSV x1,...,xn,y[,is_outlier]. */
ROBPOLY_API robpoly_status robpoly_samples_read_csv(const char* path, robpoly_samples** out);
ROBPOLY_API robpoly_status robpoly_samples_parse_csv(const char* text, robpoly_samples** out);
ROBPOLY_API robpoly_status robpoly_samples_to_csv(const robpoly_samples* s, char** out);
ROBPOLY_API robpoly_status robpoly_samples_size(const robpoly_samples* s, size_t* count,
                                                int* n);
ROBPOLY_API robpoly_status robpoly_samples_set_truth(robpoly_samples* s,
                                                     const robpoly_poly* truth);
/* *out is NULL when the set carries no ground truth. */
ROBPOLY_API robpoly_status robpoly_samples_truth(const robpoly_samples* s, robpoly_poly** out);
ROBPOLY_API void robpoly_samples_free(robpoly_samples* s);

/* Commands. config_json is a JSON object of run parameters; results that
 * carry the configuration echo it back. */
ROBPOLY_API robpoly_status robpoly_simulate(const char* config_json, const robpoly_poly* truth,
                                            robpoly_samples** out);
ROBPOLY_API robpoly_status robpoly_fit(const robpoly_samples* s, const char* config_json,
                                       robpoly_report** out);
ROBPOLY_API robpoly_status robpoly_report_poly(const robpoly_report* r, robpoly_poly** out);
ROBPOLY_API robpoly_status robpoly_report_to_json(const robpoly_report* r, char** out);
ROBPOLY_API robpoly_status robpoly_report_trace_csv(const robpoly_report* r, char** out);
/* Final sup-norm error against the truth; NaN when unknown. */
ROBPOLY_API robpoly_status robpoly_report_error(const robpoly_report* r, double* out);
ROBPOLY_API void robpoly_report_free(robpoly_report* r);

ROBPOLY_API robpoly_status robpoly_sweep(const char* config_json, char** csv_out);
/* JSON with "table", "checks", "sandwich_csv", "tightness_csv", "all_pass". */
ROBPOLY_API robpoly_status robpoly_verify_norms(const char* config_json, char** json_out,
                                                int* all_pass);
/* JSON with "csv" (M,failure_rate,ci_low,ci_high) and experiment details. */
ROBPOLY_API robpoly_status robpoly_lowerbound(const char* config_json, char** json_out);
/* The configuration after defaults are applied, as JSON. */
ROBPOLY_API robpoly_status robpoly_config_normalize(const char* config_json, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ROBPOLY_ROBPOLY_H */
