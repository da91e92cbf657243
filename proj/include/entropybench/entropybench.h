/* Copyright 2026 The EntropyBench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
/* C interface to the entropy estimation library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an eb_status; on failure eb_last_error() holds a message
 * for the calling thread. Strings returned through char** are owned by the
 * caller and released with eb_string_free. Entropies use the natural log.
 */
#ifndef ENTROPYBENCH_H_
#define ENTROPYBENCH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EB_API __declspec(dllexport)
#else
#define EB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eb_status {
  EB_OK = 0,
  EB_ERR_INVALID_ARGUMENT = 1,
  EB_ERR_DOMAIN = 2,
  EB_ERR_NUMERIC = 3,
  EB_ERR_IO = 4,
  EB_ERR_CAPACITY = 5,
  EB_ERR_INTERNAL = 99
} eb_status;

typedef enum eb_branch {
  EB_BRANCH_INTEGER = 0,
  EB_BRANCH_ODD_FLOOR = 1,
  EB_BRANCH_EVEN_FLOOR = 2,
  EB_BRANCH_SUB_ONE = 3,
  EB_BRANCH_VON_NEUMANN = 4
} eb_branch;

typedef enum eb_vn_approach { EB_VN_QSVT = 0, EB_VN_POLY = 1 } eb_vn_approach;
typedef enum eb_sub_one_method { EB_SUB_ONE_SAMPLING = 0, EB_SUB_ONE_AE = 1 } eb_sub_one_method;

typedef struct eb_density eb_density;
typedef struct eb_poly eb_poly;
typedef struct eb_config eb_config;
typedef struct eb_experiment_result eb_experiment_result;

typedef struct eb_state_meta {
  int rank;
  double rho_min;
  double rho_max;
  double purity;
} eb_state_meta;

typedef struct eb_regime {
  double alpha;
  int k;
  double c;
  eb_branch branch;
} eb_regime;

typedef struct eb_budget {
  double delta;
  double shots;
  double predicted_samples;
} eb_budget;

typedef struct eb_estimate_options {
  int ideal;
  int blind;
  int support_projection;
  eb_sub_one_method sub_one_method;
  eb_vn_approach vn_approach;
  double theta;
  int threads;
  double shots_multiplier;
} eb_estimate_options;

typedef struct eb_estimate_report {
  eb_branch branch;
  char method[48];
  double alpha;
  double estimate;
  double tr_estimate;
  double target_eps;
  double delta;
  double delta_meas;
  double p0_hat;
  double p0_realized;
  double p0_closed_form;
  double eta;
  double shots_used;
  double encoding_cost;
  double sample_cost_total;
  double predicted_budget;
  double rho_min_used;
  double rho_min_sensitivity;
  int poly_degree;
  int has_exact;
  double exact_value;
  uint64_t seed;
} eb_estimate_report;

EB_API const char* eb_version(void);
EB_API const char* eb_last_error(void);
EB_API void eb_string_free(char* s);

/* Density matrices */
EB_API eb_status eb_density_random(int d, int rank, uint64_t seed, eb_density** out);
EB_API eb_status eb_density_from_spectrum(const double* eigs, size_t n, int d, eb_density** out);
EB_API eb_status eb_density_from_text(const char* text, eb_density** out);
EB_API eb_status eb_density_load(const char* path, eb_density** out);
EB_API eb_status eb_density_save(const eb_density* rho, const char* path);
EB_API eb_status eb_density_to_text(const eb_density* rho, char** out);
EB_API eb_status eb_density_dim(const eb_density* rho, int* out);
EB_API eb_status eb_density_meta(const eb_density* rho, eb_state_meta* out);
EB_API void eb_density_free(eb_density* rho);

/* Exact oracle: Tr rho^alpha and S_alpha (S_v at alpha = 1). */
EB_API eb_status eb_exact_entropy(const eb_density* rho, double alpha, double* tr_pow, double* entropy);

/* Accounting */
EB_API eb_status eb_decompose_alpha(double alpha, eb_regime* out);
EB_API eb_status eb_delta_budget(double alpha, double eps, const eb_state_meta* meta, int amplitude, eb_budget* out);
EB_API eb_status eb_predicted_samples(double alpha, double eps, const eb_state_meta* meta, int d,
                                      eb_vn_approach approach, double* out);
EB_API eb_status eb_propagate_entropy_error(double delta, double alpha, const eb_state_meta* meta, double* out);

/* Estimation */
EB_API void eb_estimate_options_init(eb_estimate_options* opt);
EB_API eb_status eb_estimate(const eb_density* rho, double alpha, double eps, uint64_t seed,
                             const eb_estimate_options* opt, eb_estimate_report* out);

/* Polynomial approximations */
EB_API eb_status eb_poly_approx_log(double beta, double eps, eb_poly** out);
EB_API eb_status eb_poly_approx_pos_power(double c, double kappa, double eps, eb_poly** out);
EB_API eb_status eb_poly_approx_neg_power(double c, double kappa, double eps, eb_poly** out);
EB_API eb_status eb_poly_eval(const eb_poly* p, double x, double* out);
EB_API eb_status eb_poly_degree(const eb_poly* p, int* out);
EB_API eb_status eb_poly_eps(const eb_poly* p, double* out);
EB_API eb_status eb_poly_input_precision(const eb_poly* p, double* out);
EB_API eb_status eb_poly_to_text(const eb_poly* p, char** out);
EB_API void eb_poly_free(eb_poly* p);

/* Experiments */
EB_API eb_status eb_config_new(eb_config** out);
EB_API eb_status eb_config_set(eb_config* cfg, const char* key, const char* value);
EB_API eb_status eb_config_load(eb_config* cfg, const char* path);
EB_API eb_status eb_config_validate(const eb_config* cfg);
/* Value of the "out" key, empty when unset. Valid until the next set/load. */
EB_API const char* eb_config_output_path(const eb_config* cfg);
EB_API void eb_config_free(eb_config* cfg);

EB_API eb_status eb_run_experiment(const eb_config* cfg, eb_experiment_result** out);
EB_API const char* eb_result_csv(const eb_experiment_result* res);
EB_API const char* eb_result_summary(const eb_experiment_result* res);
EB_API int eb_result_exit_code(const eb_experiment_result* res);
EB_API double eb_result_coverage(const eb_experiment_result* res);
EB_API size_t eb_result_rows(const eb_experiment_result* res);
EB_API eb_status eb_result_write_csv(const eb_experiment_result* res, const char* path);
EB_API void eb_result_free(eb_experiment_result* res);

#ifdef __cplusplus
}
#endif

#endif /* ENTROPYBENCH_H_ */
