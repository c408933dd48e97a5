/*
 * Copyright 2026 The rcc-lab Authors.
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

/*
 * C interface to librcc: remote creation of quantum coherence.
 *
 * Objects are opaque handles created by rcc_*_create / rcc_*_from_json and
 * released with the matching rcc_*_free (NULL is accepted). Every fallible
 * call returns an rcc_status; on failure a description of the most recent
 * error on the calling thread is available from rcc_last_error().
 *
 * Complex numbers cross the boundary as interleaved (re, im) doubles; matrices
 * are row major. Strings returned through char** are heap allocated and must
 * be released with rcc_string_free.
 */

#ifndef RCC_RCC_H
#define RCC_RCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef RCC_BUILDING_LIBRARY
#    define RCC_API __declspec(dllexport)
#  else
#    define RCC_API __declspec(dllimport)
#  endif
#else
#  define RCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcc_status {
  RCC_OK = 0,
  RCC_ERR_INVALID_ARGUMENT = 1,
  RCC_ERR_DIMENSION_MISMATCH = 2,
  RCC_ERR_NOT_HERMITIAN = 3,
  RCC_ERR_NOT_POSITIVE = 4,
  RCC_ERR_BAD_TRACE = 5,
  RCC_ERR_NOT_CONVERGED = 6,
  RCC_ERR_PREMISE_VIOLATED = 7,
  RCC_ERR_NOT_TRACE_PRESERVING = 8,
  RCC_ERR_ZERO_PROBABILITY = 9,
  RCC_ERR_WRONG_DIMENSION = 10,
  RCC_ERR_SEARCH_EXHAUSTED = 11,
  RCC_ERR_PARSE = 12,
  RCC_ERR_IO = 13,
  RCC_ERR_INTERNAL = 100
} rcc_status;

typedef struct rcc_state rcc_state;            /* pure state on H_A (x) H_B */
typedef struct rcc_density rcc_density;        /* mixed state on H_A (x) H_B */
typedef struct rcc_channel rcc_channel;        /* Kraus operation or ensemble on B */
typedef struct rcc_report rcc_report;          /* average-RCC evaluation */
typedef struct rcc_fig1_config rcc_fig1_config;

RCC_API const char* rcc_version(void);
RCC_API const char* rcc_status_name(rcc_status status);
RCC_API const char* rcc_last_error(void);
RCC_API void rcc_string_free(char* s);

/* ---- pure states -------------------------------------------------------- */

/* amplitudes: 2*dim_a*dim_b doubles, amplitude of |i>|j> at index i*dim_b+j. */
RCC_API rcc_status rcc_state_create(int dim_a, int dim_b, const double* amplitudes,
                                    rcc_state** out);
RCC_API rcc_status rcc_state_from_json(const char* json, rcc_state** out);
RCC_API rcc_status rcc_state_to_json(const rcc_state* state, char** out);
RCC_API void rcc_state_free(rcc_state* state);
RCC_API rcc_status rcc_state_dims(const rcc_state* state, int* dim_a, int* dim_b);
RCC_API rcc_status rcc_state_concurrence(const rcc_state* state, double* out);
/* Writes up to capacity Schmidt weights; *count receives the Schmidt rank. */
RCC_API rcc_status rcc_state_schmidt_weights(const rcc_state* state, double* weights,
                                             size_t capacity, size_t* count);
/* out: 2*dim_a*dim_a doubles. */
RCC_API rcc_status rcc_state_reduced_a(const rcc_state* state, double* out);
RCC_API rcc_status rcc_state_partner(const rcc_state* state, rcc_state** out);

/* ---- mixed states ------------------------------------------------------- */

/* entries: 2*(dim_a*dim_b)^2 doubles; validated as a density matrix. */
RCC_API rcc_status rcc_density_create(int dim_a, int dim_b, const double* entries,
                                      rcc_density** out);
RCC_API void rcc_density_free(rcc_density* density);
RCC_API rcc_status rcc_density_is_incoherent_quantum(const rcc_density* density, double tol,
                                                     int* out);
/* *out is NULL when the state is incoherent-quantum (no operation exists). */
RCC_API rcc_status rcc_find_creating_operation(const rcc_density* density, rcc_channel** out,
                                               double* coherence);
/* l1 coherence of a dim x dim density matrix given as 2*dim*dim doubles. */
RCC_API rcc_status rcc_l1_coherence(int dim, const double* entries, double* out);

/* ---- channels ----------------------------------------------------------- */

/* kraus: count operators, each 2*dim_b*dim_b doubles, back to back. */
RCC_API rcc_status rcc_channel_create(int dim_b, size_t count, const double* kraus,
                                      const char* label, rcc_channel** out);
RCC_API rcc_status rcc_channel_from_json(const char* json, rcc_channel** out);
RCC_API rcc_status rcc_channel_to_json(const rcc_channel* channel, char** out);
RCC_API void rcc_channel_free(rcc_channel* channel);
RCC_API rcc_status rcc_channel_phase_damping(double r, rcc_channel** out);
RCC_API rcc_status rcc_channel_depolarizing(double p, rcc_channel** out);
RCC_API rcc_status rcc_channel_bit_flip(double p, rcc_channel** out);
RCC_API rcc_status rcc_channel_phase_flip(double p, rcc_channel** out);
RCC_API rcc_status rcc_channel_bit_phase_flip(double p, rcc_channel** out);
/* basis: 2*dim*dim doubles whose columns are orthonormal. Yields an ensemble. */
RCC_API rcc_status rcc_channel_projective_measurement(int dim, const double* basis,
                                                      rcc_channel** out);
RCC_API rcc_status rcc_channel_inert(const rcc_state* state, const double* n_values,
                                     size_t count, rcc_channel** out);
RCC_API rcc_status rcc_channel_is_ensemble(const rcc_channel* channel, int* out);
RCC_API rcc_status rcc_channel_is_trace_preserving(const rcc_channel* channel, double tol,
                                                   int* out);
/* channel must be a single operation. *witness is -1 when none. */
RCC_API rcc_status rcc_theorem2_predicate(const rcc_state* state, const rcc_channel* channel,
                                          double tol, int* creates, int* witness);

/* ---- average RCC -------------------------------------------------------- */

RCC_API rcc_status rcc_compute(const rcc_state* state, const rcc_channel* channel,
                               rcc_report** out);
RCC_API void rcc_report_free(rcc_report* report);
RCC_API rcc_status rcc_report_to_json(const rcc_report* report, char** out);
RCC_API rcc_status rcc_report_average(const rcc_report* report, double* average,
                                      double* entanglement);
RCC_API rcc_status rcc_report_outcome_count(const rcc_report* report, size_t* count);
RCC_API rcc_status rcc_report_outcome(const rcc_report* report, size_t index,
                                      double* probability, double* coherence,
                                      int* zero_probability);
/* Absent quantities are reported as NaN. */
RCC_API rcc_status rcc_report_bounds(const rcc_report* report, double* tighter,
                                     double* theorem3, double* maxent_average);
/* *holds is -1 outside 2x2. */
RCC_API rcc_status rcc_report_factorization(const rcc_report* report, double* ratio, int* holds);

/* ---- experiments -------------------------------------------------------- */

RCC_API rcc_status rcc_fig1_config_create(rcc_fig1_config** out);
RCC_API void rcc_fig1_config_free(rcc_fig1_config* config);
/* Overlays the fields present in a JSON config onto the handle. */
RCC_API rcc_status rcc_fig1_config_load_json(rcc_fig1_config* config, const char* json);
RCC_API rcc_status rcc_fig1_config_set_samples(rcc_fig1_config* config, uint64_t samples);
RCC_API rcc_status rcc_fig1_config_set_rates(rcc_fig1_config* config, const double* rates,
                                             size_t count);
RCC_API rcc_status rcc_fig1_config_set_seed(rcc_fig1_config* config, uint64_t seed);
RCC_API rcc_status rcc_fig1_config_set_output(rcc_fig1_config* config, const char* csv_path);
/* NULL disables the plot. */
RCC_API rcc_status rcc_fig1_config_set_plot(rcc_fig1_config* config, const char* svg_path);
RCC_API rcc_status rcc_fig1_config_rate_count(const rcc_fig1_config* config, size_t* count);

typedef struct rcc_fig1_summary {
  uint64_t rows;
  double max_ratio_deviation;
  int strictly_increasing;
  int monotonicity_flagged;
} rcc_fig1_summary;

/* mean_avg_rcc, when not NULL, receives one mean per damping rate. */
RCC_API rcc_status rcc_fig1_run(const rcc_fig1_config* config, rcc_fig1_summary* summary,
                                double* mean_avg_rcc);

typedef struct rcc_verify_options {
  uint64_t samples;
  uint64_t seed;
  uint64_t inner;         /* 0: suite default */
  const int* dims;        /* dim_count (dim_a, dim_b) pairs; NULL: suite default */
  size_t dim_count;
} rcc_verify_options;

typedef struct rcc_verify_summary {
  uint64_t checks;
  uint64_t passed;
  uint64_t failed;
  uint64_t excluded;
  uint64_t exhausted;
  double max_metric;
  double threshold;
  double excluded_fraction;
  int ok;
} rcc_verify_summary;

/* suite: theorem1, theorem2, lemma1, theorem3, theorem4 or nosignal.
 * details, when not NULL, receives a human-readable report including the
 * worst-case instance as JSON. */
RCC_API rcc_status rcc_verify_run(const char* suite, const rcc_verify_options* options,
                                  rcc_verify_summary* summary, char** details);

#ifdef __cplusplus
}
#endif

#endif /* RCC_RCC_H */
