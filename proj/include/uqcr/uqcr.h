// Copyright 2026 The uqcr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UQCR_UQCR_H_
#define UQCR_UQCR_H_

/* C interface to the uqcr library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a uqcr_status; on failure a message is
 * available from uqcr_last_error() on the calling thread until the next
 * call. Strings returned through char** are owned by the caller and must be
 * released with uqcr_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(UQCR_BUILDING_LIBRARY)
#define UQCR_API __attribute__((visibility("default")))
#else
#define UQCR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uqcr_status {
  UQCR_OK = 0,
  UQCR_E_INVALID_ARGUMENT,
  UQCR_E_NEGATIVE_ENTRY,
  UQCR_E_SUM_MISMATCH,
  UQCR_E_TOTAL_MISMATCH,
  UQCR_E_EMPTY_SET,
  UQCR_E_SUPPORT_MISMATCH,
  UQCR_E_DIMENSION_MISMATCH,
  UQCR_E_NOT_RANK_ONE,
  UQCR_E_NOT_NORMALIZED,
  UQCR_E_BLOCH_NORM_EXCEEDED,
  UQCR_E_WRONG_DIMENSION,
  UQCR_E_BAD_RANK,
  UQCR_E_UNSUPPORTED_DIMENSION,
  UQCR_E_LEVEL_OUT_OF_RANGE,
  UQCR_E_SOLVER_DIVERGED,
  UQCR_E_PARSE,
  UQCR_E_IO,
  UQCR_E_NULL_POINTER,
  UQCR_E_BUFFER_TOO_SMALL,
  UQCR_E_INTERNAL
} uqcr_status;

typedef enum uqcr_constraint_kind {
  UQCR_CONSTRAINT_ALL_STATES = 0,
  UQCR_CONSTRAINT_PURE_ONLY = 1,
  UQCR_CONSTRAINT_FIXED_BLOCH_NORM = 2
} uqcr_constraint_kind;

typedef enum uqcr_log_base { UQCR_LOG_BITS = 0, UQCR_LOG_NATS = 1 } uqcr_log_base;

typedef struct uqcr_solver_config {
  int max_iter;
  int multistarts;
  double tol;
  uint64_t oracle_samples;
  uint64_t seed;
  unsigned threads; /* 0 = hardware concurrency */
} uqcr_solver_config;

typedef struct uqcr_observables uqcr_observables;
typedef struct uqcr_state uqcr_state;
typedef struct uqcr_bounds uqcr_bounds;

UQCR_API const char* uqcr_version(void);
UQCR_API const char* uqcr_last_error(void);
UQCR_API const char* uqcr_status_name(uqcr_status status);
UQCR_API void uqcr_string_free(char* s);

UQCR_API void uqcr_solver_config_default(uqcr_solver_config* cfg);

/* Observables ----------------------------------------------------------- */
UQCR_API uqcr_status uqcr_observables_from_json(const char* json, uqcr_observables** out);
UQCR_API uqcr_status uqcr_observables_load(const char* path, uqcr_observables** out);
UQCR_API void uqcr_observables_free(uqcr_observables* obs);
UQCR_API size_t uqcr_observables_count(const uqcr_observables* obs);
UQCR_API int uqcr_observables_dimension(const uqcr_observables* obs);

/* States ---------------------------------------------------------------- */
UQCR_API uqcr_status uqcr_state_from_json(const char* json, uqcr_state** out);
UQCR_API uqcr_status uqcr_state_load(const char* path, uqcr_state** out);
/* Row-major interleaved (re, im) pairs, 2 * dim * dim doubles. */
UQCR_API uqcr_status uqcr_state_from_density(const double* re_im, int dim, uqcr_state** out);
UQCR_API void uqcr_state_free(uqcr_state* state);
UQCR_API int uqcr_state_dimension(const uqcr_state* state);

/* Bounds ---------------------------------------------------------------- */
/* "all", "pure" or "bloch=R". */
UQCR_API uqcr_status uqcr_constraint_parse(const char* text, uqcr_constraint_kind* kind,
                                           double* bloch_norm);
/* cfg may be NULL for defaults. Returns UQCR_E_SOLVER_DIVERGED when a level
 * could not be certified. */
UQCR_API uqcr_status uqcr_bounds_compute(const uqcr_observables* obs, uqcr_constraint_kind kind,
                                         double bloch_norm, const uqcr_solver_config* cfg,
                                         uqcr_bounds** out);
UQCR_API uqcr_status uqcr_bounds_from_json(const char* json, uqcr_bounds** out);
UQCR_API uqcr_status uqcr_bounds_load(const char* path, uqcr_bounds** out);
UQCR_API uqcr_status uqcr_bounds_to_json(const uqcr_bounds* b, char** out);
UQCR_API void uqcr_bounds_free(uqcr_bounds* b);
/* Number of entries of t (and of s). */
UQCR_API size_t uqcr_bounds_length(const uqcr_bounds* b);
UQCR_API uqcr_status uqcr_bounds_t(const uqcr_bounds* b, double* out, size_t capacity);
UQCR_API uqcr_status uqcr_bounds_s(const uqcr_bounds* b, double* out, size_t capacity);

/* Reports --------------------------------------------------------------- */
/* *holds is 1 when the state is admissible and t < P < s. */
UQCR_API uqcr_status uqcr_verify(const uqcr_observables* obs, const uqcr_state* state,
                                 const uqcr_bounds* b, uqcr_log_base base, char** report_json,
                                 int* holds);
UQCR_API uqcr_status uqcr_entropy(const uqcr_observables* obs, const uqcr_state* state,
                                  const uqcr_bounds* b, uqcr_log_base base, char** json);
UQCR_API uqcr_status uqcr_lorenz_csv(const uqcr_bounds* b, const uqcr_state* const* states,
                                     size_t count, char** csv);
/* Complementarity bounds for the given bases plus the coherence vectors of
 * each state; `cfg` (may be NULL) drives the bound solver. */
UQCR_API uqcr_status uqcr_coherence(const uqcr_observables* bases, const uqcr_state* const* states,
                                    size_t count, size_t samples, uint64_t seed,
                                    const uqcr_solver_config* cfg, char** json);

/* Majorization on raw arrays ---------------------------------------------- */
/* Inputs need not be sorted; both must have the same total. */
UQCR_API uqcr_status uqcr_is_majorized_by(const double* a, size_t a_len, const double* b,
                                          size_t b_len, int* result);
/* out receives max(a_len, b_len) entries. */
UQCR_API uqcr_status uqcr_meet(const double* a, size_t a_len, const double* b, size_t b_len,
                               double* out, size_t capacity);
UQCR_API uqcr_status uqcr_join(const double* a, size_t a_len, const double* b, size_t b_len,
                               double* out, size_t capacity);
UQCR_API uqcr_status uqcr_shannon_entropy(const double* p, size_t len, uqcr_log_base base,
                                          double* result);

#ifdef __cplusplus
}
#endif

#endif  // UQCR_UQCR_H_
