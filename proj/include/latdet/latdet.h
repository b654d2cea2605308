/* Copyright 2026 The latdet Authors
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
 * C interface of the latdet shared library.
 *
 * Objects are opaque handles created by latdet_* constructors and released
 * with the matching *_free function. Every fallible call returns a
 * latdet_status; on failure latdet_last_error() describes the problem for
 * the calling thread. Strings handed out through char** parameters are
 * owned by the caller and must be released with latdet_string_free().
 *
 * Rationals (delta, radii) are passed as text: "3/4", "0.75" or "2".
 * Passing NULL selects the default.
 */
#ifndef LATDET_LATDET_H
#define LATDET_LATDET_H

#include <stddef.h>
#include <stdint.h>

#if defined(LATDET_BUILDING_LIBRARY)
#define LATDET_API __attribute__((visibility("default")))
#else
#define LATDET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latdet_status {
  LATDET_OK = 0,
  LATDET_ERR_DIMENSION_MISMATCH = 1,
  LATDET_ERR_EMPTY_INPUT = 2,
  LATDET_ERR_DEPENDENT = 3,
  LATDET_ERR_NOT_IN_LATTICE = 4,
  LATDET_ERR_NOT_IN_SPAN = 5,
  LATDET_ERR_RANK_DEFICIENT = 6,
  LATDET_ERR_INDEX_ORDER = 7,
  LATDET_ERR_DELTA_MISMATCH = 8,
  LATDET_ERR_NOT_REDUCED = 9,
  LATDET_ERR_BUDGET_EXCEEDED = 10,
  LATDET_ERR_RANK_RETRY_EXHAUSTED = 11,
  LATDET_ERR_ZERO_VECTOR = 12,
  LATDET_ERR_PARSE = 13,
  LATDET_ERR_INVALID_ARGUMENT = 14,
  LATDET_ERR_NULL_ARGUMENT = 100,
  LATDET_ERR_INTERNAL = 101
} latdet_status;

typedef enum latdet_format {
  LATDET_FORMAT_JSON = 0,
  LATDET_FORMAT_TEXT = 1, /* lattices only: one vector per line */
  LATDET_FORMAT_CSV = 2   /* reports only */
} latdet_format;

typedef struct latdet_basis latdet_basis;
typedef struct latdet_reduction latdet_reduction;

LATDET_API const char* latdet_version(void);
LATDET_API const char* latdet_status_name(latdet_status status);
LATDET_API const char* latdet_last_error(void);
LATDET_API void latdet_string_free(char* s);

/* ---- lattices ---------------------------------------------------------- */

/* JSON lattice file or whitespace text matrix (one vector per line). */
LATDET_API latdet_status latdet_basis_parse(const char* text, latdet_basis** out);
/* rows holds n*m entries, vector after vector. */
LATDET_API latdet_status latdet_basis_from_int64(size_t n, size_t m, const int64_t* rows, latdet_basis** out);
LATDET_API void latdet_basis_free(latdet_basis* basis);
LATDET_API size_t latdet_basis_rank(const latdet_basis* basis);
LATDET_API size_t latdet_basis_dim(const latdet_basis* basis);
/* Coordinate as a decimal string. */
LATDET_API latdet_status latdet_basis_entry(const latdet_basis* basis, size_t i, size_t c, char** out);
LATDET_API latdet_status latdet_basis_write(const latdet_basis* basis, latdet_format format, char** out);
/* (det L)^2 as a decimal string. */
LATDET_API latdet_status latdet_basis_det_squared(const latdet_basis* basis, char** out);
/* {"qstar": [...], "mu": [[...]]} with exact rationals as strings. */
LATDET_API latdet_status latdet_basis_gso(const latdet_basis* basis, char** json_out);

/* ---- generators -------------------------------------------------------- */

LATDET_API latdet_status latdet_gen_random(size_t n, size_t m, uint64_t entry_bound, uint64_t seed,
                                           latdet_basis** out);
LATDET_API latdet_status latdet_gen_knapsack(const int64_t* weights, size_t count, int64_t modulus,
                                             latdet_basis** out);
LATDET_API latdet_status latdet_gen_scramble(const latdet_basis* basis, uint64_t seed, size_t steps,
                                             latdet_basis** out);

/* ---- reduction --------------------------------------------------------- */

LATDET_API latdet_status latdet_reduce(const latdet_basis* basis, const char* delta, latdet_reduction** out);
LATDET_API void latdet_reduction_free(latdet_reduction* reduction);
/* Borrowed; valid until the reduction is freed. */
LATDET_API const latdet_basis* latdet_reduction_basis(const latdet_reduction* reduction);
LATDET_API uint64_t latdet_reduction_swaps(const latdet_reduction* reduction);
LATDET_API uint64_t latdet_reduction_size_reductions(const latdet_reduction* reduction);
/* Lattice file of the reduced basis plus "transform", "swaps" and
   "size_reductions" members. */
LATDET_API latdet_status latdet_reduction_write(const latdet_reduction* reduction, char** json_out);

/* *is_reduced set to 1 or 0; violations_json may be NULL. */
LATDET_API latdet_status latdet_check_reduced(const latdet_basis* basis, const char* delta, int* is_reduced,
                                              char** violations_json);

/* ---- sublattices ------------------------------------------------------- */

/* Coordinates of the listed vectors (text or JSON) in the basis. */
LATDET_API latdet_status latdet_solve_coordinates(const latdet_basis* basis, const char* dvecs, char** json_out);
/* Staircase form of a rows x cols coefficient matrix given row-major. */
LATDET_API latdet_status latdet_staircase(const int64_t* v, size_t rows, size_t cols, char** json_out);

/* ---- bound verification ------------------------------------------------ */

typedef struct latdet_verify_options {
  size_t k;             /* 0: pick at random per sample (or j for explicit vectors) */
  size_t j;             /* 0: pick at random per sample (or the vector count) */
  uint64_t seed;
  size_t samples;       /* random d-sets when no vectors are given */
  uint64_t coeff_bound; /* coefficient range of sampled d-sets */
  const char* delta;    /* must be 3/4; NULL means 3/4 */
} latdet_verify_options;

LATDET_API void latdet_verify_options_init(latdet_verify_options* options);

/* Checks the theorem, classic, BIBD2 and LEMMA1 inequalities on a reduced
   basis. With dvecs == NULL the d-sets are sampled. *all_hold reports the
   exact verdict; the return value only reports errors. */
LATDET_API latdet_status latdet_verify(const latdet_basis* reduced, const char* dvecs,
                                       const latdet_verify_options* options, latdet_format format,
                                       char** out, int* all_hold);

/* Shortest vectors, successive minima, SUCC comparisons, the Lemma 1 bound
   and the brute-force minimum subdeterminant for k (0 means n). */
LATDET_API latdet_status latdet_oracle(const latdet_basis* basis, size_t k, const char* radius_sq,
                                       char** json_out);

/* ---- campaigns --------------------------------------------------------- */

typedef struct latdet_trial_config {
  uint64_t seed;
  size_t trials;
  const size_t* dims; /* flattened (n, m) pairs */
  size_t dims_count;  /* number of pairs */
  uint64_t entry_bound;
  size_t d_samples;
  uint64_t coeff_bound;
  const char* delta;  /* NULL means 3/4 */
  const char* checks; /* comma separated inequality names, NULL for the default set */
  size_t threads;
  const latdet_basis* lattice; /* optional fixed lattice */
} latdet_trial_config;

typedef struct latdet_trial_summary {
  size_t comparisons;
  size_t violations;
  size_t errors;
} latdet_trial_summary;

LATDET_API void latdet_trial_config_init(latdet_trial_config* config);
LATDET_API latdet_status latdet_run_trials(const latdet_trial_config* config, latdet_format format, char** out,
                                           latdet_trial_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* LATDET_LATDET_H */
