// Copyright 2026 The gammakit Authors
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

#ifndef GAMMAKIT_GAMMAKIT_H_
#define GAMMAKIT_GAMMAKIT_H_

/* Stable C interface to gammakit. All objects are opaque handles released
 * with their *_free function; strings returned through char** are released
 * with gk_string_free. Every function returns a gk_status; on failure the
 * message is available from gk_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GAMMAKIT_BUILDING_LIBRARY)
#define GK_API __declspec(dllexport)
#else
#define GK_API __declspec(dllimport)
#endif
#else
#define GK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gk_status {
  GK_OK = 0,
  GK_INVALID_ARGUMENT = 1,
  GK_INVALID_DIMENSION = 2,
  GK_NUMERICAL_FAILURE = 3,
  GK_DEGENERATE_COMBINATION = 4,
  GK_THEOREM_VIOLATION = 5,
  GK_PARSE_ERROR = 6,
  GK_INTERNAL = 7
} gk_status;

typedef enum gk_region {
  GK_REGION_CLOSED = 0,
  GK_REGION_OPEN = 1,
  GK_REGION_DISTINGUISHED_BOUNDARY = 2
} gk_region;

typedef enum gk_verdict {
  GK_VERDICT_EXACT = 0,
  GK_VERDICT_NECESSARY_PASSED = 1,
  GK_VERDICT_FAILED = 2
} gk_verdict;

typedef struct gk_complex {
  double re;
  double im;
} gk_complex;

typedef struct gk_grid gk_grid;
typedef struct gk_point gk_point;
typedef struct gk_tuple gk_tuple;
typedef struct gk_polynomial gk_polynomial;
typedef struct gk_decomposition gk_decomposition;

/* ---- general ---- */
GK_API const char* gk_version(void);
GK_API const char* gk_status_name(gk_status status);
GK_API const char* gk_last_error(void);
GK_API void gk_string_free(char* text);
/* Caps worker threads used by scans and sampling; 0 restores the default. */
GK_API gk_status gk_set_threads(int threads);
GK_API int gk_get_threads(void);

/* ---- alpha grids ---- */
GK_API gk_status gk_grid_standard(gk_grid** out);
/* rings radii k/rings, angles per ring, and 4*angles on the unit circle. */
GK_API gk_status gk_grid_uniform(int rings, int angles, gk_grid** out);
GK_API gk_status gk_grid_refined(const gk_grid* grid, int factor, gk_grid** out);
GK_API gk_status gk_grid_sample_count(const gk_grid* grid, size_t* out);
GK_API void gk_grid_free(gk_grid* grid);

/* ---- points ---- */
/* s holds n-1 coordinates. */
GK_API gk_status gk_point_create(int n, const gk_complex* s, gk_complex p, gk_point** out);
GK_API gk_status gk_symmetrize(int n, const gk_complex* z, gk_point** out);
GK_API gk_status gk_point_from_json(const char* json, gk_point** out);
GK_API gk_status gk_point_to_json(const gk_point* point, char** out);
GK_API void gk_point_free(gk_point* point);
GK_API int gk_point_n(const gk_point* point);
/* k in 1..n; k == n is p. */
GK_API gk_status gk_point_coordinate(const gk_point* point, int k, gk_complex* out);
/* roots must have room for n entries. */
GK_API gk_status gk_point_fiber_roots(const gk_point* point, gk_complex* roots);
GK_API gk_status gk_point_membership(const gk_point* point, gk_region region, double tol,
                                     int* inside, double* margin);
/* *applicable is 0 when |p| >= 1 and the recursion is undefined. */
GK_API gk_status gk_point_costara(const gk_point* point, double tol, int* applicable,
                                  int* inside);
GK_API gk_status gk_point_rotate(const gk_point* point, gk_complex omega, gk_point** out);
GK_API gk_status gk_point_pencil_value(const gk_point* point, int i, double* out);
GK_API gk_status gk_point_check_report(const gk_point* point, double tol, char** json);
/* Either of summary_json / csv may be NULL. */
GK_API gk_status gk_point_pencil_scan(const gk_point* point, const gk_grid* grid,
                                      double* minimum, char** summary_json, char** csv);

/* ---- operator tuples ---- */
/* s holds n-1 row-major dim x dim matrices back to back; p one more.
 * enforce_commutativity != 0 rejects non-commuting input. */
GK_API gk_status gk_tuple_create(int n, int dim, const gk_complex* s, const gk_complex* p,
                                 int enforce_commutativity, gk_tuple** out);
GK_API gk_status gk_tuple_from_json(const char* json, int enforce_commutativity,
                                    gk_tuple** out);
GK_API gk_status gk_tuple_to_json(const gk_tuple* tuple, char** out);
GK_API void gk_tuple_free(gk_tuple* tuple);
GK_API int gk_tuple_n(const gk_tuple* tuple);
GK_API int gk_tuple_dim(const gk_tuple* tuple);
/* k in 1..n, row-major into a buffer of dim*dim entries. */
GK_API gk_status gk_tuple_matrix(const gk_tuple* tuple, int k, gk_complex* out);
GK_API gk_status gk_tuple_commutativity_residual(const gk_tuple* tuple, double* out);
GK_API gk_status gk_tuple_rotate(const gk_tuple* tuple, gk_complex omega, gk_tuple** out);
/* Minimum eigenvalue of the pencil i at one alpha. */
GK_API gk_status gk_tuple_pencil_min_eig(const gk_tuple* tuple, int i, gk_complex alpha,
                                         double* out);
GK_API gk_status gk_tuple_pencil_scan(const gk_tuple* tuple, const gk_grid* grid,
                                      double* minimum, char** summary_json, char** csv);
/* points receives dim*n entries, joint point j at offset j*n. */
GK_API gk_status gk_tuple_joint_spectrum(const gk_tuple* tuple, uint64_t seed,
                                         gk_complex* points, double* residual);
GK_API gk_status gk_tuple_is_gamma_unitary(const gk_tuple* tuple, double tol, int* verdict,
                                           char** json);

typedef struct gk_certify_options {
  const gk_grid* grid; /* NULL selects the standard grid */
  double tol;
  double pencil_tol;
  double normality_tol;
  int vn_trials;
  int vn_degree;
  int vn_terms;
  int vn_samples;
  uint64_t seed;
} gk_certify_options;

GK_API void gk_certify_options_default(gk_certify_options* options);
GK_API gk_status gk_certify(const gk_tuple* tuple, const gk_certify_options* options,
                            gk_verdict* verdict, char** json);

/* ---- polynomials and the von Neumann check ---- */
GK_API gk_status gk_polynomial_create(int variables, gk_polynomial** out);
GK_API gk_status gk_polynomial_random(int variables, int max_degree, int max_terms,
                                      uint64_t seed, gk_polynomial** out);
GK_API gk_status gk_polynomial_add_term(gk_polynomial* poly, const int* exponents,
                                        gk_complex coefficient);
GK_API void gk_polynomial_free(gk_polynomial* poly);
GK_API gk_status gk_polynomial_evaluate(const gk_polynomial* poly, const gk_tuple* tuple,
                                        gk_complex* out);

typedef struct gk_vn_result {
  double operator_norm;
  double sampled_sup;
  double slack;
  int violation;
  int samples;
} gk_vn_result;

GK_API gk_status gk_vn_check(const gk_tuple* tuple, const gk_polynomial* poly,
                             int boundary_samples, uint64_t seed, gk_vn_result* out);

/* ---- decomposition ---- */
GK_API gk_status gk_is_cnu(const gk_tuple* tuple, double tol, int* out);
GK_API gk_status gk_maximal_unitary_dim(const gk_tuple* tuple, double tol, int* out);
GK_API gk_status gk_decompose(const gk_tuple* tuple, double tol, gk_decomposition** out);
GK_API void gk_decomposition_free(gk_decomposition* result);
GK_API int gk_decomposition_k(const gk_decomposition* result);
GK_API gk_status gk_decomposition_to_json(const gk_decomposition* result, char** out);
GK_API gk_status gk_decomposition_unitary_part(const gk_decomposition* result, gk_tuple** out);
GK_API gk_status gk_decomposition_cnu_part(const gk_decomposition* result, gk_tuple** out);
GK_API gk_status gk_decomposition_verify(const gk_decomposition* result, const gk_tuple* tuple,
                                         double tol, int* passed, char** json);

/* ---- generators and exploration ---- */
/* model is one of normal_interior, normal_boundary, mixed_direct_sum,
 * single_contraction_blaschke, cnu_jordan, outside_perturbed. */
GK_API gk_status gk_generate(uint64_t seed, int n, int dim, const char* model, gk_tuple** tuple,
                             char** truth_json);
GK_API gk_status gk_explore(int n, int budget, uint64_t seed, const gk_grid* grid, double tol,
                            char** json);
/* extent 0 selects n + 0.5; grid NULL selects 4 rings x 64 angles. */
GK_API gk_status gk_region_slice(const gk_point* base, int vary, double extent, int resolution,
                                 const gk_grid* grid, double tol, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* GAMMAKIT_GAMMAKIT_H_ */
