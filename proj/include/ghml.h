/* gh-metric-lab C API.
 *
 * The library computes exact Gromov-Hausdorff distances between finite
 * metric spaces and the local-structure constructions built on them:
 * invariants, canonical partitions, ball isometries, S_n orbits and
 * experiment runners. All arithmetic is exact; rationals cross this
 * boundary as strings like "3" or "7/2", extended values may be "inf".
 *
 * Conventions:
 *   - spaces are opaque handles, freed with ghml_space_free;
 *   - strings returned through char** are owned by the caller and freed
 *     with ghml_string_free;
 *   - point indices are 1-based, matching the file formats;
 *   - every function returns GHML_OK or an error code; the message for
 *     the most recent failure on the calling thread is available via
 *     ghml_last_error.
 */
#ifndef GHML_H
#define GHML_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghml_status {
  GHML_OK = 0,
  GHML_ERR_PARSE = 1,
  GHML_ERR_NOT_SYMMETRIC = 2,
  GHML_ERR_NONZERO_DIAGONAL = 3,
  GHML_ERR_NONPOSITIVE_OFF_DIAGONAL = 4,
  GHML_ERR_TRIANGLE_VIOLATION = 5,
  GHML_ERR_SIZE_MISMATCH = 6,
  GHML_ERR_EMPTY_SUBSET = 7,
  GHML_ERR_NONPOSITIVE_SCALE = 8,
  GHML_ERR_SIZE_TOO_LARGE = 9,
  GHML_ERR_EPSILON_OUT_OF_RANGE = 10,
  GHML_ERR_NOT_IN_BALL = 11,
  GHML_ERR_PROPERTY_CHECK_FAILED = 12,
  GHML_ERR_NOT_BLOCK_STRUCTURED = 13,
  GHML_ERR_PSI_NOT_IDENTITY = 14,
  GHML_ERR_NOT_A_PERMUTATION = 15,
  GHML_ERR_NOT_GENERAL_POSITION = 16,
  GHML_ERR_METRIC_VIOLATION = 17,
  GHML_ERR_INVALID_CLUSTER_SPEC = 18,
  GHML_ERR_GENERATION_FAILED = 19,
  GHML_ERR_WITNESS_CONSTRUCTION_FAILED = 20,
  GHML_ERR_NOT_IN_CONE = 21,
  GHML_ERR_INVALID_ARGUMENT = 22,
  GHML_ERR_INTERNAL = 23
} ghml_status;

typedef struct ghml_space ghml_space;

/* Stable name of a status code, e.g. "TriangleViolation". */
const char* ghml_status_name(ghml_status status);

/* Message of the most recent error on this thread; empty string if none. */
const char* ghml_last_error(void);

void ghml_string_free(char* text);

/* ---- spaces ------------------------------------------------------- */

/* Parse and validate {"n": ..., "d": [[...]]}; errors name the first
 * violated metric axiom and its witness indices. */
ghml_status ghml_space_from_json(const char* text, ghml_space** out);

/* Parse and validate n lines of n comma-separated rational strings. */
ghml_status ghml_space_from_csv(const char* text, ghml_space** out);

void ghml_space_free(ghml_space* space);

int ghml_space_point_count(const ghml_space* space);

ghml_status ghml_space_to_json(const ghml_space* space, char** out);

/* Distance between points i and j (1-based). */
ghml_status ghml_space_distance(const ghml_space* space, int i, int j, char** out);

ghml_status ghml_space_scale(const ghml_space* space, const char* lambda, ghml_space** out);

/* tau has one entry per point; point i is renumbered tau[i-1] (1-based). */
ghml_status ghml_space_permute(const ghml_space* space, const int* tau, int n, ghml_space** out);

ghml_status ghml_space_diameter(const ghml_space* space, char** out);

/* {"s": ..., "e": ..., "t": ..., "delta": ...}, values "p/q" or "inf". */
ghml_status ghml_invariants(const ghml_space* space, char** json_out);

ghml_status ghml_is_general_position(const ghml_space* space, int* out);

/* Min and max of d(a, b) over the two index sets (1-based, nonempty). */
ghml_status ghml_set_distances(const ghml_space* space, const int* a, int a_len, const int* b,
                               int b_len, char** low, char** high);

ghml_status ghml_hausdorff_distance(const ghml_space* space, const int* a, int a_len,
                                    const int* b, int b_len, char** out);

/* ---- Gromov-Hausdorff --------------------------------------------- */

/* {"distance": "p/q"}; with all_optimal != 0 the result also carries the
 * optimal correspondences as 1-based pair lists, a completeness flag and
 * the node count of the search. */
ghml_status ghml_gh_distance(const ghml_space* x, const ghml_space* y, int all_optimal,
                             char** json_out);

/* found gets 0 or 1; when found and bijection is non-NULL, bijection[k]
 * receives the 1-based image of point k+1 (n entries). */
ghml_status ghml_is_isometric(const ghml_space* x, const ghml_space* y, int* found,
                              int* bijection);

/* ---- local structure ---------------------------------------------- */

/* min{s/4, e/4, t/3} over both centers; "inf" for one-point centers. */
ghml_status ghml_epsilon_bound(const ghml_space* m, const ghml_space* n, char** out);

/* {"labels": [...]}: 1-based block label per point of x. */
ghml_status ghml_canonical_partition(const ghml_space* m, const ghml_space* x,
                                     const char* epsilon, char** json_out);

/* The ball isometry D_{M,N,epsilon} applied to x; epsilon NULL means the
 * admissible bound (1 for one-point centers). */
ghml_status ghml_remap(const ghml_space* m, const ghml_space* n, const ghml_space* x,
                       const char* epsilon, ghml_space** out);

/* ---- generators and experiments ----------------------------------- */

ghml_status ghml_gen_general_position(uint64_t seed, int n, const char* scale_hint,
                                      ghml_space** out);

/* epsilon NULL means s(M)/2 (1 for a one-point reference). */
ghml_status ghml_gen_in_ball(uint64_t seed, const ghml_space* m, const char* epsilon,
                             const int* cluster_sizes, int k, ghml_space** out);

/* Config JSON: {"seed": 1, "n": 3, "trials": 50, "cluster_size_max": 2,
 * "epsilon_fraction": "1", "max_total_points": 8}; missing keys default.
 * The report is deterministic in the config. aggregate_pass may be NULL. */
ghml_status ghml_run_isometry_experiment(const char* config_json, char** report_json,
                                         int* aggregate_pass);
ghml_status ghml_run_sn_experiment(const char* config_json, char** report_json,
                                   int* aggregate_pass);
ghml_status ghml_run_cone_experiment(const char* config_json, char** report_json,
                                     int* aggregate_pass);

/* The n! ball self-isometries of U_epsilon(m) with the witness distinctness
 * certificate; epsilon NULL means the admissible bound. */
ghml_status ghml_sn_orbit(const ghml_space* m, const char* epsilon, char** report_json,
                          int* all_distinct);

#ifdef __cplusplus
}
#endif

#endif /* GHML_H */
