/* C interface to the log-concavity verification library.
 *
 * Every function returns an lc_status. On failure the thread-local message
 * from lc_last_error() describes the problem. Strings returned through char**
 * arguments are owned by the caller and released with lc_string_free();
 * polygons with lc_polygon_free(). Rationals cross the boundary as "p/q"
 * strings; structured results as JSON text.
 */
#ifndef LOGCONCAVE_H
#define LOGCONCAVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LC_API __declspec(dllexport)
#else
#define LC_API __attribute__((visibility("default")))
#endif

typedef enum lc_status {
  LC_OK = 0,
  LC_ERR_NULL_ARGUMENT,
  LC_ERR_INVALID_ARGUMENT,
  LC_ERR_PARSE,
  LC_ERR_DEGENERATE_INPUT,
  LC_ERR_NON_POSITIVE_SCALE,
  LC_ERR_SINGULAR_MATRIX,
  LC_ERR_NOT_SYMMETRIC,
  LC_ERR_NOT_TRANSVERSAL,
  LC_ERR_NO_CROSSINGS,
  LC_ERR_ZERO_AREA,
  LC_ERR_PERTURBATION_FAILED,
  LC_ERR_NO_VALID_STRIP,
  LC_ERR_NOT_A_PARALLELOGRAM,
  LC_ERR_UNCLASSIFIED_CONFIGURATION,
  LC_ERR_NOT_EDGE_CASE,
  LC_ERR_NOT_CORNER_CASE,
  LC_ERR_OUT_OF_RANGE,
  LC_ERR_INVARIANT_VIOLATION,
  LC_ERR_INSUFFICIENT_SAMPLES,
  LC_ERR_OUTSIDE_SECTOR,
  LC_ERR_CURVATURE_VIOLATED,
  LC_ERR_NOT_CONVEX_PROFILE,
  LC_ERR_NO_VIOLATION_FOUND,
  LC_ERR_GENERATION_FAILED,
  LC_ERR_INTERNAL
} lc_status;

typedef struct lc_polygon lc_polygon;

LC_API const char* lc_version(void);
LC_API const char* lc_status_string(lc_status status);
/* Message of the last failure on this thread; empty after a success. */
LC_API const char* lc_last_error(void);
LC_API void lc_string_free(char* s);

/* Polygons. JSON: {"vertices": [["p/q", "r/s"], ...], "symmetry": "central"}. */
LC_API lc_status lc_polygon_from_json(const char* json, lc_polygon** out);
LC_API lc_status lc_polygon_to_json(const lc_polygon* p, char** json_out);
LC_API void lc_polygon_free(lc_polygon* p);
LC_API lc_status lc_polygon_area(const lc_polygon* p, char** exact_out, double* decimal_out);
/* *out is NULL when the intersection has empty interior. */
LC_API lc_status lc_polygon_intersect(const lc_polygon* a, const lc_polygon* b,
                                      lc_polygon** out);
LC_API lc_status lc_polygon_scale(const lc_polygon* p, const char* factor, lc_polygon** out);
LC_API lc_status lc_polygon_hausdorff(const lc_polygon* a, const lc_polygon* b,
                                      char** json_out);

/* Transversality and area dynamics. */
LC_API lc_status lc_check_class_f(const lc_polygon* k, const lc_polygon* l, int* in_class,
                                  char** json_out);
LC_API lc_status lc_perturb_to_f(const lc_polygon* k, const lc_polygon* l, const char* eps,
                                 lc_polygon** l_out, char** delta_out);
LC_API lc_status lc_property_b(const lc_polygon* k, const lc_polygon* l, int* holds,
                               char** json_out);
LC_API lc_status lc_midpoint_check(const lc_polygon* k, const lc_polygon* l, const char* q,
                                   const char* r, int* holds, char** json_out);
LC_API lc_status lc_midpoint_grid(const lc_polygon* k, const lc_polygon* l, size_t count,
                                  int* all_hold, char** json_out);
/* CSV "t,logf". */
LC_API lc_status lc_sample_logf(const lc_polygon* k, const lc_polygon* l, double t_min,
                                double t_max, size_t steps, char** csv_out);

/* Reduction: extended pairs and the additivity ledger; with
 * to_parallelograms also the terminal square cases. */
LC_API lc_status lc_reduce_pair(const lc_polygon* k, const lc_polygon* l,
                                int to_parallelograms, char** json_out);

/* Random pairs: pair `index` of the stream for `seed`. */
LC_API lc_status lc_random_symmetric_pair(uint64_t seed, uint64_t index, size_t vertex_budget,
                                          lc_polygon** k_out, lc_polygon** l_out);
/* Generates pair `index`, runs the derivative inequality and the 9-triple
 * midpoint grid. *violation is set when either fails. */
LC_API lc_status lc_scan_pair(uint64_t seed, uint64_t index, size_t vertex_budget,
                              int* violation, char** json_out);

/* Closed-form grids: which is "edge" or "corner". JSON lines, one per point,
 * then a summary line. */
LC_API lc_status lc_oracle_grid(const char* which, size_t density, int* all_hold,
                                char** jsonl_out);

typedef struct lc_dihedral_options {
  int n;
  const char* profile; /* "cosine", "circle" or "ellipse" */
  double eps;
  double t_min;
  double t_max;
  size_t steps;
  size_t samples;      /* quadrature intervals on the full circle */
  int allow_nonconvex; /* skip the curvature precondition */
} lc_dihedral_options;

/* K has the given profile, L is K turned by pi/n. CSV columns
 * t,f,logf,second_difference; JSON is the deviation summary. *within_tolerance
 * reports the 1e-5 route deviation, 1e-6 relative Jacobian and 1e-7 second
 * difference limits. */
LC_API lc_status lc_dihedral_verify(const lc_dihedral_options* options, int* within_tolerance,
                                    char** csv_out, char** json_out);

/* Both negative examples as JSON. */
LC_API lc_status lc_counterexamples(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* LOGCONCAVE_H */
