/* symcap: closed-form symplectic capacities of toric domains and Lagrangian
 * products, Mahler volumes of a convex-body algebra, and the verification
 * batteries that check the implemented formulas against brute-force oracles.
 *
 * All functions return SYMCAP_OK (0) on success.  On failure they return a
 * nonzero status and leave a human-readable message in symcap_last_error()
 * (thread local).  Strings returned through char** out-parameters are heap
 * allocated and must be released with symcap_string_free().
 *
 * Exponents p live in [1, inf]; pass INFINITY (math.h) for the sup norm.
 * Structured results (reports, verification records) are returned as JSON
 * text so the ABI stays flat.
 */
#ifndef SYMCAP_H
#define SYMCAP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SYMCAP_API __declspec(dllexport)
#else
#define SYMCAP_API __attribute__((visibility("default")))
#endif

typedef enum symcap_status {
  SYMCAP_OK = 0,
  SYMCAP_ERR_INVALID_ARGUMENT = 1,
  SYMCAP_ERR_PARSE = 2,
  SYMCAP_ERR_DIMENSION = 3,
  SYMCAP_ERR_DOMAIN = 4,
  SYMCAP_ERR_PRECONDITION = 5,
  SYMCAP_ERR_NO_CONVERGENCE = 6,
  SYMCAP_ERR_INTERNAL = 7
} symcap_status;

/* Opaque handles. */
typedef struct symcap_body symcap_body;
typedef struct symcap_region symcap_region;

SYMCAP_API const char* symcap_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
SYMCAP_API const char* symcap_last_error(void);

SYMCAP_API void symcap_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Construction and serialization (JSON, schema version 1).           */
/* ------------------------------------------------------------------ */

SYMCAP_API symcap_status symcap_body_from_json(const char* json,
                                               symcap_body** out);
SYMCAP_API symcap_status symcap_region_from_json(const char* json,
                                                 symcap_region** out);
SYMCAP_API symcap_status symcap_body_to_json(const symcap_body* body,
                                             char** out_json);
SYMCAP_API symcap_status symcap_region_to_json(const symcap_region* region,
                                               char** out_json);
SYMCAP_API void symcap_body_free(symcap_body* body);
SYMCAP_API void symcap_region_free(symcap_region* region);

/* Convenience constructors. */
SYMCAP_API symcap_status symcap_body_lp_ball(int dim, double p,
                                             symcap_body** out);
SYMCAP_API symcap_status symcap_body_polar(const symcap_body* body,
                                           symcap_body** out);

/* ------------------------------------------------------------------ */
/* Convex-body queries.                                                */
/* ------------------------------------------------------------------ */

SYMCAP_API symcap_status symcap_body_dim(const symcap_body* body, int* out);
SYMCAP_API symcap_status symcap_body_gauge(const symcap_body* body,
                                           const double* x, size_t n,
                                           double* out);
SYMCAP_API symcap_status symcap_body_support(const symcap_body* body,
                                             const double* v, size_t n,
                                             double* out);
SYMCAP_API symcap_status symcap_body_contains(const symcap_body* body,
                                              const double* x, size_t n,
                                              int* out);
SYMCAP_API symcap_status symcap_body_volume(const symcap_body* body,
                                            double* out);
SYMCAP_API symcap_status symcap_body_mahler(const symcap_body* body,
                                            double* out);

/* Monte Carlo volume oracle over the body's axis-aligned bounding box. */
SYMCAP_API symcap_status symcap_body_mc_volume(const symcap_body* body,
                                               long long samples,
                                               uint64_t seed, int threads,
                                               double* out_mean,
                                               double* out_std_error);

/* ------------------------------------------------------------------ */
/* Toric regions.                                                      */
/* ------------------------------------------------------------------ */

SYMCAP_API symcap_status symcap_region_dim(const symcap_region* region,
                                           int* out);
SYMCAP_API symcap_status symcap_region_volume(const symcap_region* region,
                                              double* out);
SYMCAP_API symcap_status symcap_region_classify(const symcap_region* region,
                                                int* out_convex,
                                                int* out_concave);

/* Capacity of the toric domain over a convex region.  out_report_json is
 * optional (pass NULL to skip the full report). */
SYMCAP_API symcap_status symcap_region_capacity(const symcap_region* region,
                                                double* out_value,
                                                char** out_report_json);

/* Gromov width of the toric domain over a concave region. */
SYMCAP_API symcap_status symcap_region_gromov_width(
    const symcap_region* region, double* out_value, char** out_report_json);

/* Two-sided capacity bracket for a concave region. */
SYMCAP_API symcap_status symcap_region_capacity_bounds(
    const symcap_region* region, double* out_lower, double* out_upper);

/* ------------------------------------------------------------------ */
/* Lagrangian products and the X_p family.                             */
/* ------------------------------------------------------------------ */

/* Capacity of [-1,1]^n x K for an unconditional body K. */
SYMCAP_API symcap_status symcap_cube_product_capacity(const symcap_body* body,
                                                      double* out_value,
                                                      char** out_report_json);

/* Verified chain bounding the capacity of K x polar(K) by 4. */
SYMCAP_API symcap_status symcap_selfpolar_bound(const symcap_body* body,
                                                char** out_record_json);

/* Capacity report for B_p^n x B_q^n (value 4 for every p). */
SYMCAP_API symcap_status symcap_selfpolar_lp(int n, double p,
                                             double* out_value,
                                             char** out_report_json);

/* Capacity of X_p and points of the boundary curve gamma_p. */
SYMCAP_API symcap_status symcap_xp_capacity(double p, double* out_value,
                                            char** out_report_json);
SYMCAP_API symcap_status symcap_xp_curve(double p, double v, double* out_w1,
                                         double* out_w2);

/* ------------------------------------------------------------------ */
/* Mahler volumes of l_p balls.                                        */
/* ------------------------------------------------------------------ */

SYMCAP_API symcap_status symcap_mahler_lp(int n, double p, double* out);
SYMCAP_API symcap_status symcap_mahler_phi(int n, double p, double* out);
SYMCAP_API symcap_status symcap_mahler_derivative(int n, double p,
                                                  double* out);

/* ------------------------------------------------------------------ */
/* Verification batteries.                                             */
/* ------------------------------------------------------------------ */

/* Runs a named suite ("numerics", "oracles", "bodies", "toric", "mahler",
 * "lagrangian", "acceptance", or "all") and returns the records as a JSON
 * array.  tol governs the generic checks that carry no pinned tolerance of
 * their own.  tol <= 0, mc_samples <= 0, and threads <= 0 select the
 * defaults (1e-8, 1000000, 1). */
SYMCAP_API symcap_status symcap_verify_run(const char* suite, uint64_t seed,
                                           double tol, long long mc_samples,
                                           int threads,
                                           char** out_records_json,
                                           int* out_all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYMCAP_H */
