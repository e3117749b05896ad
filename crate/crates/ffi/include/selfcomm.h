#ifndef SELFCOMM_H
#define SELFCOMM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum SelfcommStatus {
  SELFCOMM_STATUS_OK = 0,
  SELFCOMM_STATUS_NULL_POINTER = 1,
  SELFCOMM_STATUS_INVALID_ARGUMENT = 2,
  SELFCOMM_STATUS_NUMERICAL_FAILURE = 3,
  SELFCOMM_STATUS_PANIC = 4,
} SelfcommStatus;

// Opaque square complex matrix.
typedef struct SelfcommMatrix SelfcommMatrix;

// Opaque convex polygon.
typedef struct SelfcommPolygon SelfcommPolygon;

// Self-commutator norm against each estimate.
typedef struct SelfcommBoundReport {
  size_t dim;
  double comm_norm;
  double norm_sq;
  double m_sq;
  double numerical_radius;
  double width_product;
  double wang_du;
  double two_area;
  double four_over_pi_area;
  double conj1_slack;
  double conj2_slack;
  // Smallest theorem slack divided by `max(1, ‖A‖²)`.
  double min_theorem_slack;
  bool all_theorems_hold;
} SelfcommBoundReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *selfcomm_last_error(void);

// Library version as a static nul-terminated string.
const char *selfcomm_version(void);

// Builds an `n × n` matrix from row-major real and imaginary parts. `im`
// may be null for a real matrix.
//
// # Safety
// `re` (and `im` unless null) must point to `n * n` readable doubles and
// `out` must be writable.
enum SelfcommStatus selfcomm_matrix_new(size_t n,
                                        const double *re,
                                        const double *im,
                                        struct SelfcommMatrix **out);

// Releases a matrix. Null is ignored.
//
// # Safety
// `m` must come from [`selfcomm_matrix_new`] and not have been freed.
void selfcomm_matrix_free(struct SelfcommMatrix *m);

// # Safety
// `m` must be a live matrix handle and `out` writable.
enum SelfcommStatus selfcomm_matrix_dim(const struct SelfcommMatrix *m, size_t *out);

// `‖A*A − AA*‖`.
//
// # Safety
// `m` must be a live matrix handle and `out` writable.
enum SelfcommStatus selfcomm_self_commutator_norm(const struct SelfcommMatrix *m, double *out);

// Spectral norm `‖A‖`.
//
// # Safety
// `m` must be a live matrix handle and `out` writable.
enum SelfcommStatus selfcomm_operator_norm(const struct SelfcommMatrix *m, double *out);

// Numerical radius `w(A)`, scanned over `n_angles ≥ 64` directions.
//
// # Safety
// `m` must be a live matrix handle and `out` writable.
enum SelfcommStatus selfcomm_numerical_radius(const struct SelfcommMatrix *m,
                                              size_t n_angles,
                                              double *out);

// Area of the numerical range from `n_angles ≥ 8` boundary samples.
//
// # Safety
// `m` must be a live matrix handle and `out` writable.
enum SelfcommStatus selfcomm_numerical_range_area(const struct SelfcommMatrix *m,
                                                  size_t n_angles,
                                                  double *out);

// `min_t b_x(t) b_y(t)` and the minimizing angle.
//
// # Safety
// `m` must be a live matrix handle; `out_angle` and `out_value` writable.
enum SelfcommStatus selfcomm_min_width_product(const struct SelfcommMatrix *m,
                                               size_t n_angles,
                                               double *out_angle,
                                               double *out_value);

// `m(A) = inf_λ ‖A − λI‖` and the minimizing shift.
//
// # Safety
// `m` must be a live matrix handle; the out-pointers writable.
enum SelfcommStatus selfcomm_min_shift_distance(const struct SelfcommMatrix *m,
                                                double *out_re,
                                                double *out_im,
                                                double *out_distance);

// Every estimate of `‖C(A)‖`, with areas from `n_angles ≥ 8` samples.
//
// # Safety
// `m` must be a live matrix handle and `out` writable.
enum SelfcommStatus selfcomm_evaluate_bounds(const struct SelfcommMatrix *m,
                                             size_t n_angles,
                                             struct SelfcommBoundReport *out);

// Convex hull of `n_points` points given as coordinate arrays.
//
// # Safety
// `xs` and `ys` must point to `n_points` readable doubles and `out` must
// be writable.
enum SelfcommStatus selfcomm_polygon_new(size_t n_points,
                                         const double *xs,
                                         const double *ys,
                                         struct SelfcommPolygon **out);

// Releases a polygon. Null is ignored.
//
// # Safety
// `p` must come from [`selfcomm_polygon_new`] and not have been freed.
void selfcomm_polygon_free(struct SelfcommPolygon *p);

// # Safety
// `p` must be a live polygon handle and `out` writable.
enum SelfcommStatus selfcomm_polygon_area(const struct SelfcommPolygon *p, double *out);

// `min_t w(t) w(t + π/2)` and the minimizing angle.
//
// # Safety
// `p` must be a live polygon handle; `out_angle` and `out_value` writable.
enum SelfcommStatus selfcomm_polygon_min_width_product(const struct SelfcommPolygon *p,
                                                       size_t n_angles,
                                                       double *out_angle,
                                                       double *out_value);

// Minimum width product divided by area, in `[1, 2]`.
//
// # Safety
// `p` must be a live polygon handle and `out` writable.
enum SelfcommStatus selfcomm_polygon_width_ratio(const struct SelfcommPolygon *p, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SELFCOMM_H */
