#ifndef ELASTIC_WEYL_H
#define ELASTIC_WEYL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EwBc {
  EW_BC_DIRICHLET = 0,
  EW_BC_FREE = 1,
} EwBc;

typedef enum EwStatus {
  EW_STATUS_OK = 0,
  EW_STATUS_NULL_POINTER = 1,
  EW_STATUS_INVALID_MATERIAL = 2,
  EW_STATUS_INVALID_ARGUMENT = 3,
  EW_STATUS_NUMERICAL = 4,
  EW_STATUS_INDEX_OUT_OF_RANGE = 5,
  EW_STATUS_PANIC = 6,
} EwStatus;

/**
 * Opaque material handle.
 */
typedef struct EwMaterial EwMaterial;

/**
 * Opaque counting-function handle.
 */
typedef struct EwSpectrum EwSpectrum;

typedef struct EwCoefficients {
  double a;
  double b_dir;
  double b_free;
  double a_heat;
  double b_dir_heat;
  double b_free_heat;
  double b_dir_liu;
} EwCoefficients;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ew_last_error(void);

/**
 * Creates a material. `extended != 0` only requires `lambda + mu > 0`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum EwStatus ew_material_new(double lambda,
                              double mu,
                              uint32_t dim,
                              bool extended,
                              struct EwMaterial **out);

/**
 * # Safety
 * `m` must be null or a handle from `ew_material_new` not yet freed.
 */
void ew_material_free(struct EwMaterial *m);

/**
 * # Safety
 * `m` must be a live handle, `out` valid for writes.
 */
enum EwStatus ew_material_alpha(const struct EwMaterial *m, double *out);

/**
 * Weyl coefficients by quadrature with tolerance `tol`.
 *
 * # Safety
 * `m` must be a live handle, `out` valid for writes.
 */
enum EwStatus ew_weyl_coefficients(const struct EwMaterial *m,
                                   double tol,
                                   struct EwCoefficients *out);

/**
 * Rayleigh speed ratio `gamma_R` for `alpha` in `(0, 1)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum EwStatus ew_gamma_r(double alpha, double *out);

/**
 * Spectral shift at tangential frequency `xi` and spectral parameter `lambda`.
 * `at_breakpoint` may be null.
 *
 * # Safety
 * `m` must be a live handle, `value` valid for writes, `at_breakpoint` null or valid.
 */
enum EwStatus ew_shift(const struct EwMaterial *m,
                       enum EwBc bc,
                       double xi,
                       double lambda,
                       double *value,
                       bool *at_breakpoint);

/**
 * All eigenvalues of the unit disk up to `lambda_max`; needs a 2-D material.
 *
 * # Safety
 * `m` must be a live handle, `out` valid for writes.
 */
enum EwStatus ew_spectrum_disk(const struct EwMaterial *m,
                               enum EwBc bc,
                               double lambda_max,
                               struct EwSpectrum **out);

/**
 * All eigenvalues of `T^2 x [0, h]` up to `lambda_max`; needs a 3-D material.
 *
 * # Safety
 * `m` must be a live handle, `out` valid for writes.
 */
enum EwStatus ew_spectrum_cylinder(const struct EwMaterial *m,
                                   enum EwBc bc,
                                   double h,
                                   double lambda_max,
                                   struct EwSpectrum **out);

/**
 * # Safety
 * `s` must be null or a live spectrum handle.
 */
void ew_spectrum_free(struct EwSpectrum *s);

/**
 * Number of distinct eigenvalues stored.
 *
 * # Safety
 * `s` must be a live handle, `out` valid for writes.
 */
enum EwStatus ew_spectrum_len(const struct EwSpectrum *s, size_t *out);

/**
 * The `i`-th distinct eigenvalue and its multiplicity.
 *
 * # Safety
 * `s` must be a live handle, `lambda` and `multiplicity` valid for writes.
 */
enum EwStatus ew_spectrum_get(const struct EwSpectrum *s,
                              size_t i,
                              double *lambda,
                              uint32_t *multiplicity);

/**
 * `N(lambda)`: eigenvalues strictly below `lambda`, with multiplicity.
 *
 * # Safety
 * `s` must be a live handle, `out` valid for writes.
 */
enum EwStatus ew_spectrum_count(const struct EwSpectrum *s, double lambda, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ELASTIC_WEYL_H */
