#ifndef JACKALG_H
#define JACKALG_H

#pragma once

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum JkBasis {
  JK_BASIS_MONOMIAL = 0,
  JK_BASIS_POWER_SUM = 1,
  JK_BASIS_ELEMENTARY = 2,
  JK_BASIS_COMPLETE = 3,
  JK_BASIS_JACK = 4,
} JkBasis;

typedef enum JkConvention {
  JK_CONVENTION_FLAT = 0,
  JK_CONVENTION_NATURAL = 1,
} JkConvention;

typedef enum JkShiftedMethod {
  JK_SHIFTED_METHOD_BRANCHING = 0,
  JK_SHIFTED_METHOD_VANISHING = 1,
  JK_SHIFTED_METHOD_TABLEAU = 2,
} JkShiftedMethod;

typedef enum JkStatus {
  JK_STATUS_OK = 0,
  JK_STATUS_NULL_POINTER = 1,
  JK_STATUS_INVALID_INPUT = 2,
  JK_STATUS_NOT_IN_FAT_HOOK = 3,
  JK_STATUS_TOO_FEW_VARIABLES = 4,
  JK_STATUS_NON_GENERIC_THETA = 5,
  JK_STATUS_NOT_IN_ALGEBRA = 6,
  JK_STATUS_INTERNAL = 7,
  JK_STATUS_PANIC = 8,
} JkStatus;

/**
 * Polynomial in finitely many variables with coefficients in Q(θ).
 */
typedef struct JkPoly JkPoly;

/**
 * Symmetric function with coefficients in Q(θ).
 */
typedef struct JkSymFn JkSymFn;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or NULL. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *jk_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from a `jk_*_to_string` call or be NULL.
 */
void jk_string_free(char *s);

/**
 * Jack polynomial P_λ in the Jack basis.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be writable.
 */
enum JkStatus jk_jack(const size_t *parts, size_t len, struct JkSymFn **out);

/**
 * Re-expands `f` in another basis.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum JkStatus jk_symfn_convert(const struct JkSymFn *f, enum JkBasis basis, struct JkSymFn **out);

/**
 * Sets θ = num/den.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum JkStatus jk_symfn_specialize(const struct JkSymFn *f,
                                  int64_t num,
                                  int64_t den,
                                  struct JkSymFn **out);

/**
 * Restricts `f` to the variables x1..xn.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum JkStatus jk_symfn_expand(const struct JkSymFn *f, size_t n, struct JkPoly **out);

/**
 * # Safety
 * `f` must be a live handle or NULL.
 */
char *jk_symfn_to_string(const struct JkSymFn *f);

/**
 * # Safety
 * `f` must come from this library or be NULL, and not be used afterwards.
 */
void jk_symfn_free(struct JkSymFn *f);

/**
 * Shifted Jack polynomial P*_λ in z1..zn.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be writable.
 */
enum JkStatus jk_shifted_jack(const size_t *parts,
                              size_t len,
                              size_t n,
                              enum JkShiftedMethod method,
                              struct JkPoly **out);

/**
 * Super-Jack polynomial SP_λ in x1..xn, y1..ym.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be writable.
 */
enum JkStatus jk_superjack(const size_t *parts,
                           size_t len,
                           size_t n,
                           size_t m,
                           struct JkPoly **out);

/**
 * Shifted super-Jack polynomial; fails with `NotInFatHook` outside the (n,m)-hook.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be writable.
 */
enum JkStatus jk_shifted_superjack(const size_t *parts,
                                   size_t len,
                                   size_t n,
                                   size_t m,
                                   enum JkConvention convention,
                                   struct JkPoly **out);

/**
 * # Safety
 * `p` must be a live handle or NULL.
 */
size_t jk_poly_nvars(const struct JkPoly *p);

/**
 * Returns 1 if equal, 0 if not, -1 on a NULL argument.
 *
 * # Safety
 * `a` and `b` must be live handles or NULL.
 */
int32_t jk_poly_equal(const struct JkPoly *a, const struct JkPoly *b);

/**
 * # Safety
 * `p` must be a live handle or NULL.
 */
char *jk_poly_to_string(const struct JkPoly *p);

/**
 * # Safety
 * `p` must come from this library or be NULL, and not be used afterwards.
 */
void jk_poly_free(struct JkPoly *p);

/**
 * Parses a partition such as `"3,1,1"`, writing its parts to `buf` (capacity
 * `cap`) and the length to `len`.
 *
 * # Safety
 * `s` must be a NUL-terminated string; `buf` must have room for `cap` values.
 */
enum JkStatus jk_parse_partition(const char *s, size_t *buf, size_t cap, size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JACKALG_H */
