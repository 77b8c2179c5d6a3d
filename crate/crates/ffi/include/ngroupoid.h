#ifndef NGROUPOID_H
#define NGROUPOID_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum NgStatus {
  NG_STATUS_OK = 0,
  NG_STATUS_NULL_POINTER = 1,
  NG_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON or a document that fails validation.
   */
  NG_STATUS_INVALID_INPUT = 3,
  /**
   * Dimension, face dimension or axis out of range.
   */
  NG_STATUS_OUT_OF_RANGE = 4,
  NG_STATUS_SINGULAR = 5,
  /**
   * Facets or arrow endpoints do not match.
   */
  NG_STATUS_NOT_COMPOSABLE = 6,
  /**
   * Some constituent has no arrow for a required edge.
   */
  NG_STATUS_CONSTRUCTION_HALTED = 7,
  /**
   * A weight is not an arrow of its constituent.
   */
  NG_STATUS_NOT_MEMBER = 8,
  NG_STATUS_PANIC = 9,
} NgStatus;

/**
 * Opaque mixture handle.
 */
typedef struct NgMixture NgMixture;

/**
 * Opaque objective skeleton handle.
 */
typedef struct NgSkeleton NgSkeleton;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next library call on the same thread.
 */
const char *ng_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void ng_string_free(char *s);

/**
 * Number of `h`-faces of the `n`-cube, `2^(n-h) * C(n, h)` for `0 <= h < n`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum NgStatus ng_count_faces(size_t n, size_t h, uint64_t *out);

/**
 * # Safety
 * `json` must be a nul-terminated string; `out` must be valid for writes.
 */
enum NgStatus ng_mixture_from_json(const char *json, struct NgMixture **out);

/**
 * # Safety
 * `m` must be null or a handle from this library that was not yet freed.
 */
void ng_mixture_free(struct NgMixture *m);

/**
 * Number of constituents, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live mixture handle.
 */
size_t ng_mixture_n(const struct NgMixture *m);

/**
 * # Safety
 * `json` must be a nul-terminated string; `out` must be valid for writes.
 */
enum NgStatus ng_skeleton_from_json(const char *json, struct NgSkeleton **out);

/**
 * Serializes a skeleton; free the result with [`ng_string_free`].
 *
 * # Safety
 * `s` must be a live skeleton handle; `out` must be valid for writes.
 */
enum NgStatus ng_skeleton_to_json(const struct NgSkeleton *s, char **out);

/**
 * # Safety
 * `s` must be null or a handle from this library that was not yet freed.
 */
void ng_skeleton_free(struct NgSkeleton *s);

/**
 * Dimension of a skeleton, or 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live skeleton handle.
 */
size_t ng_skeleton_n(const struct NgSkeleton *s);

/**
 * Seeded random skeleton on raw labels. Conservative unless `perturbed`,
 * in which case one edge weight is multiplied by `diag(2, 1, 1)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum NgStatus ng_skeleton_generate(size_t n,
                                   uint64_t seed,
                                   bool perturbed,
                                   struct NgSkeleton **out);

/**
 * Seeded conservative skeleton whose weights are arrows of the mixture.
 *
 * # Safety
 * `m` must be a live mixture handle; `out` must be valid for writes.
 */
enum NgStatus ng_skeleton_generate_in(const struct NgMixture *m,
                                      uint64_t seed,
                                      struct NgSkeleton **out);

/**
 * Checks that every axis-`I` weight is an arrow of the `I`-th constituent.
 *
 * # Safety
 * `s` and `m` must be live handles.
 */
enum NgStatus ng_skeleton_validate(const struct NgSkeleton *s, const struct NgMixture *m);

/**
 * Composite along `axis` (1-based): `second` is traversed first, so its
 * target facet must equal the source facet of `first`.
 *
 * # Safety
 * `first` and `second` must be live handles; `out` must be valid for writes.
 */
enum NgStatus ng_skeleton_compose(const struct NgSkeleton *first,
                                  const struct NgSkeleton *second,
                                  size_t axis,
                                  double tol,
                                  struct NgSkeleton **out);

/**
 * Conservativity decided from 2-face commutativity.
 *
 * # Safety
 * `s` must be a live handle; `out` must be valid for writes.
 */
enum NgStatus ng_check_conservative(const struct NgSkeleton *s, double tol, bool *out);

/**
 * Conservativity decided by the spanning-tree potential.
 *
 * # Safety
 * `s` must be a live handle; `out` must be valid for writes.
 */
enum NgStatus ng_oracle_conservative(const struct NgSkeleton *s, double tol, bool *out);

/**
 * JSON report of the 2-face check with failing faces as witnesses; free
 * the result with [`ng_string_free`].
 *
 * # Safety
 * `s` must be a live handle; `out` must be valid for writes.
 */
enum NgStatus ng_conservativity_report_json(const struct NgSkeleton *s, double tol, char **out);

/**
 * Whether the core groupoid of the mixture is transitive.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum NgStatus ng_mixture_is_uniform(const struct NgMixture *m, bool *out);

/**
 * JSON uniformity report listing the misaligned pairs; free the result
 * with [`ng_string_free`].
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum NgStatus ng_uniformity_report_json(const struct NgMixture *m, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NGROUPOID_H */
