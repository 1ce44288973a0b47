#ifndef SU2BRANCH_H
#define SU2BRANCH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Su2Status {
  SU2_STATUS_OK = 0,
  SU2_STATUS_NULL_POINTER = 1,
  /**
   * Bad type string, excluded rank, or node out of range.
   */
  SU2_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The caller's buffer is too short; the required length was written.
   */
  SU2_STATUS_BUFFER_TOO_SMALL = 3,
  /**
   * An internal consistency check failed.
   */
  SU2_STATUS_INTERNAL = 4,
  SU2_STATUS_PANIC = 5,
} Su2Status;

/**
 * Opaque handle.
 */
typedef struct Su2Branching Su2Branching;

typedef struct Su2Params {
  size_t a;
  size_t b;
  size_t h;
  size_t g;
  /**
   * Extended index of the special node.
   */
  size_t special_node;
  size_t order_f;
  size_t order_fstar;
} Su2Params;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or `""`.
 * The pointer stays valid until the next call into this library.
 */
const char *su2_last_error(void);

/**
 * Node numbering convention tag, a static string.
 */
const char *su2_convention(void);

/**
 * Builds the branching data for a type such as `"E8"` or `"D5"`.
 *
 * # Safety
 * `type_name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum Su2Status su2_branching_open(const char *type_name, struct Su2Branching **out);

/**
 * # Safety
 * `h` must come from [`su2_branching_open`] and not be used afterwards.
 */
void su2_branching_free(struct Su2Branching *h);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum Su2Status su2_branching_rank(const struct Su2Branching *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum Su2Status su2_branching_params(const struct Su2Branching *h, struct Su2Params *out);

/**
 * Resolves a `(mark, distance)` label to an extended node index.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum Su2Status su2_branching_find_node(const struct Su2Branching *h,
                                       int64_t mark,
                                       size_t distance,
                                       size_t *out);

/**
 * Coefficients of `z_node(t)`, lowest degree first. `*len` receives the
 * number of coefficients even when the buffer is too small.
 *
 * # Safety
 * `buf` must be writable for `cap` values; `len` may be null.
 */
enum Su2Status su2_branching_zpoly(const struct Su2Branching *h,
                                   size_t node,
                                   int64_t *buf,
                                   size_t cap,
                                   size_t *len);

/**
 * `m_{0,node}, …, m_{order,node}`; needs `cap >= order + 1`.
 *
 * # Safety
 * `buf` must be writable for `cap` values; `len` may be null.
 */
enum Su2Status su2_branching_series(const struct Su2Branching *h,
                                    size_t node,
                                    size_t order,
                                    int64_t *buf,
                                    size_t cap,
                                    size_t *len);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum Su2Status su2_branching_multiplicity(const struct Su2Branching *h,
                                          size_t n,
                                          size_t node,
                                          int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SU2BRANCH_H */
