#ifndef KPOLY_H
#define KPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum KpolyStatus {
  KPOLY_STATUS_OK = 0,
  KPOLY_STATUS_NULL_POINTER = 1,
  KPOLY_STATUS_INVALID_ARGUMENT = 2,
  KPOLY_STATUS_OVERLAP = 3,
  KPOLY_STATUS_BUDGET_EXCEEDED = 4,
  KPOLY_STATUS_OUT_OF_RANGE = 5,
  KPOLY_STATUS_BUFFER_TOO_SMALL = 6,
  KPOLY_STATUS_INTERNAL = 7,
  KPOLY_STATUS_PANIC = 8,
} KpolyStatus;

// Classes of every size `1..=n_max` for one `k`.
typedef struct KpolyEnumeration KpolyEnumeration;

// One k-polyomino.
typedef struct KpolyPolyomino KpolyPolyomino;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static, NUL-terminated description of a status code.
const char *kpoly_status_message(enum KpolyStatus status);

// Closed-form count of classes with `n` cells, for `n` in 1..=4.
//
// # Safety
// `out` must be null or valid for one write.
enum KpolyStatus kpoly_count_formula(uint32_t k, uint32_t n, uint64_t *out);

// Enumerates all classes with `1..=n_max` cells.
//
// `budget` caps candidates per level; 0 means unlimited. `workers` must be
// at least 1.
//
// # Safety
// `out` must be null or valid for one write.
enum KpolyStatus kpoly_enumerate(uint32_t k,
                                 uint32_t n_max,
                                 uint32_t workers,
                                 uint64_t budget,
                                 struct KpolyEnumeration **out);

// Number of classes with `n` cells.
//
// # Safety
// `e` must be null or a live handle; `out` must be null or writable.
enum KpolyStatus kpoly_enumeration_count(const struct KpolyEnumeration *e,
                                         uint32_t n,
                                         uint64_t *out);

// Copies out the representative at `index` among classes with `n` cells.
// Classes are ordered by canonical code.
//
// # Safety
// `e` must be null or a live handle; `out` must be null or writable.
enum KpolyStatus kpoly_enumeration_get(const struct KpolyEnumeration *e,
                                       uint32_t n,
                                       size_t index,
                                       struct KpolyPolyomino **out);

// Releases an enumeration. Null is a no-op.
//
// # Safety
// `e` must be null or a handle not yet freed.
void kpoly_enumeration_free(struct KpolyEnumeration *e);

// Grows a polyomino from the root cell. Step `i` attaches a new cell across
// slot `slots[i]` of cell `parents[i]`.
//
// # Safety
// When `steps > 0`, `parents` and `slots` must each point to `steps` values.
// `out` must be null or writable.
enum KpolyStatus kpoly_polyomino_build(uint32_t k,
                                       const size_t *parents,
                                       const uint32_t *slots,
                                       size_t steps,
                                       struct KpolyPolyomino **out);

// Number of cells.
//
// # Safety
// `p` must be null or a live handle; `out` must be null or writable.
enum KpolyStatus kpoly_polyomino_cells(const struct KpolyPolyomino *p, size_t *out);

// Number of distinct polygon edges in the union of cells.
//
// # Safety
// `p` must be null or a live handle; `out` must be null or writable.
enum KpolyStatus kpoly_polyomino_edge_count(const struct KpolyPolyomino *p, size_t *out);

// Approximate center of cell `i`, in units where adjacent centers are 1 apart.
//
// # Safety
// `p` must be null or a live handle; `x` and `y` must be null or writable.
enum KpolyStatus kpoly_polyomino_center(const struct KpolyPolyomino *p,
                                        size_t i,
                                        double *x,
                                        double *y);

// Copies the canonical code into `buf`. `len` always receives the full code
// length; when it exceeds `cap` nothing is copied and `BufferTooSmall` is
// returned, so callers may probe with `buf = NULL, cap = 0`.
//
// # Safety
// `p` must be null or a live handle; `buf` must be valid for `cap` writes
// when `cap > 0`; `len` must be null or writable.
enum KpolyStatus kpoly_polyomino_canonical_code(const struct KpolyPolyomino *p,
                                                uint16_t *buf,
                                                size_t cap,
                                                size_t *len);

// Releases a polyomino. Null is a no-op.
//
// # Safety
// `p` must be null or a handle not yet freed.
void kpoly_polyomino_free(struct KpolyPolyomino *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KPOLY_H */
