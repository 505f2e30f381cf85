#ifndef SYSTOLIC_H
#define SYSTOLIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SystolicStatus {
  SYSTOLIC_STATUS_OK = 0,
  SYSTOLIC_STATUS_INPUT_ERROR = 1,
  SYSTOLIC_STATUS_HYPOTHESIS_FAILURE = 2,
  SYSTOLIC_STATUS_BUDGET_EXHAUSTED = 3,
  SYSTOLIC_STATUS_PARSE_ERROR = 4,
  SYSTOLIC_STATUS_DOMAIN_ERROR = 5,
  SYSTOLIC_STATUS_INTERNAL_ERROR = 6,
  SYSTOLIC_STATUS_NULL_POINTER = 7,
  // A certificate failed verification.
  SYSTOLIC_STATUS_REJECTED = 8,
  SYSTOLIC_STATUS_PANIC = 9,
} SystolicStatus;

// Opaque complex handle.
typedef struct SystolicComplex SystolicComplex;

// Verdict codes: 0 = no, 1 = yes, 2 = unknown.
typedef struct SystolicVerdicts {
  uint8_t flag;
  uint8_t locally_5_large;
  uint8_t locally_6_large;
  uint8_t sd2star;
  uint8_t sd2star_links;
  uint8_t simply_connected;
  uint8_t systolic;
  uint8_t weakly_systolic;
} SystolicVerdicts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; valid until the next call.
const char *systolic_last_error(void);

// Parses the line format (`s v1 v2 ...` per simplex).
//
// # Safety
// `text_ptr` must be a NUL-terminated string and `out` a valid pointer.
enum SystolicStatus systolic_complex_parse(const char *text_ptr, struct SystolicComplex **out);

// Builds a named complex such as `"tri_grid 5 5"` or `"cone cycle 5"`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum SystolicStatus systolic_complex_generate(const char *name, struct SystolicComplex **out);

// # Safety
// `c` must come from this library and not be freed twice; null is ignored.
void systolic_complex_free(struct SystolicComplex *c);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `c` must be null or a live handle.
uintptr_t systolic_complex_num_vertices(const struct SystolicComplex *c);

// Writes up to `cap` entries of the f-vector into `buf` and its full length
// into `len`.
//
// # Safety
// `buf` must hold `cap` entries (or be null with `cap == 0`); `len` valid.
enum SystolicStatus systolic_complex_f_vector(const struct SystolicComplex *c,
                                              uintptr_t *buf,
                                              uintptr_t cap,
                                              uintptr_t *len);

// Classifies `c` with the given Tietze effort.
//
// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum SystolicStatus systolic_classify(const struct SystolicComplex *c,
                                      uintptr_t effort,
                                      struct SystolicVerdicts *out);

// Runs the four-set Helly procedure with default budgets. On success the
// certificate `v_0..v_3` is written to `simplex` and `trivial` says whether
// all four sets share a vertex.
//
// # Safety
// `x` live, `a` points to four live handles, `simplex` holds 4 entries,
// `trivial` valid.
enum SystolicStatus systolic_helly(const struct SystolicComplex *x,
                                   const struct SystolicComplex *const *a,
                                   uint32_t *simplex,
                                   bool *trivial);

// Checks `v_i ∈ A_i` and that the `v_i` span a simplex of `x`.
//
// # Safety
// `x` live, `a` points to four live handles, `simplex` holds 4 entries.
enum SystolicStatus systolic_verify_certificate(const struct SystolicComplex *x,
                                                const struct SystolicComplex *const *a,
                                                const uint32_t *simplex);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYSTOLIC_H */
