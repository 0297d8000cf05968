/* C ABI for the pdtrank library. See include/pdtrank.h docs on each function. */

#ifndef PDTRANK_H
#define PDTRANK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible function.
typedef enum PdtrankStatus {
  // Success.
  PDTRANK_STATUS_OK = 0,
  // A required pointer argument was null.
  PDTRANK_STATUS_NULL_ARGUMENT = 1,
  // An argument was out of range or not a valid enum value.
  PDTRANK_STATUS_INVALID_ARGUMENT = 2,
  // Text input was not valid UTF-8 or did not parse.
  PDTRANK_STATUS_PARSE_FAILED = 3,
  // The result does not fit the requested integer width.
  PDTRANK_STATUS_OVERFLOW = 4,
  // The supplied buffer is too small; `required` holds the needed size.
  PDTRANK_STATUS_BUFFER_TOO_SMALL = 5,
} PdtrankStatus;

// Class labels of the modified-rank construction.
typedef enum PdtrankClass {
  PDTRANK_CLASS_A1 = 0,
  PDTRANK_CLASS_A2 = 1,
  PDTRANK_CLASS_A3 = 2,
  PDTRANK_CLASS_A4 = 3,
  PDTRANK_CLASS_A5 = 4,
  PDTRANK_CLASS_B1 = 5,
  PDTRANK_CLASS_B2 = 6,
  PDTRANK_CLASS_B3 = 7,
  PDTRANK_CLASS_B4 = 8,
  PDTRANK_CLASS_B5 = 9,
  PDTRANK_CLASS_NEITHER = 10,
} PdtrankClass;

// Selector for [`pdtrank_series_new`].
typedef enum PdtrankSeriesKind {
  // Generating function of PD_t(n).
  PDTRANK_SERIES_KIND_PDT = 0,
  // Eta-quotient prefactor; coefficients match PD(n).
  PDTRANK_SERIES_KIND_PD_PREFACTOR = 1,
  // The Lambert-type sum.
  PDTRANK_SERIES_KIND_LAMBERT = 2,
  // The alternating theta series.
  PDTRANK_SERIES_KIND_THETA = 3,
  // The 3-dissection combination G.
  PDTRANK_SERIES_KIND_DISSECTION_G = 4,
} PdtrankSeriesKind;

// Opaque handle to a partition with overline designated summands.
typedef struct PdtrankOverline PdtrankOverline;

// Opaque handle to a truncated integer series.
typedef struct PdtrankSeries PdtrankSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string; do not free.
const char *pdtrank_version(void);

// `PD(n)` by enumeration. Exponential in n; fails with `Overflow` if the
// count exceeds 64 bits.
// # Safety
// `out` must be null or valid for writing a u64.
enum PdtrankStatus pdtrank_pd_count(uint32_t n, uint64_t *out);

// `PD_t(n)` by enumeration. Exponential in n; fails with `Overflow` if the
// count exceeds 64 bits.
// # Safety
// `out` must be null or valid for writing a u64.
enum PdtrankStatus pdtrank_pdt_count(uint32_t n, uint64_t *out);

// Crank of an ordinary partition given in `a+b+c` text form (`-` for the
// empty partition).
// # Safety
// `text` must be null or a NUL-terminated string; `out` null or valid for writing.
enum PdtrankStatus pdtrank_crank(const char *text, int64_t *out);

// Parses the overline text form (for example `~2'+2+1'`) into a handle.
// # Safety
// `text` must be null or a NUL-terminated string; `out` null or valid for writing.
enum PdtrankStatus pdtrank_overline_parse(const char *text, struct PdtrankOverline **out);

// Frees a handle returned by [`pdtrank_overline_parse`]. Null is a no-op.
// # Safety
// `p` must be null or a handle from [`pdtrank_overline_parse`] not yet freed.
void pdtrank_overline_free(struct PdtrankOverline *p);

// Canonical text form of the object.
// # Safety
// `p` must be null or a live handle; `buf` must have capacity `cap`; `required` null or valid for writing.
enum PdtrankStatus pdtrank_overline_format(const struct PdtrankOverline *p,
                                           char *buf,
                                           size_t cap,
                                           size_t *required);

// Weight (sum of parts) of the object.
// # Safety
// `p` must be null or a live handle; `out` null or valid for writing.
enum PdtrankStatus pdtrank_overline_weight(const struct PdtrankOverline *p, uint64_t *out);

// The pdt-rank. On the exceptional objects (split beta = (1)) sets
// `*exceptional` to true and `*rank` to 0; otherwise `*exceptional` is
// false and `*rank` holds the rank.
// # Safety
// `p` must be null or a live handle; `rank` and `exceptional` null or valid for writing.
enum PdtrankStatus pdtrank_overline_rank(const struct PdtrankOverline *p,
                                         int64_t *rank,
                                         bool *exceptional);

// The modified pdt-rank (total-valued).
// # Safety
// `p` must be null or a live handle; `out` null or valid for writing.
enum PdtrankStatus pdtrank_overline_modified_rank(const struct PdtrankOverline *p, int64_t *out);

// A/B class of the object.
// # Safety
// `p` must be null or a live handle; `out` null or valid for writing.
enum PdtrankStatus pdtrank_overline_class(const struct PdtrankOverline *p, enum PdtrankClass *out);

// The split of the object, rendered as `alpha=..., beta=..., t=...`.
// # Safety
// `p` must be null or a live handle; `buf` must have capacity `cap`; `required` null or valid for writing.
enum PdtrankStatus pdtrank_overline_delta(const struct PdtrankOverline *p,
                                          char *buf,
                                          size_t cap,
                                          size_t *required);

// Expands a named series to the given precision (coefficients 0..=terms).
// # Safety
// `out` must be null or valid for writing a pointer.
enum PdtrankStatus pdtrank_series_new(enum PdtrankSeriesKind kind,
                                      uint32_t terms,
                                      struct PdtrankSeries **out);

// Frees a handle returned by [`pdtrank_series_new`]. Null is a no-op.
// # Safety
// `s` must be null or a handle from [`pdtrank_series_new`] not yet freed.
void pdtrank_series_free(struct PdtrankSeries *s);

// Largest exponent the series stores.
// # Safety
// `s` must be null or a live handle; `out` null or valid for writing.
enum PdtrankStatus pdtrank_series_precision(const struct PdtrankSeries *s, uint32_t *out);

// Coefficient of q^n as a 64-bit integer; `Overflow` if it does not fit,
// `InvalidArgument` if n exceeds the precision.
// # Safety
// `s` must be null or a live handle; `out` null or valid for writing.
enum PdtrankStatus pdtrank_series_coeff_i64(const struct PdtrankSeries *s,
                                            uint32_t n,
                                            int64_t *out);

// Coefficient of q^n as a decimal string (exact at any size).
// # Safety
// `s` must be null or a live handle; `buf` must have capacity `cap`; `required` null or valid for writing.
enum PdtrankStatus pdtrank_series_coeff_str(const struct PdtrankSeries *s,
                                            uint32_t n,
                                            char *buf,
                                            size_t cap,
                                            size_t *required);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PDTRANK_H */
