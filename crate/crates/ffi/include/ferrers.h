#ifndef FERRERS_H
#define FERRERS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  FERRERS_STATUS_T_OK = 0,
  /**
   * A required pointer argument was null.
   */
  FERRERS_STATUS_T_NULL_POINTER = 1,
  /**
   * The part sequence does not form a valid partition for the operation.
   */
  FERRERS_STATUS_T_INVALID_PARTITION = 2,
  /**
   * An argument is outside the supported domain.
   */
  FERRERS_STATUS_T_INVALID_ARGUMENT = 3,
  /**
   * An index is out of range or a value does not fit the requested width.
   */
  FERRERS_STATUS_T_OUT_OF_RANGE = 4,
  /**
   * The search completed without a result.
   */
  FERRERS_STATUS_T_NOT_FOUND = 5,
  /**
   * An internal cross-check failed; indicates a library bug.
   */
  FERRERS_STATUS_T_VERIFICATION_FAILED = 6,
} ferrers_status_t;

/**
 * Computation route for the rank generating function.
 */
typedef enum {
  /**
   * Subset expansion, the default.
   */
  FERRERS_METHOD_T_FORMULA = 0,
  /**
   * Largest-part recursion with memoization.
   */
  FERRERS_METHOD_T_RECURSION = 1,
  /**
   * First-part-bounded dynamic program (weight 1 only).
   */
  FERRERS_METHOD_T_DP = 2,
} ferrers_method_t;

/**
 * Opaque partition handle.
 */
typedef struct ferrers_partition_t ferrers_partition_t;

/**
 * Opaque coefficient-sequence handle.
 */
typedef struct ferrers_series_t ferrers_series_t;

/**
 * Verdict on a coefficient sequence.
 */
typedef struct {
  bool unimodal;
  /**
   * Smallest index attaining the maximum coefficient.
   */
  uint64_t peak_index;
  /**
   * Smallest index with strictly larger coefficients on both sides,
   * or -1 when the sequence is unimodal.
   */
  int64_t first_dip_index;
} ferrers_unimodality_t;

/**
 * A verified nonunimodal 4-part witness.
 */
typedef struct {
  uint32_t lambda[4];
  /**
   * 12-divisible base index; the dip sits at `n_base + 1`.
   */
  uint64_t n_base;
  uint64_t m;
  uint64_t ell;
  uint64_t n;
  /**
   * Coefficient of the difference series at `n_base + 1` (negative).
   */
  int64_t f;
  /**
   * Coefficient of the difference series at `n_base + 2` (positive).
   */
  int64_t g;
} ferrers_witness4_t;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static null-terminated string; never freed.
 */
const char *ferrers_version(void);

/**
 * Static human-readable description of a status code; never freed.
 */
const char *ferrers_status_message(ferrers_status_t status);

/**
 * Builds a partition from `len` weakly decreasing nonnegative parts
 * (trailing zeros are stripped). `parts` may be null only when `len` is 0.
 *
 * # Safety
 * `parts` must point to `len` readable `uint32_t` values and `out` must be
 * a valid pointer.
 */
ferrers_status_t ferrers_partition_new(const uint32_t *parts,
                                       size_t len,
                                       ferrers_partition_t **out);

/**
 * Releases a partition handle; null is ignored.
 *
 * # Safety
 * `p` must have come from this library and not been freed before.
 */
void ferrers_partition_free(ferrers_partition_t *p);

/**
 * Number of parts; 0 for null.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
size_t ferrers_partition_len(const ferrers_partition_t *p);

/**
 * Sum of the parts; 0 for null.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
uint64_t ferrers_partition_size(const ferrers_partition_t *p);

/**
 * The `k`-th part, 1-indexed from the largest.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
ferrers_status_t ferrers_partition_part(const ferrers_partition_t *p, size_t k, uint32_t *out);

/**
 * Writes whether the diagram of `mu` fits inside the diagram of `lambda`.
 *
 * # Safety
 * All pointers must be valid.
 */
ferrers_status_t ferrers_partition_contains(const ferrers_partition_t *lambda,
                                            const ferrers_partition_t *mu,
                                            bool *out);

/**
 * Builds the conjugate (transposed diagram) partition.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
ferrers_status_t ferrers_partition_conjugate(const ferrers_partition_t *p,
                                             ferrers_partition_t **out);

/**
 * Computes the weighted rank generating function. `truncate` of -1 means
 * the full degree; other negative values are rejected. The partition must
 * have fewer than 64 parts and `weight` must be at least 1; `Dp` supports
 * weight 1 only.
 *
 * # Safety
 * `lambda` and `out` must be valid pointers.
 */
ferrers_status_t ferrers_rank_gf(const ferrers_partition_t *lambda,
                                 uint32_t weight,
                                 int64_t truncate,
                                 ferrers_method_t method,
                                 ferrers_series_t **out);

/**
 * Computes the distinct-parts generating function for a strictly
 * decreasing partition. `truncate` of -1 means the full degree.
 *
 * # Safety
 * `lambda` and `out` must be valid pointers.
 */
ferrers_status_t ferrers_distinct_rank_gf(const ferrers_partition_t *lambda,
                                          int64_t truncate,
                                          ferrers_series_t **out);

/**
 * Releases a series handle; null is ignored.
 *
 * # Safety
 * `s` must have come from this library and not been freed before.
 */
void ferrers_series_free(ferrers_series_t *s);

/**
 * Number of stored coefficients (truncation + 1); 0 for null.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
size_t ferrers_series_len(const ferrers_series_t *s);

/**
 * Reads one coefficient as a signed 64-bit integer; `OutOfRange` when the
 * index exceeds the truncation or the value does not fit.
 *
 * # Safety
 * `s` and `out` must be valid pointers.
 */
ferrers_status_t ferrers_series_coeff_i64(const ferrers_series_t *s, size_t index, int64_t *out);

/**
 * Reads one coefficient as a decimal string; release it with
 * `ferrers_string_free`.
 *
 * # Safety
 * `s` and `out` must be valid pointers.
 */
ferrers_status_t ferrers_series_coeff_decimal(const ferrers_series_t *s, size_t index, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must have come from this library and not been freed before.
 */
void ferrers_string_free(char *s);

/**
 * Classifies a coefficient sequence as unimodal or not.
 *
 * # Safety
 * `s` and `out` must be valid pointers.
 */
ferrers_status_t ferrers_unimodality(const ferrers_series_t *s, ferrers_unimodality_t *out);

/**
 * Searches the 4-part quadratic witness family at the given `m` (at least
 * 1). `NotFound` when no witness exists there; on success the witness has
 * already been re-verified against the truncated series.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
ferrers_status_t ferrers_find_witness4(uint64_t m, ferrers_witness4_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FERRERS_H */
