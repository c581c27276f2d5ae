#ifndef BOOLEAN_KEROV_H
#define BOOLEAN_KEROV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Observable family for [`bk_observable_json`].
 */
typedef enum BkObservableKind {
  BK_OBSERVABLE_KIND_MOMENT = 0,
  BK_OBSERVABLE_KIND_BOOLEAN = 1,
  BK_OBSERVABLE_KIND_TWISTED_BOOLEAN = 2,
  BK_OBSERVABLE_KIND_FREE = 3,
} BkObservableKind;

/**
 * Result code of every call.
 */
typedef enum BkStatus {
  BK_STATUS_OK = 0,
  BK_STATUS_NULL_POINTER = 1,
  BK_STATUS_INVALID_INPUT = 2,
  BK_STATUS_PARSE = 3,
  BK_STATUS_INVARIANT_VIOLATION = 4,
  BK_STATUS_INTERNAL = 5,
  BK_STATUS_PANIC = 6,
} BkStatus;

/**
 * Opaque integer partition.
 */
typedef struct BkPartition BkPartition;

/**
 * Opaque polynomial with rational coefficients.
 */
typedef struct BkPolynomial BkPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until
 * the next call on the same thread; do not free.
 */
const char *bk_last_error_message(void);

/**
 * Library version, a static string.
 */
const char *bk_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void bk_string_free(char *s);

/**
 * Parses "(a,b,c)", "a,b,c" or "()".
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BkStatus bk_partition_parse(const char *text, struct BkPartition **out);

/**
 * Builds a partition from `len` weakly decreasing positive parts.
 *
 * # Safety
 * `parts` must point to `len` values (or be NULL with `len == 0`).
 */
enum BkStatus bk_partition_from_parts(const uint32_t *parts, size_t len, struct BkPartition **out);

/**
 * # Safety
 * `p` must be a live partition handle or NULL.
 */
void bk_partition_free(struct BkPartition *p);

/**
 * Writes `|λ|`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_partition_size(const struct BkPartition *p, uint32_t *out);

/**
 * Writes the number of parts.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_partition_length(const struct BkPartition *p, size_t *out);

/**
 * Writes "(a,b,c)"; free with `bk_string_free`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_partition_to_string(const struct BkPartition *p, char **out);

/**
 * `P_π` in the variables `x2, x3, ...`.
 *
 * # Safety
 * `pi` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_boolean_kerov_polynomial(const struct BkPartition *pi, struct BkPolynomial **out);

/**
 * `P_(π,i)` in the variables `y0, y1, ...`, by diagram rewriting.
 *
 * # Safety
 * `pi` must be a live handle, `dots` must point to `len` values (or be
 * NULL with `len == 0`); `out` must be writable.
 */
enum BkStatus bk_reduce_alpha(const struct BkPartition *pi,
                              const uint32_t *dots,
                              size_t len,
                              struct BkPolynomial **out);

/**
 * # Safety
 * `p` must be a live polynomial handle or NULL.
 */
void bk_polynomial_free(struct BkPolynomial *p);

/**
 * Number of nonzero terms.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_polynomial_num_terms(const struct BkPolynomial *p, size_t *out);

/**
 * Weighted degree; `BK_STATUS_INVALID_INPUT` for the zero polynomial.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_polynomial_weighted_degree(const struct BkPolynomial *p, int64_t *out);

/**
 * Canonical text such as "x4 + x2^2 + x2".
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_polynomial_to_string(const struct BkPolynomial *p, char **out);

/**
 * Ordered term list `[{"coeff": .., "vars": [..]}]`; non-integer
 * coefficients are strings "p/q".
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_polynomial_to_json(const struct BkPolynomial *p, char **out);

/**
 * `[v_1, ..., v_K]` as a JSON array of exact rational strings.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_observable_json(const struct BkPartition *lambda,
                                 enum BkObservableKind kind,
                                 size_t max_k,
                                 char **out);

/**
 * `Σ_π(λ)` as a decimal string.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum BkStatus bk_normalized_character(const struct BkPartition *pi,
                                      const struct BkPartition *lambda,
                                      char **out);

/**
 * Coefficients of `B_k` in normalized characters as
 * `[{"pi": [..], "coeff": ..}]`, larger `|π|` first.
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_boolean_in_characters_json(uint32_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOOLEAN_KEROV_H */
