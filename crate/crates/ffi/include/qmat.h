#ifndef QMAT_H
#define QMAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum QmatStatus {
  QMAT_STATUS_OK = 0,
  QMAT_STATUS_NULL_POINTER = 1,
  QMAT_STATUS_INVALID_UTF8 = 2,
  QMAT_STATUS_SYNTAX = 3,
  QMAT_STATUS_INDEX_OUT_OF_RANGE = 4,
  QMAT_STATUS_INVALID_SHAPE = 5,
  QMAT_STATUS_WRONG_ALGEBRA = 6,
  QMAT_STATUS_ALGEBRA_MISMATCH = 7,
  QMAT_STATUS_CAP_EXCEEDED = 8,
  QMAT_STATUS_NOT_COINVARIANT = 9,
  QMAT_STATUS_INVALID_ARGUMENT = 10,
  QMAT_STATUS_INTERNAL = 11,
} QmatStatus;

/**
 * A presented algebra.
 */
typedef struct QmatAlgebra QmatAlgebra;

/**
 * An element of an algebra, in normal form.
 */
typedef struct QmatPoly QmatPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer is
 * valid until the next failing call on this thread.
 */
const char *qmat_last_error_message(void);

/**
 * Creates `O_q(M_{m,n})`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum QmatStatus qmat_algebra_new_matrix(size_t m, size_t n, struct QmatAlgebra **out);

/**
 * Creates `O_q(k^m) (x) O_q(k^n)`, with generators `y[1..m]` and `z[1..n]`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum QmatStatus qmat_algebra_new_tensor(size_t m, size_t n, struct QmatAlgebra **out);

/**
 * Releases an algebra. Polynomials created from it stay valid.
 *
 * # Safety
 * `algebra` must be null or a handle from this library not yet freed.
 */
void qmat_algebra_free(struct QmatAlgebra *algebra);

/**
 * Parses an expression such as `X[1,1]*X[2,2] - q*X[1,2]*X[2,1]`.
 *
 * # Safety
 * `algebra` must be a live handle, `text` a nul-terminated string and `out`
 * writable.
 */
enum QmatStatus qmat_poly_parse(const struct QmatAlgebra *algebra,
                                const char *text,
                                struct QmatPoly **out);

/**
 * Releases a polynomial.
 *
 * # Safety
 * `poly` must be null or a handle from this library not yet freed.
 */
void qmat_poly_free(struct QmatPoly *poly);

/**
 * The quantum determinant of a square quantum matrix algebra.
 *
 * # Safety
 * `algebra` must be a live handle and `out` writable.
 */
enum QmatStatus qmat_quantum_determinant(const struct QmatAlgebra *algebra, struct QmatPoly **out);

/**
 * `a + b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum QmatStatus qmat_poly_add(const struct QmatPoly *a,
                              const struct QmatPoly *b,
                              struct QmatPoly **out);

/**
 * `a - b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum QmatStatus qmat_poly_sub(const struct QmatPoly *a,
                              const struct QmatPoly *b,
                              struct QmatPoly **out);

/**
 * The product `a * b` in normal form.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum QmatStatus qmat_poly_mul(const struct QmatPoly *a,
                              const struct QmatPoly *b,
                              struct QmatPoly **out);

/**
 * Representative modulo the ideal of 2x2 quantum minors.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum QmatStatus qmat_poly_reduce_mod_i1(const struct QmatPoly *poly, struct QmatPoly **out);

/**
 * Image under `X[i,j] -> y[i] z[j]`.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum QmatStatus qmat_poly_theta(const struct QmatPoly *poly, struct QmatPoly **out);

/**
 * Preimage of a grading-zero element of the tensor product.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum QmatStatus qmat_poly_coinvariant_preimage(const struct QmatPoly *poly, struct QmatPoly **out);

/**
 * Writes whether `poly` is zero.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum QmatStatus qmat_poly_is_zero(const struct QmatPoly *poly, bool *out);

/**
 * Writes whether `a` and `b` are the same element of the same algebra.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum QmatStatus qmat_poly_equal(const struct QmatPoly *a, const struct QmatPoly *b, bool *out);

/**
 * Text form, parseable by [`qmat_poly_parse`].
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum QmatStatus qmat_poly_to_string(const struct QmatPoly *poly, char **out);

/**
 * JSON form: a list of `{word, coeff}` objects.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum QmatStatus qmat_poly_to_json(const struct QmatPoly *poly, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void qmat_string_free(char *s);

/**
 * Number of torus-invariant primes of `O_q(M_{m,n})` containing the 2x2
 * quantum minors.
 *
 * # Safety
 * `out` must be writable.
 */
enum QmatStatus qmat_hprime_count(size_t m, size_t n, uint64_t *out);

/**
 * Hasse diagram of those primes in DOT format.
 *
 * # Safety
 * `out` must be writable.
 */
enum QmatStatus qmat_hasse_dot(size_t m, size_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QMAT_H */
