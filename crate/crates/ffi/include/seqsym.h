#ifndef SEQSYM_H
#define SEQSYM_H

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result code of every fallible call.
 */
typedef enum {
  SEQSYM_STATUS_OK = 0,
  SEQSYM_STATUS_NULL_POINTER = 1,
  SEQSYM_STATUS_INVALID_ARGUMENT = 2,
  SEQSYM_STATUS_MODULUS_MISMATCH = 3,
  SEQSYM_STATUS_EVEN_MODULUS = 4,
  SEQSYM_STATUS_NOT_COPRIME = 5,
  SEQSYM_STATUS_ODD_SIDE = 6,
  SEQSYM_STATUS_NOT_PRIME = 7,
  SEQSYM_STATUS_PARSE = 8,
  SEQSYM_STATUS_OUT_OF_RANGE = 9,
  SEQSYM_STATUS_UNSUPPORTED = 10,
  SEQSYM_STATUS_PANIC = 11,
} SeqsymStatus;

typedef enum {
  SEQSYM_ELEMENT_IDENTITY = 0,
  SEQSYM_ELEMENT_RHO = 1,
  SEQSYM_ELEMENT_RHO2 = 2,
  SEQSYM_ELEMENT_RHO3 = 3,
  SEQSYM_ELEMENT_TAU = 4,
  SEQSYM_ELEMENT_TAU_RHO = 5,
  SEQSYM_ELEMENT_TAU_RHO2 = 6,
  SEQSYM_ELEMENT_TAU_RHO3 = 7,
} SeqsymElement;

typedef enum {
  SEQSYM_FORMAT_TEXT = 0,
  SEQSYM_FORMAT_CSV = 1,
  SEQSYM_FORMAT_JSON = 2,
  SEQSYM_FORMAT_PGM = 3,
} SeqsymFormat;

typedef enum {
  SEQSYM_CHECK_THEOREM1 = 0,
  SEQSYM_CHECK_TABLE = 1,
  SEQSYM_CHECK_COROLLARY = 2,
  SEQSYM_CHECK_JACOBI_THEOREM = 3,
  SEQSYM_CHECK_BASIC_SYMMETRY = 4,
  SEQSYM_CHECK_LEMMA = 5,
  SEQSYM_CHECK_CYCLES = 6,
  SEQSYM_CHECK_ZOLOTAREV = 7,
} SeqsymCheck;

/*
 Opaque permutation of `{0, ..., m-1}`.
 */
typedef struct SeqsymPermutation SeqsymPermutation;

/*
 Opaque `n x n` matrix over `Z/(n^2+1)Z`.
 */
typedef struct SeqsymResidueMatrix SeqsymResidueMatrix;

/*
 Opaque `n x n` matrix over `{-1, 0, +1}`.
 */
typedef struct SeqsymSignMatrix SeqsymSignMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty if none.
 The pointer stays valid until the next failing call on the same thread.
 */
const char *seqsym_last_error_message(void);

/*
 Static description of a status code.
 */
const char *seqsym_status_name(SeqsymStatus status);

/*
 Releases a string returned by this library. NULL is ignored.
 */
void seqsym_string_free(char *s);

/*
 The sequential matrix `Q_n`.
 */
SeqsymStatus seqsym_sequential(size_t n, SeqsymResidueMatrix **out);

/*
 Builds a matrix from `n * n` row-major values, each below `n^2 + 1`.
 */
SeqsymStatus seqsym_residue_matrix_from_values(size_t n,
                                               const uint64_t *values,
                                               SeqsymResidueMatrix **out);

void seqsym_residue_matrix_free(SeqsymResidueMatrix *m);

/*
 Side length, or 0 for NULL.
 */
size_t seqsym_residue_matrix_side(const SeqsymResidueMatrix *m);

/*
 Modulus `n^2 + 1`, or 0 for NULL.
 */
uint64_t seqsym_residue_matrix_modulus(const SeqsymResidueMatrix *m);

/*
 Entry at the 1-indexed position `(i, j)`.
 */
SeqsymStatus seqsym_residue_matrix_get(const SeqsymResidueMatrix *m,
                                       size_t i,
                                       size_t j,
                                       uint64_t *out);

/*
 `sigma(A)` by the index formulas.
 */
SeqsymStatus seqsym_residue_matrix_apply(const SeqsymResidueMatrix *m,
                                         SeqsymElement sigma,
                                         SeqsymResidueMatrix **out);

/*
 `sigma(A)` by transposition and products with the exchange matrix.
 */
SeqsymStatus seqsym_residue_matrix_realize_by_products(const SeqsymResidueMatrix *m,
                                                       SeqsymElement sigma,
                                                       SeqsymResidueMatrix **out);

/*
 Entrywise `c * A`; `c` is reduced modulo the matrix modulus.
 */
SeqsymStatus seqsym_residue_matrix_scalar_mul(const SeqsymResidueMatrix *m,
                                              int64_t c,
                                              SeqsymResidueMatrix **out);

/*
 Entrywise equality; false if either handle is NULL.
 */
bool seqsym_residue_matrix_equal(const SeqsymResidueMatrix *a, const SeqsymResidueMatrix *b);

SeqsymStatus seqsym_residue_matrix_render(const SeqsymResidueMatrix *m,
                                          SeqsymFormat fmt,
                                          char **out);

SeqsymStatus seqsym_residue_matrix_parse(SeqsymFormat fmt,
                                         const char *text,
                                         SeqsymResidueMatrix **out);

/*
 Entrywise Jacobi symbol of `A`; the modulus must be odd.
 */
SeqsymStatus seqsym_residue_matrix_jacobi(const SeqsymResidueMatrix *m, SeqsymSignMatrix **out);

void seqsym_sign_matrix_free(SeqsymSignMatrix *m);

size_t seqsym_sign_matrix_side(const SeqsymSignMatrix *m);

/*
 Entry (-1, 0 or 1) at the 1-indexed position `(i, j)`.
 */
SeqsymStatus seqsym_sign_matrix_get(const SeqsymSignMatrix *m, size_t i, size_t j, int8_t *out);

SeqsymStatus seqsym_sign_matrix_apply(const SeqsymSignMatrix *m,
                                      SeqsymElement sigma,
                                      SeqsymSignMatrix **out);

bool seqsym_sign_matrix_equal(const SeqsymSignMatrix *a, const SeqsymSignMatrix *b);

SeqsymStatus seqsym_sign_matrix_render(const SeqsymSignMatrix *m, SeqsymFormat fmt, char **out);

SeqsymStatus seqsym_sign_matrix_parse(SeqsymFormat fmt, const char *text, SeqsymSignMatrix **out);

/*
 Jacobi symbol `(a/m)` for odd `m >= 3`.
 */
SeqsymStatus seqsym_jacobi(int64_t a, uint64_t m, int8_t *out);

/*
 Legendre symbol by Euler's criterion for an odd prime `p`.
 */
SeqsymStatus seqsym_legendre_euler(int64_t a, uint64_t p, int8_t *out);

/*
 `x -> a x mod m`; requires `gcd(a, m) = 1`.
 */
SeqsymStatus seqsym_mult_perm(int64_t a, uint64_t m, SeqsymPermutation **out);

/*
 Permutation of `Z/(n^2+1)Z` induced by `sigma` acting on `Q_n`.
 */
SeqsymStatus seqsym_induced_permutation(SeqsymElement sigma, size_t n, SeqsymPermutation **out);

void seqsym_permutation_free(SeqsymPermutation *p);

/*
 Number of points, or 0 for NULL.
 */
size_t seqsym_permutation_len(const SeqsymPermutation *p);

SeqsymStatus seqsym_permutation_apply(const SeqsymPermutation *p, size_t x, size_t *out);

/*
 Signature, +1 or -1.
 */
SeqsymStatus seqsym_permutation_signature(const SeqsymPermutation *p, int8_t *out);

/*
 Writes up to `cap` cycle lengths (canonical cycle order) into `lengths`
 and the total number of cycles into `count`. `lengths` may be NULL when
 `cap` is 0, which lets callers size the buffer first.
 */
SeqsymStatus seqsym_permutation_cycle_lengths(const SeqsymPermutation *p,
                                              size_t *lengths,
                                              size_t cap,
                                              size_t *count);

bool seqsym_permutation_equal(const SeqsymPermutation *a, const SeqsymPermutation *b);

/*
 `(a/m)` equals the signature of `x -> a x`.
 */
SeqsymStatus seqsym_check_zolotarev(int64_t a, uint64_t m, bool *out);

/*
 Runs a check over the inclusive range `lo..=hi`. `passed` receives whether
 there were no failures; `report_json`, when not NULL, receives the JSON
 report (free with `seqsym_string_free`).
 */
SeqsymStatus seqsym_verify(SeqsymCheck which,
                           uint64_t lo,
                           uint64_t hi,
                           size_t workers,
                           bool *passed,
                           char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEQSYM_H */
