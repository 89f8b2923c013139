#ifndef Z2Z4_H
#define Z2Z4_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum Z2z4Method {
  Z2Z4_METHOD_ALTERNATIVE = 0,
  Z2Z4_METHOD_SYNDROME = 1,
} Z2z4Method;

typedef enum Z2z4Status {
  Z2Z4_STATUS_OK = 0,
  /**
   * Decoding found no permutation, or a PD-set failed certification.
   */
  Z2Z4_STATUS_FAILURE = 1,
  Z2Z4_STATUS_NULL_POINTER = 2,
  Z2Z4_STATUS_INVALID_UTF8 = 3,
  Z2Z4_STATUS_INVALID_ARGUMENT = 4,
  Z2Z4_STATUS_PARSE = 5,
  /**
   * The operation does not apply to this code or PD-set.
   */
  Z2Z4_STATUS_CONFIG = 6,
  Z2Z4_STATUS_CAP_EXCEEDED = 7,
  Z2Z4_STATUS_BUFFER_TOO_SMALL = 8,
  Z2Z4_STATUS_PANIC = 9,
} Z2z4Status;

/**
 * Opaque handle to a code.
 */
typedef struct Z2z4Code Z2z4Code;

/**
 * Opaque handle to a PD-set.
 */
typedef struct Z2z4PdSet Z2z4PdSet;

typedef struct Z2z4CodeType {
  size_t alpha;
  size_t beta;
  size_t gamma;
  size_t delta;
  size_t kappa;
} Z2z4CodeType;

typedef struct Z2z4SimReport {
  uint64_t trials;
  uint64_t successes;
  uint64_t failures;
  uint64_t miscorrections;
} Z2z4SimReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *z2z4_last_error(void);

/**
 * Parses a code file (header `alpha A beta B`, `rows k`, then k rows).
 *
 * # Safety
 * `source` must be a nul-terminated string and `out` a valid pointer.
 */
enum Z2z4Status z2z4_code_new(const char *source, struct Z2z4Code **out);

/**
 * Built-in code by name: example3, example4, mixed, nonlinear, hadamard32.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum Z2z4Status z2z4_code_preset(const char *name, struct Z2z4Code **out);

/**
 * # Safety
 * `code` must come from this library and not be used afterwards. Null is ignored.
 */
void z2z4_code_free(struct Z2z4Code *code);

/**
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum Z2z4Status z2z4_code_type(const struct Z2z4Code *code, struct Z2z4CodeType *out);

/**
 * Binary length n = α + 2β, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a valid handle.
 */
size_t z2z4_code_length(const struct Z2z4Code *code);

/**
 * Information length γ + 2δ, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a valid handle.
 */
size_t z2z4_code_dimension(const struct Z2z4Code *code);

/**
 * Writes the 1-based information positions to `buf` and their count to
 * `len`. With a short buffer only `len` is written and
 * `Z2Z4_STATUS_BUFFER_TOO_SMALL` is returned.
 *
 * # Safety
 * `buf` must hold `cap` elements (or be null with `cap == 0`); `len` must be valid.
 */
enum Z2z4Status z2z4_code_info_set(const struct Z2z4Code *code,
                                   size_t *buf,
                                   size_t cap,
                                   size_t *len);

/**
 * Minimum Hamming distance of the Gray image and t = ⌊(d−1)/2⌋. Either
 * output may be null.
 *
 * # Safety
 * `code` must be a valid handle; outputs must be null or valid.
 */
enum Z2z4Status z2z4_code_min_distance(const struct Z2z4Code *code, size_t *d, size_t *t);

/**
 * # Safety
 * `code` and `out` must be valid pointers.
 */
enum Z2z4Status z2z4_code_is_binary_linear(const struct Z2z4Code *code, bool *out);

/**
 * # Safety
 * `word` must hold `n` bytes; `code` and `out` must be valid.
 */
enum Z2z4Status z2z4_code_contains(const struct Z2z4Code *code,
                                   const uint8_t *word,
                                   size_t n,
                                   bool *out);

/**
 * Systematic encoding of `k` information bits into `out` (`cap` ≥ n).
 *
 * # Safety
 * `info` must hold `k` bytes and `out` `cap` bytes.
 */
enum Z2z4Status z2z4_encode(const struct Z2z4Code *code,
                            const uint8_t *info,
                            size_t k,
                            uint8_t *out,
                            size_t cap);

/**
 * Parses a PD-set file for codes of length `n`.
 *
 * # Safety
 * `source` must be a nul-terminated string and `out` a valid pointer.
 */
enum Z2z4Status z2z4_pdset_new(const char *source, size_t n, struct Z2z4PdSet **out);

/**
 * Built-in PD-set by name: example3, example4.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum Z2z4Status z2z4_pdset_preset(const char *name, struct Z2z4PdSet **out);

/**
 * # Safety
 * `set` must come from this library and not be used afterwards. Null is ignored.
 */
void z2z4_pdset_free(struct Z2z4PdSet *set);

/**
 * Number of permutations, or 0 for a null handle.
 *
 * # Safety
 * `set` must be null or a valid handle.
 */
size_t z2z4_pdset_len(const struct Z2z4PdSet *set);

/**
 * Exhaustively checks every error of weight ≤ t. Returns `Z2Z4_STATUS_OK`
 * when certified and `Z2Z4_STATUS_FAILURE` otherwise; in the latter case the
 * first uncovered error is written to `witness` if it is non-null.
 *
 * # Safety
 * `set` must be valid; `witness` must be null or hold `cap` bytes.
 */
enum Z2z4Status z2z4_pdset_verify(const struct Z2z4PdSet *set, uint8_t *witness, size_t cap);

/**
 * Decodes `n` received bits. On success the codeword goes to `codeword`
 * and the number of flipped bits to `errors` (may be null). Returns
 * `Z2Z4_STATUS_FAILURE` when more than t errors are detected.
 *
 * # Safety
 * `received` must hold `n` bytes and `codeword` `cap` bytes.
 */
enum Z2z4Status z2z4_decode(const struct Z2z4Code *code,
                            const struct Z2z4PdSet *set,
                            enum Z2z4Method method,
                            const uint8_t *received,
                            size_t n,
                            uint8_t *codeword,
                            size_t cap,
                            size_t *errors);

/**
 * Monte-Carlo run with error patterns of exactly `weight` bits.
 *
 * # Safety
 * All pointers must be valid.
 */
enum Z2z4Status z2z4_simulate_weight(const struct Z2z4Code *code,
                                     const struct Z2z4PdSet *set,
                                     size_t weight,
                                     uint64_t trials,
                                     uint64_t seed,
                                     struct Z2z4SimReport *out);

/**
 * Monte-Carlo run on a binary symmetric channel with flip probability `p`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum Z2z4Status z2z4_simulate_flip(const struct Z2z4Code *code,
                                   const struct Z2z4PdSet *set,
                                   double p,
                                   uint64_t trials,
                                   uint64_t seed,
                                   struct Z2z4SimReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* Z2Z4_H */
