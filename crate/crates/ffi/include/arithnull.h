#ifndef ARITHNULL_H
#define ARITHNULL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

// Result of every fallible call.
typedef enum ArithnullStatus {
  ARITHNULL_STATUS_OK = 0,
  // A required pointer argument was null.
  ARITHNULL_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  ARITHNULL_STATUS_INVALID_UTF8 = 2,
  // Malformed polynomial, JSON or numeric input.
  ARITHNULL_STATUS_PARSE = 3,
  // Inputs of incompatible sizes or variable counts.
  ARITHNULL_STATUS_ARITY = 4,
  // No certificate exists up to the requested degree.
  ARITHNULL_STATUS_INFEASIBLE = 5,
  // An identity that should hold exactly does not.
  ARITHNULL_STATUS_VERIFICATION_FAILED = 6,
  // Any other library error; see [`arithnull_last_error`].
  ARITHNULL_STATUS_FAILED = 7,
  // The library panicked; this is a bug.
  ARITHNULL_STATUS_PANIC = 8,
} ArithnullStatus;

// Opaque Bezout certificate handle.
typedef struct ArithnullCertificate ArithnullCertificate;

// Opaque polynomial handle.
typedef struct ArithnullPoly ArithnullPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *arithnull_last_error(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void arithnull_string_free(char *s);

// Parses `text` as a polynomial in `nvars` variables `x1..x{nvars}`.
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
enum ArithnullStatus arithnull_poly_parse(const char *text,
                                          uintptr_t nvars,
                                          struct ArithnullPoly **out);

// Frees a polynomial. Null is ignored.
//
// # Safety
// `p` must come from this library and not have been freed.
void arithnull_poly_free(struct ArithnullPoly *p);

// Writes the polynomial's text form to `out`; free it with
// [`arithnull_string_free`].
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum ArithnullStatus arithnull_poly_to_string(const struct ArithnullPoly *p, char **out);

// Total degree, or −1 for the zero polynomial and for a null handle.
//
// # Safety
// `p` must be null or a live handle.
int64_t arithnull_poly_degree(const struct ArithnullPoly *p);

// Global height `Σ_v max_i h_v(f_i)` of `count` polynomials.
//
// # Safety
// `polys` must point to `count` live handles and `out` be valid.
enum ArithnullStatus arithnull_global_height(const struct ArithnullPoly *const *polys,
                                             uintptr_t count,
                                             double *out);

// Mahler measure: exact for univariate input, otherwise a torus Monte Carlo
// estimate with `samples` draws from `seed`.
//
// # Safety
// `p` must be a live handle; `value` and `stderr` valid pointers.
enum ArithnullStatus arithnull_mahler(const struct ArithnullPoly *p,
                                      uint64_t samples,
                                      uint64_t seed,
                                      double *value,
                                      double *stderr);

// Normalized volume of the union of the supports, with `0, e_1, …, e_n`
// adjoined when `frame` is nonzero.
//
// # Safety
// `polys` must point to `count` live handles and `out` be valid.
enum ArithnullStatus arithnull_normalized_volume(const struct ArithnullPoly *const *polys,
                                                 uintptr_t count,
                                                 int32_t frame,
                                                 uint64_t *out);

// Evaluates a bound statement. `inputs_json` is an object of strings, for
// instance `{"n": "2", "d": "3", "h": "log(5)"}`; the report is written to
// `out` as JSON.
//
// # Safety
// Both strings must be nul-terminated and `out` valid.
enum ArithnullStatus arithnull_bound(const char *statement, const char *inputs_json, char **out);

// Searches a certificate of minimal degree up to `max_degree`, or up to
// `4 n d^n` when `max_degree` is negative.
//
// # Safety
// `polys` must point to `count` live handles and `out` be valid.
enum ArithnullStatus arithnull_certificate_search(const struct ArithnullPoly *const *polys,
                                                  uintptr_t count,
                                                  int32_t max_degree,
                                                  struct ArithnullCertificate **out);

// Checks `a = Σ g_i f_i` exactly. Returns `VerificationFailed` when the
// identity does not hold; on success writes the certificate degree.
//
// # Safety
// `cert` must be a live handle, `polys` point to `count` live handles and
// `degree` be null or valid.
enum ArithnullStatus arithnull_certificate_verify(const struct ArithnullCertificate *cert,
                                                  const struct ArithnullPoly *const *polys,
                                                  uintptr_t count,
                                                  uint32_t *degree);

// Writes the certificate as JSON (integers as decimal strings).
//
// # Safety
// `cert` must be a live handle and `out` valid.
enum ArithnullStatus arithnull_certificate_to_json(const struct ArithnullCertificate *cert,
                                                   char **out);

// Reads a certificate from its JSON form.
//
// # Safety
// `json` must be nul-terminated and `out` valid.
enum ArithnullStatus arithnull_certificate_from_json(const char *json,
                                                     struct ArithnullCertificate **out);

// The integer `a` of `a = Σ g_i f_i`, as a decimal string.
//
// # Safety
// `cert` must be a live handle and `out` valid.
enum ArithnullStatus arithnull_certificate_a(const struct ArithnullCertificate *cert, char **out);

// Frees a certificate. Null is ignored.
//
// # Safety
// `cert` must come from this library and not have been freed.
void arithnull_certificate_free(struct ArithnullCertificate *cert);

// Divides `g` by `f` modulo the zero-dimensional complete intersection
// `ideal`, through the trace formula; writes the unreduced quotient.
//
// # Safety
// `ideal` must point to `count` live handles, `f`, `g` be live handles and
// `out` valid.
enum ArithnullStatus arithnull_divide(const struct ArithnullPoly *const *ideal,
                                      uintptr_t count,
                                      const struct ArithnullPoly *f,
                                      const struct ArithnullPoly *g,
                                      struct ArithnullPoly **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARITHNULL_H */
