#ifndef ADU_H
#define ADU_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every exported call.
 */
typedef enum AduStatus {
  ADU_STATUS_OK = 0,
  /**
   * A verification ran and found a nonzero residual.
   */
  ADU_STATUS_VERIFICATION_FAILED = 1,
  ADU_STATUS_INVALID_ARGUMENT = 2,
  ADU_STATUS_SIZE_GUARD = 3,
  ADU_STATUS_GATED = 4,
  ADU_STATUS_NULL_POINTER = 5,
  ADU_STATUS_ARITHMETIC = 6,
  ADU_STATUS_IO = 7,
  ADU_STATUS_PANIC = 8,
} AduStatus;

/**
 * Algebra with fixed parameters `(s, t, phi)`.
 */
typedef struct AduAlgebra AduAlgebra;

/**
 * Element of an algebra in normal form.
 */
typedef struct AduElement AduElement;

/**
 * Ranked poset.
 */
typedef struct AduPoset AduPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call on the same thread; do not free.
 */
const char *adu_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void adu_string_free(char *s);

/**
 * Creates the algebra `B_q(s, t, phi)`; `phi` uses the `EXP:COEFF; ...`
 * grammar (e.g. `"const:-1"`) or LaurentPoly JSON.
 *
 * # Safety
 * `phi` must be a NUL-terminated string; `out` must be writable.
 */
enum AduStatus adu_algebra_new(int64_t s, int64_t t, const char *phi, struct AduAlgebra **out_alg);

/**
 * # Safety
 * `alg` must come from [`adu_algebra_new`] and not have been freed.
 */
void adu_algebra_free(struct AduAlgebra *alg);

/**
 * Generator or unit by name: `"1"`, `"E"`, `"F"`, `"K"`, `"Kinv"`, `"Cs"`, `"Ct"`.
 *
 * # Safety
 * `alg` must be a live handle, `name` a NUL-terminated string.
 */
enum AduStatus adu_element_generator(const struct AduAlgebra *alg,
                                     const char *name,
                                     struct AduElement **out_elem);

/**
 * # Safety
 * `x` must come from this library and not have been freed.
 */
void adu_element_free(struct AduElement *x);

/**
 * Product `a * b`; both must belong to the same algebra.
 *
 * # Safety
 * `a`, `b` must be live handles; `out_elem` writable.
 */
enum AduStatus adu_element_mul(const struct AduElement *a,
                               const struct AduElement *b,
                               struct AduElement **out_elem);

/**
 * # Safety
 * As for [`adu_element_mul`].
 */
enum AduStatus adu_element_add(const struct AduElement *a,
                               const struct AduElement *b,
                               struct AduElement **out_elem);

/**
 * # Safety
 * As for [`adu_element_mul`].
 */
enum AduStatus adu_element_sub(const struct AduElement *a,
                               const struct AduElement *b,
                               struct AduElement **out_elem);

/**
 * # Safety
 * `x` must be a live handle; `out_zero` writable.
 */
enum AduStatus adu_element_is_zero(const struct AduElement *x, bool *out_zero);

/**
 * Canonical text form. Free the result with [`adu_string_free`].
 *
 * # Safety
 * `x` must be a live handle; `out_text` writable.
 */
enum AduStatus adu_element_to_string(const struct AduElement *x, char **out_text);

/**
 * Runs the seeded algebra property suite plus the Casimir and cubic checks.
 * Returns `VERIFICATION_FAILED` when any check fails.
 *
 * # Safety
 * `alg` must be a live handle.
 */
enum AduStatus adu_algebra_verify(const struct AduAlgebra *alg, uint64_t seed);

/**
 * `psi_{s,t}` (or its inverse when `inverse` is true) as LaurentPoly JSON.
 *
 * # Safety
 * `psi` must be a NUL-terminated string; `out_json` writable.
 */
enum AduStatus adu_phi_map(int64_t s, int64_t t, const char *psi, bool inverse, char **out_json);

/**
 * Builds a catalog poset. `eps` (polar families) and `m` (attenuated, pass 0
 * otherwise) may be NULL/0 when unused; `base` is used by `polar_top` only.
 *
 * # Safety
 * `family` must be a NUL-terminated string, `eps` NULL or NUL-terminated;
 * `out_poset` writable.
 */
enum AduStatus adu_poset_build(const char *family,
                               size_t b,
                               size_t n,
                               size_t m,
                               const char *eps,
                               size_t base,
                               struct AduPoset **out_poset);

/**
 * # Safety
 * `p` must come from [`adu_poset_build`] and not have been freed.
 */
void adu_poset_free(struct AduPoset *p);

/**
 * Number of fibers (`top rank + 1`).
 *
 * # Safety
 * `p` must be a live handle; `out_count` writable.
 */
enum AduStatus adu_poset_fiber_count(const struct AduPoset *p, size_t *out_count);

/**
 * Size of fiber `i`.
 *
 * # Safety
 * `p` must be a live handle; `out_size` writable.
 */
enum AduStatus adu_poset_fiber_size(const struct AduPoset *p, size_t i, size_t *out_size);

/**
 * Poset JSON `{family, params, elements, fibers, covers}`.
 *
 * # Safety
 * `p` must be a live handle; `out_json` writable.
 */
enum AduStatus adu_poset_to_json(const struct AduPoset *p, char **out_json);

/**
 * Verifies the module relations for a catalog family, trying each poset
 * convention. Writes the report JSON; returns `VERIFICATION_FAILED` when no
 * convention passes. `base` selects a `polar_top` base vertex; pass
 * `SIZE_MAX` to check every vertex.
 *
 * # Safety
 * String arguments must be NUL-terminated (`eps` may be NULL);
 * `out_report` may be NULL.
 */
enum AduStatus adu_verify_module(const char *family,
                                 size_t b,
                                 size_t n,
                                 size_t m,
                                 const char *eps,
                                 size_t base,
                                 char **out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ADU_H */
