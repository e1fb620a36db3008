#ifndef SUPERTWIST_H
#define SUPERTWIST_H

/* Generated by cbindgen from supertwist-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum StStatus {
  ST_STATUS_OK = 0,
  ST_STATUS_NULL_ARGUMENT = 1,
  ST_STATUS_UTF8 = 2,
  ST_STATUS_PARSE = 3,
  ST_STATUS_PRECONDITION = 4,
  ST_STATUS_INCOMPATIBLE = 5,
  ST_STATUS_WINDOW = 6,
  ST_STATUS_VERIFICATION_FAILED = 7,
} StStatus;

/**
 * Formal character handle.
 */
typedef struct StCharacter StCharacter;

/**
 * Standard parabolic handle.
 */
typedef struct StParabolic StParabolic;

/**
 * Root datum handle.
 */
typedef struct StRootSystem StRootSystem;

/**
 * Weyl group element handle.
 */
typedef struct StWeyl StWeyl;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread. The pointer stays
 * valid until the next failing call; do not free it.
 */
const char *st_last_error(void);

/**
 * Release a string returned by this library.
 */
void st_string_free(char *ptr);

/**
 * Build the root datum of gl(m|n); rejects m = n = 0.
 */
enum StStatus st_root_system_new(uintptr_t m, uintptr_t n, struct StRootSystem **out);

void st_root_system_free(struct StRootSystem *ptr);

/**
 * Root datum as JSON.
 */
enum StStatus st_root_system_json(const struct StRootSystem *rs, char **out);

/**
 * Standard parabolic from 0-based simple-root indices.
 */
enum StStatus st_parabolic_new(const struct StRootSystem *rs,
                               const uintptr_t *indices,
                               uintptr_t len,
                               struct StParabolic **out);

void st_parabolic_free(struct StParabolic *ptr);

/**
 * Weyl element from a reflection word like `"s1 t1"`; `""` is the identity.
 */
enum StStatus st_weyl_from_word(const struct StRootSystem *rs,
                                const char *word,
                                struct StWeyl **out);

void st_weyl_free(struct StWeyl *ptr);

/**
 * Verma character e^λ p_∅ truncated at `trunc`.
 */
enum StStatus st_verma_char(const struct StRootSystem *rs,
                            const char *weight,
                            uint32_t trunc,
                            struct StCharacter **out);

/**
 * Generalized Verma character e^λ p_X for a one-dimensional weight.
 */
enum StStatus st_gvm_char(const struct StRootSystem *rs,
                          const struct StParabolic *parabolic,
                          const char *weight,
                          uint32_t trunc,
                          struct StCharacter **out);

/**
 * Twisted character e^{w·λ} p_{wX}; requires N(w) ∩ X = ∅.
 */
enum StStatus st_twisted_char(const struct StRootSystem *rs,
                              const struct StParabolic *parabolic,
                              const struct StWeyl *w,
                              const char *weight,
                              uint32_t trunc,
                              struct StCharacter **out);

void st_char_free(struct StCharacter *ptr);

/**
 * Coefficient at a weight. Distinguishes a true zero from a query beyond
 * the truncation window, which fails with `Window`.
 */
enum StStatus st_char_coefficient(const struct StCharacter *chi, const char *weight, int64_t *out);

/**
 * Character as canonical JSON.
 */
enum StStatus st_char_json(const struct StCharacter *chi, char **out);

/**
 * Character as the canonical `c*e^[...]` text listing.
 */
enum StStatus st_char_text(const struct StCharacter *chi, char **out);

/**
 * Compare the closed twisted character with the Verma-expansion route and
 * return the report as JSON. `Ok` means the routes agree; a disagreement
 * returns `VerificationFailed` and still writes the report.
 */
enum StStatus st_twist_report_json(const struct StRootSystem *rs,
                                   const struct StParabolic *parabolic,
                                   const struct StWeyl *w,
                                   const char *weight,
                                   uint32_t trunc,
                                   char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERTWIST_H */
