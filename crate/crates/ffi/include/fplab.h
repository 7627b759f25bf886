#ifndef FPLAB_H
#define FPLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Frobenius constructions selectable from C.
 */
typedef enum FplabFrobeniusOp {
  /**
   * `I^[p^e]`
   */
  FPLAB_FROBENIUS_OP_BRACKET_POWER = 0,
  /**
   * `I_e(I)`
   */
  FPLAB_FROBENIUS_OP_ROOT = 1,
  /**
   * `{x : x^(p^e) ∈ I}`
   */
  FPLAB_FROBENIUS_OP_PREIMAGE = 2,
} FplabFrobeniusOp;

/**
 * Binary ideal operations selectable from C.
 */
typedef enum FplabIdealOp {
  FPLAB_IDEAL_OP_SUM = 0,
  FPLAB_IDEAL_OP_PRODUCT = 1,
  FPLAB_IDEAL_OP_INTERSECT = 2,
  FPLAB_IDEAL_OP_COLON = 3,
} FplabIdealOp;

/**
 * Result code of every fallible call.
 */
typedef enum FplabStatus {
  FPLAB_STATUS_OK = 0,
  FPLAB_STATUS_NULL_POINTER = 1,
  FPLAB_STATUS_INVALID_UTF8 = 2,
  FPLAB_STATUS_NOT_PRIME = 3,
  FPLAB_STATUS_SYNTAX = 4,
  FPLAB_STATUS_CONTEXT_MISMATCH = 5,
  FPLAB_STATUS_NOT_HOMOGENEOUS = 6,
  FPLAB_STATUS_UNIT_IDEAL = 7,
  FPLAB_STATUS_ZERO_INPUT = 8,
  FPLAB_STATUS_BUDGET_EXCEEDED = 9,
  FPLAB_STATUS_INCONCLUSIVE = 10,
  FPLAB_STATUS_INVALID_ARGUMENT = 11,
  FPLAB_STATUS_INTERNAL = 12,
  FPLAB_STATUS_PANIC = 13,
} FplabStatus;

typedef struct FplabIdeal FplabIdeal;

typedef struct FplabPoly FplabPoly;

/**
 * A polynomial ring over `F_p`.
 */
typedef struct FplabRing FplabRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failed call on this thread, or "" after a
 * successful one. Valid until the next call on the same thread.
 */
const char *fplab_last_error(void);

/**
 * Library version as a static string.
 */
const char *fplab_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void fplab_string_free(char *s);

/**
 * Sets the S-pair budget for every later Groebner basis computation.
 */
void fplab_set_pair_budget(uint64_t budget);

/**
 * Creates `F_p[vars]`. `vars` is comma-separated; `order` is "grevlex",
 * "lex", or null for grevlex.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum FplabStatus fplab_ring_new(uint64_t p,
                                const char *vars,
                                const char *order,
                                struct FplabRing **out);

/**
 * # Safety
 * `ring` must come from [`fplab_ring_new`] and not have been freed.
 */
void fplab_ring_free(struct FplabRing *ring);

/**
 * # Safety
 * Handles must be live; `text` nul-terminated; `out` writable.
 */
enum FplabStatus fplab_poly_parse(const struct FplabRing *ring,
                                  const char *text,
                                  struct FplabPoly **out);

/**
 * # Safety
 * `poly` must be live; `out` writable.
 */
enum FplabStatus fplab_poly_to_string(const struct FplabPoly *poly, char **out);

/**
 * # Safety
 * `poly` must come from this library and not have been freed.
 */
void fplab_poly_free(struct FplabPoly *poly);

/**
 * Parses a comma-separated generator list.
 *
 * # Safety
 * Handles must be live; `text` nul-terminated; `out` writable.
 */
enum FplabStatus fplab_ideal_parse(const struct FplabRing *ring,
                                   const char *text,
                                   struct FplabIdeal **out);

/**
 * # Safety
 * `ideal` must come from this library and not have been freed.
 */
void fplab_ideal_free(struct FplabIdeal *ideal);

/**
 * Reduced grevlex basis as "g1, g2, ...", or "0" for the zero ideal.
 *
 * # Safety
 * `ideal` must be live; `out` writable.
 */
enum FplabStatus fplab_ideal_groebner_basis(const struct FplabIdeal *ideal, char **out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
enum FplabStatus fplab_ideal_contains(const struct FplabIdeal *ideal,
                                      const struct FplabPoly *poly,
                                      bool *out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
enum FplabStatus fplab_ideal_equal(const struct FplabIdeal *a,
                                   const struct FplabIdeal *b,
                                   bool *out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
enum FplabStatus fplab_ideal_binary(enum FplabIdealOp op,
                                    const struct FplabIdeal *a,
                                    const struct FplabIdeal *b,
                                    struct FplabIdeal **out);

/**
 * Krull dimension of `S/I` (homogeneous `I`).
 *
 * # Safety
 * `ideal` must be live; `out` writable.
 */
enum FplabStatus fplab_dimension(const struct FplabIdeal *ideal, uint64_t *out);

/**
 * Multiplicity of `S/I` (homogeneous `I`).
 *
 * # Safety
 * `ideal` must be live; `out` writable.
 */
enum FplabStatus fplab_multiplicity(const struct FplabIdeal *ideal, uint64_t *out);

/**
 * # Safety
 * `ideal` must be live; `out` writable.
 */
enum FplabStatus fplab_embedding_dimension(const struct FplabIdeal *ideal, uint64_t *out);

/**
 * Length of `S/I`; `*finite` is false (and `*out` 0) when it is infinite.
 *
 * # Safety
 * `ideal` must be live; `out` and `finite` writable.
 */
enum FplabStatus fplab_length(const struct FplabIdeal *ideal, uint64_t *out, bool *finite);

/**
 * # Safety
 * `ideal` must be live; `out` writable.
 */
enum FplabStatus fplab_frobenius(enum FplabFrobeniusOp op,
                                 const struct FplabIdeal *ideal,
                                 uint32_t e,
                                 struct FplabIdeal **out);

/**
 * Fedder's criterion for `S/I` at the homogeneous maximal ideal.
 *
 * # Safety
 * `ideal` must be live; `out` writable.
 */
enum FplabStatus fplab_fedder_is_fpure(const struct FplabIdeal *ideal, bool *out);

/**
 * HSL number of the hypersurface `f`; `Inconclusive` when the chain has
 * not stabilized by `e_max`.
 *
 * # Safety
 * `f` must be live; `out` writable.
 */
enum FplabStatus fplab_hsl_number(const struct FplabPoly *f, uint32_t e_max, uint32_t *out);

/**
 * Searches `e = 1..e_max` for `x^(p^e) ∈ J^[p^e] + I`. `*witness_e` is the
 * smallest such `e`, or 0 when none was found.
 *
 * # Safety
 * Handles must be live; `witness_e` writable.
 */
enum FplabStatus fplab_in_frobenius_closure(const struct FplabPoly *x,
                                            const struct FplabIdeal *j,
                                            const struct FplabIdeal *ambient,
                                            uint32_t e_max,
                                            uint32_t *witness_e);

/**
 * Runs a built-in suite ("example1", "example2", "bounds", "remark33" or
 * "remark33(n,p)") and writes its JSON report. `*all_passed` tells whether
 * every check passed.
 *
 * # Safety
 * `name` nul-terminated; `json` and `all_passed` writable.
 */
enum FplabStatus fplab_run_suite(const char *name,
                                 uint32_t e_max,
                                 uint32_t s_max,
                                 char **json,
                                 bool *all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FPLAB_H */
