#ifndef ENRIQUESLAB_H
#define ENRIQUESLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  EL_STATUS_OK = 0,
  EL_STATUS_NULL_POINTER = 1,
  EL_STATUS_INVALID_ARGUMENT = 2,
  EL_STATUS_OUT_OF_RANGE = 3,
  EL_STATUS_COMPUTATION_FAILED = 4,
  EL_STATUS_PANIC = 5,
} ElStatus;

/**
 * The 40-vertex graph with its labels.
 */
typedef struct ElGamma ElGamma;

/**
 * A finished verification run.
 */
typedef struct ElReport ElReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread. Empty if none.
 * The pointer stays valid until the next failing call on this thread.
 */
const char *el_last_error(void);

/**
 * Runs a suite (`"all"`, `"plane"`, `"lattice"`, `"gamma"`, `"vinberg"`,
 * `"char2"`). A run with failing checks still returns `EL_STATUS_OK`;
 * query [`el_report_passed`].
 *
 * # Safety
 * `suite` must be a NUL-terminated string and `out` a valid pointer.
 */
ElStatus el_run(const char *suite, uint32_t config_index, uint64_t seed, ElReport **out);

/**
 * # Safety
 * `r` must come from [`el_run`]; `passed` must be valid.
 */
ElStatus el_report_passed(const ElReport *r, bool *passed);

/**
 * Number of checks run, and how many failed.
 *
 * # Safety
 * `r` must come from [`el_run`]; the out pointers must be valid.
 */
ElStatus el_report_counts(const ElReport *r, uintptr_t *total, uintptr_t *failed);

/**
 * JSON text of the report, owned by the handle.
 *
 * # Safety
 * `r` must come from [`el_run`]. Returns null for a null handle.
 */
const char *el_report_json(const ElReport *r);

/**
 * # Safety
 * `r` must come from [`el_run`] and not be used afterwards. Null is ignored.
 */
void el_report_free(ElReport *r);

/**
 * Builds the combinatorial 40-vertex graph.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
ElStatus el_gamma_new(ElGamma **out);

/**
 * # Safety
 * `g` must come from [`el_gamma_new`]. Returns 0 for null.
 */
uintptr_t el_gamma_len(const ElGamma *g);

/**
 * # Safety
 * `g` must come from [`el_gamma_new`]; `value` must be valid.
 */
ElStatus el_gamma_pairing(const ElGamma *g, uintptr_t i, uintptr_t j, int64_t *value);

/**
 * Label of vertex `i`, owned by the handle. Null when out of range.
 *
 * # Safety
 * `g` must come from [`el_gamma_new`].
 */
const char *el_gamma_label(const ElGamma *g, uintptr_t i);

/**
 * Graphviz text; release with [`el_string_free`].
 *
 * # Safety
 * `g` must come from [`el_gamma_new`]; `out` must be valid.
 */
ElStatus el_gamma_dot(const ElGamma *g, char **out);

/**
 * Finite-index test for the reflection group of the graph in a lattice of
 * the given rank.
 *
 * # Safety
 * `g` must come from [`el_gamma_new`]; `verdict` must be valid.
 */
ElStatus el_gamma_vinberg_check(const ElGamma *g, uintptr_t ambient_rank, bool *verdict);

/**
 * # Safety
 * `g` must come from [`el_gamma_new`] and not be used afterwards. Null is ignored.
 */
void el_gamma_free(ElGamma *g);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void el_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ENRIQUESLAB_H */
