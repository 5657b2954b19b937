#ifndef SASAKI_H
#define SASAKI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SasakiStatus {
  SASAKI_STATUS_OK = 0,
  SASAKI_STATUS_NULL_POINTER = 1,
  SASAKI_STATUS_INVALID_UTF8 = 2,
  SASAKI_STATUS_PARSE_ERROR = 3,
  SASAKI_STATUS_UNKNOWN_NAME = 4,
  SASAKI_STATUS_INVALID_ARGUMENT = 5,
  SASAKI_STATUS_PANIC = 6,
} SasakiStatus;

/*
 Opaque manifold handle with its connection and curvature precomputed.
 */
typedef struct SasakiManifold SasakiManifold;

/*
 Contact structure classification of a manifold.
 */
typedef struct SasakiStructureFlags {
  bool almost_contact_metric;
  bool contact_metric;
  bool killing_reeb;
  bool k_contact;
  bool normal;
  bool sasakian;
} SasakiStructureFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a manifold document. On success `*out` owns a new handle.

 # Safety
 `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SasakiStatus sasaki_manifold_from_json(const char *json, struct SasakiManifold **out);

/*
 Loads a built-in manifold such as `"heisenberg5"`.

 # Safety
 `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SasakiStatus sasaki_manifold_builtin(const char *name, struct SasakiManifold **out);

/*
 Releases a handle. Null is ignored.

 # Safety
 `m` must come from this library and not be used afterwards.
 */
void sasaki_manifold_free(struct SasakiManifold *m);

/*
 # Safety
 `m` must be a live handle and `out` a valid pointer.
 */
enum SasakiStatus sasaki_manifold_dimension(const struct SasakiManifold *m, size_t *out);

/*
 # Safety
 `m` must be a live handle and `out` a valid pointer.
 */
enum SasakiStatus sasaki_manifold_classify(const struct SasakiManifold *m,
                                           struct SasakiStructureFlags *out);

/*
 Solves the named soliton variant and writes a JSON object to `*out`.

 # Safety
 `m` must be a live handle, `variant` a NUL-terminated string and `out` a
 valid pointer.
 */
enum SasakiStatus sasaki_soliton_json(const struct SasakiManifold *m,
                                      const char *variant,
                                      char **out);

/*
 Builds the full report as JSON. `r_override` may be null.

 # Safety
 `m` must be a live handle, `a` and `b` NUL-terminated strings,
 `r_override` null or a NUL-terminated string, and `out` a valid pointer.
 */
enum SasakiStatus sasaki_report_json(const struct SasakiManifold *m,
                                     const char *a,
                                     const char *b,
                                     const char *r_override,
                                     char **out);

/*
 Runs the theorem harness and writes the number of violations to
 `*violations`.

 # Safety
 As for `sasaki_report_json`.
 */
enum SasakiStatus sasaki_check_theorems(const struct SasakiManifold *m,
                                        const char *a,
                                        const char *b,
                                        const char *r_override,
                                        size_t *violations);

/*
 Message for the last failed call on this thread, or `""`. The pointer is
 valid until the next library call on the same thread.
 */
const char *sasaki_last_error(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not be used afterwards.
 */
void sasaki_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SASAKI_H */
