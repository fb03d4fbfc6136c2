#ifndef BELIEF_CHANGE_H
#define BELIEF_CHANGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status code returned by every function.
 */
typedef enum BcStatus {
  BC_STATUS_OK = 0,
  BC_STATUS_INPUT_ERROR = 1,
  BC_STATUS_LIMIT_EXCEEDED = 2,
  BC_STATUS_VERIFICATION_FAILED = 3,
  BC_STATUS_NULL_POINTER = 4,
  BC_STATUS_PANIC = 5,
} BcStatus;

/*
 What a knowledge base denotes.
 */
typedef enum BcMode {
  BC_MODE_BASE = 0,
  BC_MODE_PROP_SET = 1,
  BC_MODE_HORN_SET = 2,
} BcMode;

/*
 A parsed knowledge base.
 */
typedef struct BcKb BcKb;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses knowledge-base text (a `sig:` line, then one formula per line).

 # Safety
 `source` must be a NUL-terminated string and `out` a writable pointer.
 */
enum BcStatus bc_kb_parse(const char *source, enum BcMode mode, struct BcKb **out);

/*
 Releases a handle from [`bc_kb_parse`]. Null is ignored.

 # Safety
 `kb` must come from [`bc_kb_parse`] and not have been freed.
 */
void bc_kb_free(struct BcKb *kb);

/*
 Contracts by `phi` with a named method (`partial-meet`, `maxichoice`,
 `full-meet`, `kernel`, `saturated-kernel`, `infra`, `orderly-maxichoice`)
 using default choices. `out` receives a JSON array of formulas.

 # Safety
 Pointers must be valid; strings NUL-terminated.
 */
enum BcStatus bc_contract(const struct BcKb *kb, const char *phi, const char *method, char **out);

/*
 Remainders by `phi` as a JSON array of formula arrays.

 # Safety
 Pointers must be valid; strings NUL-terminated.
 */
enum BcStatus bc_remainders(const struct BcKb *kb, const char *phi, char **out);

/*
 Kernels for `phi` as a JSON array of formula arrays.

 # Safety
 Pointers must be valid; strings NUL-terminated.
 */
enum BcStatus bc_kernels(const struct BcKb *kb, const char *phi, char **out);

/*
 Infra remainders for `phi` as a JSON array of formula arrays.

 # Safety
 Pointers must be valid; strings NUL-terminated.
 */
enum BcStatus bc_infra(const struct BcKb *kb, const char *phi, char **out);

/*
 Whether the knowledge base entails `phi`.

 # Safety
 Pointers must be valid; strings NUL-terminated.
 */
enum BcStatus bc_entails(const struct BcKb *kb, const char *phi, bool *out);

/*
 Runs a verification suite (or `all`). `out` receives the text report.
 Returns [`BcStatus::VerificationFailed`] when any case fails.

 # Safety
 `name` must be NUL-terminated and `out` writable.
 */
enum BcStatus bc_verify_suite(const char *name, char **out);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void bc_string_free(char *s);

/*
 Message for the last failure on this thread, or null. Valid until the
 next call into the library from the same thread.
 */
const char *bc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BELIEF_CHANGE_H */
