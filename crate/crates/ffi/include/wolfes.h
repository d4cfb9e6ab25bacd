#ifndef WOLFES_H
#define WOLFES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WolfesFormat {
  WOLFES_FORMAT_TEXT = 0,
  WOLFES_FORMAT_JSON = 1,
  WOLFES_FORMAT_LATEX = 2,
} WolfesFormat;

typedef enum WolfesStatus {
  WOLFES_STATUS_OK = 0,
  WOLFES_STATUS_NULL_POINTER = 1,
  WOLFES_STATUS_INVALID_UTF8 = 2,
  WOLFES_STATUS_PARSE = 3,
  WOLFES_STATUS_UNKNOWN_MODEL = 4,
  WOLFES_STATUS_INVALID_ARGUMENT = 5,
  // A computation failed, e.g. a space was not invariant.
  WOLFES_STATUS_COMPUTE = 6,
  WOLFES_STATUS_PANIC = 7,
} WolfesStatus;

// Opaque operator handle.
typedef struct WolfesOp WolfesOp;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until the
// next failing call on the same thread; do not free.
const char *wolfes_last_error(void);

// Builds a registered operator (`h.g2`, `k.a2`, `gen.T.3.1`, ...).
// `mark` is a `p/q` literal or null for 0.
//
// # Safety
// `name` and a non-null `mark` must be NUL-terminated strings; `out` must be
// writable.
enum WolfesStatus wolfes_op_resolve(const char *name, const char *mark, struct WolfesOp **out);

// Parses the canonical text form.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum WolfesStatus wolfes_op_parse(const char *src, struct WolfesOp **out);

// Parses the JSON form.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum WolfesStatus wolfes_op_parse_json(const char *src, struct WolfesOp **out);

// Substitutes any of `lambda`, `nu`, `omega` given as `p/q` literals; null
// leaves that parameter symbolic.
//
// # Safety
// `op` must be a live handle; non-null strings NUL-terminated; `out` writable.
enum WolfesStatus wolfes_op_substitute(const struct WolfesOp *op,
                                       const char *lambda,
                                       const char *nu,
                                       const char *omega,
                                       struct WolfesOp **out);

// `a b`, i.e. apply `b` first.
//
// # Safety
// `a`, `b` must be live handles; `out` writable.
enum WolfesStatus wolfes_op_compose(const struct WolfesOp *a,
                                    const struct WolfesOp *b,
                                    struct WolfesOp **out);

// `[a, b] = a b - b a`.
//
// # Safety
// `a`, `b` must be live handles; `out` writable.
enum WolfesStatus wolfes_op_commutator(const struct WolfesOp *a,
                                       const struct WolfesOp *b,
                                       struct WolfesOp **out);

// `a - b`.
//
// # Safety
// `a`, `b` must be live handles; `out` writable.
enum WolfesStatus wolfes_op_sub(const struct WolfesOp *a,
                                const struct WolfesOp *b,
                                struct WolfesOp **out);

// Differential order; -1 for a null handle.
//
// # Safety
// `op` must be null or a live handle.
int32_t wolfes_op_order(const struct WolfesOp *op);

// 1 if zero, 0 if not, -1 for a null handle.
//
// # Safety
// `op` must be null or a live handle.
int32_t wolfes_op_is_zero(const struct WolfesOp *op);

// 1 if equal, 0 if not, -1 if either handle is null.
//
// # Safety
// `a`, `b` must be null or live handles.
int32_t wolfes_op_equal(const struct WolfesOp *a, const struct WolfesOp *b);

// Serializes into a newly allocated string released with
// [`wolfes_string_free`].
//
// # Safety
// `op` must be a live handle; `out` writable.
enum WolfesStatus wolfes_op_to_string(const struct WolfesOp *op,
                                      enum WolfesFormat format,
                                      char **out);

// Runs a named check group (`g2-quartic`, `a2-cubic`, ...). `orientation`
// is `forward`, `reversed`, or null for the default. Writes 1 to `all_ok`
// when every report passed.
//
// # Safety
// `group` must be a NUL-terminated string, `orientation` null or one;
// `all_ok` writable.
enum WolfesStatus wolfes_verify(const char *group, const char *orientation, int32_t *all_ok);

// Releases a handle; null is ignored.
//
// # Safety
// `op` must be null or a handle from this library not yet freed.
void wolfes_op_free(struct WolfesOp *op);

// Releases a string from [`wolfes_op_to_string`]; null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void wolfes_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WOLFES_H */
