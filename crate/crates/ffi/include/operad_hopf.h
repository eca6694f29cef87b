#ifndef OPERAD_HOPF_H
#define OPERAD_HOPF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum OhStatus {
  OH_STATUS_OK = 0,
  // Malformed permutation, coefficient, JSON or name.
  OH_STATUS_PARSE_ERROR = 1,
  // Well-formed input outside the domain of the operation.
  OH_STATUS_INVALID_ARGUMENT = 2,
  OH_STATUS_NULL_POINTER = 3,
  OH_STATUS_INVALID_UTF8 = 4,
  // A panic was caught at the boundary.
  OH_STATUS_INTERNAL = 5,
} OhStatus;

typedef enum OhProduct {
  OH_PRODUCT_ODOT = 0,
  OH_PRODUCT_SHUFFLE = 1,
  OH_PRODUCT_SHUFFLE_SIGNED = 2,
} OhProduct;

typedef enum OhTensor {
  OH_TENSOR_PLAIN = 0,
  OH_TENSOR_KOSZUL = 1,
} OhTensor;

// Opaque rational linear combination of permutations.
typedef struct OhLinComb OhLinComb;

// Opaque permutation.
typedef struct OhPerm OhPerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or NULL. The pointer stays
// valid until the next call into this library on the same thread.
const char *oh_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library.
void oh_string_free(char *s);

// Parses `4312` or `[10,1,2,...]`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum OhStatus oh_perm_parse(const char *text, struct OhPerm **out);

// Standardizes a word that may repeat letters, e.g. `2122`.
//
// # Safety
// `word` must be a NUL-terminated string and `out` writable.
enum OhStatus oh_perm_standardize(const char *word, struct OhPerm **out);

// # Safety
// `p` must be NULL or a handle from this library, not yet freed.
void oh_perm_free(struct OhPerm *p);

// # Safety
// `p` must be a live handle and `out` writable.
enum OhStatus oh_perm_len(const struct OhPerm *p, size_t *out);

// # Safety
// `p` must be a live handle and `out` writable. Free the result with
// `oh_string_free`.
enum OhStatus oh_perm_to_string(const struct OhPerm *p, char **out);

// Substitution of `beta` at position `i` (1-based) of `alpha`.
//
// # Safety
// Handles must be live and `out` writable.
enum OhStatus oh_perm_substitute(const struct OhPerm *alpha,
                                 size_t i,
                                 const struct OhPerm *beta,
                                 struct OhPerm **out);

// Block composition `tau ∘_i sigma`.
//
// # Safety
// Handles must be live and `out` writable.
enum OhStatus oh_perm_block_compose(const struct OhPerm *tau,
                                    size_t i,
                                    const struct OhPerm *sigma,
                                    struct OhPerm **out);

// Parses text such as `2*4312 - 1/2*21` or the JSON term list.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum OhStatus oh_lincomb_parse(const char *text, struct OhLinComb **out);

// # Safety
// `v` must be NULL or a handle from this library, not yet freed.
void oh_lincomb_free(struct OhLinComb *v);

// # Safety
// `v` must be a live handle and `out` writable.
enum OhStatus oh_lincomb_to_string(const struct OhLinComb *v, char **out);

// # Safety
// `v` must be a live handle and `out` writable.
enum OhStatus oh_lincomb_to_json(const struct OhLinComb *v, char **out);

// # Safety
// Handles must be live and `out` writable.
enum OhStatus oh_hopf_product(enum OhProduct kind,
                              const struct OhLinComb *x,
                              const struct OhLinComb *y,
                              struct OhLinComb **out);

// # Safety
// `x` must be a live handle and `out` writable.
enum OhStatus oh_hopf_antipode(enum OhProduct kind,
                               const struct OhLinComb *x,
                               struct OhLinComb **out);

// The coproduct as JSON terms with `{"left", "right"}` basis objects.
//
// # Safety
// `x` must be a live handle and `out` writable.
enum OhStatus oh_hopf_coproduct_json(const struct OhLinComb *x, char **out);

// Runs a named suite and returns its JSON report. `max_arity` 0 selects the
// suite default. `passed` receives whether every case held.
//
// # Safety
// `suite` must be a NUL-terminated string; `report` and `passed` writable.
enum OhStatus oh_verify_json(const char *suite,
                             size_t max_arity,
                             enum OhProduct kind,
                             enum OhTensor tensor,
                             uint64_t seed,
                             char **report,
                             bool *passed);

// Quotient dimension in arity `arity` of the preset `assoc` or `lie`,
// saturating up to `cap`.
//
// # Safety
// `preset` must be a NUL-terminated string and `out` writable.
enum OhStatus oh_free_quotient_dim(const char *preset, size_t arity, size_t cap, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OPERAD_HOPF_H */
