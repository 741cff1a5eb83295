/* Generated by cbindgen. Do not edit. */

#ifndef ACWB_H
#define ACWB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Search result kind; the values match the CLI exit codes.
 */
typedef enum AcwbSearchStatus {
  ACWB_SEARCH_STATUS_FOUND = 0,
  ACWB_SEARCH_STATUS_EXHAUSTED = 1,
  ACWB_SEARCH_STATUS_INCONCLUSIVE = 3,
} AcwbSearchStatus;

typedef enum AcwbStatus {
  ACWB_STATUS_OK = 0,
  ACWB_STATUS_NULL_POINTER = 1,
  ACWB_STATUS_INVALID_UTF8 = 2,
  ACWB_STATUS_PARSE = 3,
  ACWB_STATUS_ILLEGAL_MOVE = 4,
  ACWB_STATUS_INVALID_ARGUMENT = 5,
  ACWB_STATUS_SEARCH = 6,
  ACWB_STATUS_KIRBY = 7,
  ACWB_STATUS_OVERFLOW = 8,
  ACWB_STATUS_PANIC = 9,
} AcwbStatus;

typedef struct AcwbMatrix AcwbMatrix;

typedef struct AcwbOutcome AcwbOutcome;

typedef struct AcwbPresentation AcwbPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Caller frees.
 */
char *acwb_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void acwb_string_free(char *s);

/**
 * Static version string; do not free.
 */
const char *acwb_version(void);

/**
 * Parses `rank; r1; …; rn`.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
enum AcwbStatus acwb_presentation_parse(const char *src, struct AcwbPresentation **out);

/**
 * The family member with `w = yx`.
 *
 * # Safety
 * `out` must be writable.
 */
enum AcwbStatus acwb_presentation_family(int64_t n, struct AcwbPresentation **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void acwb_presentation_free(struct AcwbPresentation *p);

/**
 * Text form; caller frees. Null if `p` is null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *acwb_presentation_to_string(const struct AcwbPresentation *p);

/**
 * Text form of the canonical representative; caller frees.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *acwb_presentation_canonical(const struct AcwbPresentation *p);

/**
 * # Safety
 * `p` must be null or a live handle.
 */
size_t acwb_presentation_rank(const struct AcwbPresentation *p);

/**
 * # Safety
 * `p` must be null or a live handle.
 */
size_t acwb_presentation_total_length(const struct AcwbPresentation *p);

/**
 * # Safety
 * `p` must be null or a live handle.
 */
bool acwb_presentation_is_trivial(const struct AcwbPresentation *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_presentation_determinant(const struct AcwbPresentation *p, int64_t *out);

/**
 * Applies one move given as a JSON document, e.g.
 * `{"type":"invert_relator","relator":1}`, producing a new handle.
 *
 * # Safety
 * `p` must be a live handle, `move_json` a NUL-terminated string and `out` writable.
 */
enum AcwbStatus acwb_presentation_apply_move(const struct AcwbPresentation *p,
                                             const char *move_json,
                                             struct AcwbPresentation **out);

/**
 * Breadth-first search in the strict regime. `workers` 0 uses every core.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_search(const struct AcwbPresentation *p,
                            size_t max_total_length,
                            size_t max_depth,
                            size_t workers,
                            struct AcwbOutcome **out);

/**
 * Replays the prefix certificate (JSON), then searches from its endpoint.
 *
 * # Safety
 * `p` must be a live handle, `prefix_json` a NUL-terminated string and `out` writable.
 */
enum AcwbStatus acwb_hybrid_search(const struct AcwbPresentation *p,
                                   const char *prefix_json,
                                   size_t max_total_length,
                                   size_t max_depth,
                                   struct AcwbOutcome **out);

/**
 * # Safety
 * `o` must be null or a handle from this library, not yet freed.
 */
void acwb_outcome_free(struct AcwbOutcome *o);

/**
 * # Safety
 * `o` must be a live handle.
 */
enum AcwbSearchStatus acwb_outcome_status(const struct AcwbOutcome *o);

/**
 * # Safety
 * `o` must be null or a live handle.
 */
uint64_t acwb_outcome_visited(const struct AcwbOutcome *o);

/**
 * Class-level depth of a found certificate, or -1.
 *
 * # Safety
 * `o` must be null or a live handle.
 */
int64_t acwb_outcome_depth(const struct AcwbOutcome *o);

/**
 * Full outcome record as JSON; caller frees.
 *
 * # Safety
 * `o` must be null or a live handle.
 */
char *acwb_outcome_to_json(const struct AcwbOutcome *o);

/**
 * Certificate document as JSON, or null when nothing was found; caller frees.
 *
 * # Safety
 * `o` must be null or a live handle.
 */
char *acwb_outcome_certificate_json(const struct AcwbOutcome *o);

/**
 * Replays a certificate document and reports whether it trivializes. When
 * it does not, the failing step is available from [`acwb_last_error`].
 *
 * # Safety
 * `cert_json` must be a NUL-terminated string; `valid` must be writable.
 */
enum AcwbStatus acwb_verify(const char *cert_json, bool *valid);

/**
 * The built-in Gersten certificate as JSON; caller frees.
 */
char *acwb_gersten_certificate_json(void);

/**
 * Parses the text form (size line, rows, `h`/`d` kinds line).
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_parse(const char *src, struct AcwbMatrix **out);

/**
 * A new matrix with no components.
 */
struct AcwbMatrix *acwb_matrix_empty(void);

/**
 * # Safety
 * `m` must be null or a handle from this library, not yet freed.
 */
void acwb_matrix_free(struct AcwbMatrix *m);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
char *acwb_matrix_to_string(const struct AcwbMatrix *m);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
size_t acwb_matrix_size(const struct AcwbMatrix *m);

/**
 * 1-based entry.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_entry(const struct AcwbMatrix *m, size_t i, size_t j, int64_t *out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_det(const struct AcwbMatrix *m, int64_t *out);

/**
 * Slides component `i` over `j`; `sign` is +1 or -1.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_slide(const struct AcwbMatrix *m,
                                  size_t i,
                                  size_t j,
                                  int32_t sign,
                                  struct AcwbMatrix **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_blow_down(const struct AcwbMatrix *m,
                                      size_t i,
                                      struct AcwbMatrix **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_add_unlink(const struct AcwbMatrix *m,
                                       size_t r,
                                       struct AcwbMatrix **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_add_hopf_pair(const struct AcwbMatrix *m, struct AcwbMatrix **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum AcwbStatus acwb_matrix_gpr_condition(const struct AcwbMatrix *m, bool *out);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
bool acwb_matrix_is_weak_trivial_form(const struct AcwbMatrix *m);

/**
 * Whether the slope `(a, b)` is a candidate; `labeling` may be null for the default.
 *
 * # Safety
 * `labeling` must be null or a NUL-terminated string; `out` must be writable.
 */
enum AcwbStatus acwb_curve_is_candidate(int64_t a, int64_t b, const char *labeling, bool *out);

/**
 * # Safety
 * `labeling` must be null or a NUL-terminated string; `out` must be writable.
 */
enum AcwbStatus acwb_curve_z3_class(int64_t a, int64_t b, const char *labeling, uint8_t *out);

/**
 * Candidate slopes up to `height` as a JSON array of `[a, b]` pairs; caller frees.
 *
 * # Safety
 * `labeling` must be null or a NUL-terminated string; `out` must be writable.
 */
enum AcwbStatus acwb_curve_candidates_json(int64_t height, const char *labeling, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ACWB_H */
