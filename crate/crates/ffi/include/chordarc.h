#ifndef CHORDARC_H
#define CHORDARC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  CHORDARC_STATUS_OK = 0,
  CHORDARC_STATUS_NULL_POINTER = 1,
  CHORDARC_STATUS_INVALID_INPUT = 2,
  CHORDARC_STATUS_INVALID_ARGUMENT = 3,
  CHORDARC_STATUS_GUARD_EXCEEDED = 4,
  CHORDARC_STATUS_BUFFER_TOO_SMALL = 5,
  CHORDARC_STATUS_NOT_FOUND = 6,
  CHORDARC_STATUS_INTERNAL = 7,
} ChordarcStatus;

/**
 * Opaque chord diagram.
 */
typedef struct ChordarcDiagram ChordarcDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *chordarc_last_error(void);

/**
 * Parses a diagram in pairing, pairs or Gauss-word notation (auto-detected).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
ChordarcStatus chordarc_diagram_parse(const char *text, ChordarcDiagram **out);

/**
 * Builds a diagram from a partner array of even length `len`.
 *
 * # Safety
 * `pairing` must point to `len` values (may be null when `len == 0`).
 */
ChordarcStatus chordarc_diagram_from_pairing(const size_t *pairing,
                                             size_t len,
                                             ChordarcDiagram **out);

/**
 * The obstruction diagram `C_{2n+1}` on `4n + 2` points.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
ChordarcStatus chordarc_make_c(size_t n, ChordarcDiagram **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `d` must come from this library and not be used afterwards.
 */
void chordarc_diagram_free(ChordarcDiagram *d);

/**
 * # Safety
 * `d` and `out` must be valid pointers.
 */
ChordarcStatus chordarc_diagram_chord_count(const ChordarcDiagram *d, size_t *out);

/**
 * Partner array, `2m` entries.
 *
 * # Safety
 * `buf` must hold `cap` values; `len` must be valid.
 */
ChordarcStatus chordarc_diagram_pairing(const ChordarcDiagram *d,
                                        size_t *buf,
                                        size_t cap,
                                        size_t *len);

/**
 * # Safety
 * `d` and `out` must be valid pointers.
 */
ChordarcStatus chordarc_arc_number(const ChordarcDiagram *d, size_t *out);

/**
 * Antipodal cutting pair as two gap indices, or `CHORDARC_STATUS_NOT_FOUND`
 * when the arc number exceeds 2.
 *
 * # Safety
 * All pointers must be valid.
 */
ChordarcStatus chordarc_find_cutting_pair(const ChordarcDiagram *d, size_t *gap1, size_t *gap2);

/**
 * Rotation-invariant canonical code, `2m` entries.
 *
 * # Safety
 * `buf` must hold `cap` values; `len` must be valid.
 */
ChordarcStatus chordarc_canonical_code(const ChordarcDiagram *d,
                                       uint32_t *buf,
                                       size_t cap,
                                       size_t *len);

/**
 * Equivalence under rotation, or under rotation and reflection when
 * `dihedral` is set.
 *
 * # Safety
 * All pointers must be valid.
 */
ChordarcStatus chordarc_equivalent(const ChordarcDiagram *a,
                                   const ChordarcDiagram *b,
                                   bool dihedral,
                                   bool *out);

/**
 * Obstruction witness as flattened endpoint pairs `a0 b0 a1 b1 ...`
 * (`2(2n+1)` entries) with its parameter in `*n`. Returns
 * `CHORDARC_STATUS_NOT_FOUND` when the arc number is at most 2.
 *
 * # Safety
 * `buf` must hold `cap` values; `len` and `n` must be valid.
 */
ChordarcStatus chordarc_find_obstruction(const ChordarcDiagram *d,
                                         size_t *buf,
                                         size_t cap,
                                         size_t *len,
                                         size_t *n);

/**
 * Whether some choice at every double point gives a genus-0 rotation system.
 *
 * # Safety
 * `d` and `out` must be valid pointers.
 */
ChordarcStatus chordarc_is_planar_realizable(const ChordarcDiagram *d, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHORDARC_H */
