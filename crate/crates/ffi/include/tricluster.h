/* C interface to the tricluster library. Generated by cbindgen. */

#ifndef TRICLUSTER_H
#define TRICLUSTER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum TriStatus {
  /**
   * Success.
   */
  TriStatus_Ok = 0,
  /**
   * A required pointer was null or a length did not match.
   */
  TriStatus_InvalidArgument = 1,
  /**
   * The input text could not be parsed.
   */
  TriStatus_ParseError = 2,
  /**
   * The request was well-formed but impossible (unknown curve, invalid
   * surface, routes disagreeing, boundary curve passed to the oracle).
   */
  TriStatus_DomainError = 3,
  /**
   * The flip search exhausted its depth without finding the variable.
   */
  TriStatus_NotFound = 4,
  /**
   * A panic was caught at the boundary; this is a bug in the library.
   */
  TriStatus_InternalError = 5,
} TriStatus;

/**
 * Opaque handle to an exact Laurent polynomial.
 */
typedef struct TriPoly TriPoly;

/**
 * Opaque handle to a parsed surface and its named curves.
 */
typedef struct TriSurface TriSurface;

/**
 * Topological summary of a surface.
 */
typedef struct TriStats {
  uint32_t genus;
  uint32_t boundary_components;
  uint32_t marked_points;
  uint32_t internal_arcs;
  uint32_t boundary_arcs;
  uint32_t triangles;
} TriStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the most recent failure on this thread, or null if no
 * failure has occurred. The pointer stays valid until the next failing
 * call on the same thread; do not free it.
 */
const char *tri_last_error(void);

/**
 * Parse a surface document into a new handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 * On success `*out` owns the surface and must be released with
 * [`tri_surface_free`].
 */
enum TriStatus tri_surface_parse(const char *text, struct TriSurface **out);

/**
 * Release a surface handle. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer returned by [`tri_surface_parse`] that has
 * not been freed yet.
 */
void tri_surface_free(struct TriSurface *s);

/**
 * Number of internal arcs (exchange directions); 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a valid surface handle.
 */
uint32_t tri_surface_rank(const struct TriSurface *s);

/**
 * Fill `*out` with the topological summary of the surface.
 *
 * # Safety
 * `s` must be a valid surface handle and `out` a valid pointer.
 */
enum TriStatus tri_surface_stats(const struct TriSurface *s, struct TriStats *out);

/**
 * Write the `rank x rank` signed adjacency matrix into `out` in row-major
 * order. `len` must equal `rank * rank`.
 *
 * # Safety
 * `s` must be a valid surface handle and `out` must point to at least `len`
 * writable `int64_t` slots.
 */
enum TriStatus tri_surface_b_matrix(const struct TriSurface *s, int64_t *out, uintptr_t len);

/**
 * Expand a named curve by both routes, insisting they agree.
 *
 * # Safety
 * `s` must be a valid surface handle, `curve` a valid NUL-terminated
 * string, and `out` a valid pointer. On success `*out` must be released
 * with [`tri_poly_free`].
 */
enum TriStatus tri_expand(const struct TriSurface *s, const char *curve, struct TriPoly **out);

/**
 * The expansion with every `x` set to 1.
 *
 * # Safety
 * Same contract as [`tri_expand`].
 */
enum TriStatus tri_f_polynomial(const struct TriSurface *s,
                                const char *curve,
                                struct TriPoly **out);

/**
 * Find the curve's cluster variable by flips alone, searching at most
 * `max_depth` flips deep. Returns `NotFound` when the search exhausts.
 *
 * # Safety
 * Same contract as [`tri_expand`].
 */
enum TriStatus tri_oracle_variable(const struct TriSurface *s,
                                   const char *curve,
                                   uintptr_t max_depth,
                                   struct TriPoly **out);

/**
 * Write the index vector of a curve into `out`. `len` must equal the rank.
 *
 * # Safety
 * `s` must be a valid surface handle, `curve` a valid NUL-terminated
 * string, and `out` must point to at least `len` writable `int64_t` slots.
 */
enum TriStatus tri_index_vector(const struct TriSurface *s,
                                const char *curve,
                                int64_t *out,
                                uintptr_t len);

/**
 * Write the degree vector of the expansion into `out`. `len` must equal
 * the rank.
 *
 * # Safety
 * Same contract as [`tri_index_vector`].
 */
enum TriStatus tri_g_vector(const struct TriSurface *s,
                            const char *curve,
                            int64_t *out,
                            uintptr_t len);

/**
 * Write the number of closed position sets of the curve's string module,
 * as a decimal string, into `*out`.
 *
 * # Safety
 * `s` must be a valid surface handle, `curve` a valid NUL-terminated
 * string, and `out` a valid pointer. On success `*out` must be released
 * with [`tri_string_free`].
 */
enum TriStatus tri_closed_set_count(const struct TriSurface *s, const char *curve, char **out);

/**
 * Parse a polynomial in the canonical text form over `nvars` variables.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 * On success `*out` must be released with [`tri_poly_free`].
 */
enum TriStatus tri_poly_parse(uintptr_t nvars, const char *text, struct TriPoly **out);

/**
 * Release a polynomial handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or an unfreed pointer produced by this library.
 */
void tri_poly_free(struct TriPoly *p);

/**
 * Write the canonical text form of the polynomial into `*out`.
 *
 * # Safety
 * `p` must be a valid polynomial handle and `out` a valid pointer. On
 * success `*out` must be released with [`tri_string_free`].
 */
enum TriStatus tri_poly_render(const struct TriPoly *p, char **out);

/**
 * Exact equality of two polynomials; false if either handle is null.
 *
 * # Safety
 * `a` and `b` must each be null or a valid polynomial handle.
 */
bool tri_poly_eq(const struct TriPoly *a, const struct TriPoly *b);

/**
 * Number of terms; 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a valid polynomial handle.
 */
uintptr_t tri_poly_term_count(const struct TriPoly *p);

/**
 * Release a string returned through an out-pointer. Null is ignored.
 *
 * # Safety
 * `s` must be null or an unfreed string produced by this library.
 */
void tri_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRICLUSTER_H */
