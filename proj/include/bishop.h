/* C interface to the Bishop-surface normal form engine.
 *
 * All functions returning int use 0 for success and the library's error
 * codes otherwise:
 *   2 parse error          5 verification failure
 *   3 inadmissible input   6 bad argument
 *   4 truncation too low   7 internal invariant violation
 * On failure bishop_last_error() describes the problem (thread-local).
 *
 * Strings returned through char** are heap-allocated; release them with
 * bishop_string_free().  Reports are JSON documents; all exact values are
 * serialized as rational strings, never floats, except in numeric mode where
 * values are decimal strings tagged "numeric".
 */

#ifndef BISHOP_H
#define BISHOP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bishop_surface bishop_surface;

/* Flags for bishop_normalize. */
#define BISHOP_FLAG_NUMERIC_SCALE 1u /* rescale a non-unit leading harmonic
                                        coefficient in arbitrary-precision
                                        floats instead of failing */

/* --- surfaces ----------------------------------------------------------- */

/* Parse the text surface format (header "degree D", term lines
 * "alpha beta re im", '#' comments, alpha >= beta only). */
int bishop_surface_parse(const char* text, bishop_surface** out);
int bishop_surface_read(const char* path, bishop_surface** out);
int bishop_surface_serialize(const bishop_surface* s, char** text_out);
void bishop_surface_free(bishop_surface* s);
/* Truncation degree declared by the surface. */
int bishop_surface_degree(const bishop_surface* s);

/* Deterministic random admissible surface (same arguments => identical
 * bytes): quadric + z^s + conj, plus bounded random Hermitian terms of
 * degrees s+1..D. */
int bishop_generate_random(uint64_t seed, int s, int degree, int bound, char** text_out);

/* --- analysis ----------------------------------------------------------- */

/* degree < 0 means "use the surface's declared degree" in all calls below. */

/* Full reduction to the normal form w = z zbar + 2Re{z^s + sum lambda z^m}.
 * The JSON report carries s, the lambda table, the transform, the output
 * surface, the automorphism group and the oracle verification status. */
int bishop_normalize(const bishop_surface* s, int degree, unsigned flags, char** json_out);

/* Invariants only: detected s (0 = quadric to this degree), lambda table,
 * automorphism group. */
int bishop_invariants(const bishop_surface* s, int degree, char** json_out);

/* Automorphism group of the normal form: rotation subgroup of Z_s. */
int bishop_aut(const bishop_surface* s, int degree, char** json_out);

/* Formal equivalence to the common truncation degree; reports the smallest
 * rotation index l when equivalent. */
int bishop_equiv(const bishop_surface* a, const bishop_surface* b, int degree, char** json_out);

/* Branch curve of the complexified surface, the s Puiseux branch points,
 * membership orders and leading hyperbolic constants, to the given order. */
int bishop_branch(const bishop_surface* s, int order, char** json_out);

/* Re-run the substitution oracle on a previously emitted normalize report
 * against the source surface; error 5 on any nonzero residual. */
int bishop_verify(const bishop_surface* source, const char* report_json, char** json_out);

/* --- misc --------------------------------------------------------------- */

const char* bishop_last_error(void);
void bishop_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
