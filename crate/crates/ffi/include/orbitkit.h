#ifndef ORBITKIT_H
#define ORBITKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every fallible call. Values 2 to 6 match the exit codes of the
 * `orbitkit` command-line tool.
 */
typedef enum OrbitkitStatus {
  ORBITKIT_STATUS_OK = 0,
  ORBITKIT_STATUS_ERROR = 1,
  ORBITKIT_STATUS_PARSE_ERROR = 2,
  ORBITKIT_STATUS_RESOURCE_LIMIT = 3,
  ORBITKIT_STATUS_SIZE_LIMIT = 4,
  ORBITKIT_STATUS_UNKNOWN_NAME = 5,
  ORBITKIT_STATUS_DISCONNECTED = 6,
  ORBITKIT_STATUS_NULL_POINTER = 7,
  ORBITKIT_STATUS_INVALID_ARGUMENT = 8,
  ORBITKIT_STATUS_PANIC = 9,
} OrbitkitStatus;

typedef enum OrbitkitProduct {
  ORBITKIT_PRODUCT_CARTESIAN = 0,
  ORBITKIT_PRODUCT_STRONG = 1,
  ORBITKIT_PRODUCT_CORONA = 2,
  ORBITKIT_PRODUCT_JOIN = 3,
} OrbitkitProduct;

/**
 * Opaque graph handle.
 */
typedef struct OrbitkitGraph OrbitkitGraph;

/**
 * Opaque orbit partition handle. Independent of the graph it came from.
 */
typedef struct OrbitkitOrbits OrbitkitOrbits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *orbitkit_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *orbitkit_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void orbitkit_string_free(char *s);

/**
 * Parses one graph6 record.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum OrbitkitStatus orbitkit_graph_from_graph6(const char *text, struct OrbitkitGraph **out);

/**
 * Parses an edge list: a line `n m` followed by `m` lines `u v`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum OrbitkitStatus orbitkit_graph_from_edge_list(const char *text, struct OrbitkitGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `endpoints` (`2 * edge_count` entries).
 *
 * # Safety
 * `endpoints` must point to `2 * edge_count` readable values (it may be
 * NULL when `edge_count` is 0) and `out` must be writable.
 */
enum OrbitkitStatus orbitkit_graph_from_edges(size_t n,
                                              const size_t *endpoints,
                                              size_t edge_count,
                                              struct OrbitkitGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library, not yet freed.
 */
void orbitkit_graph_free(struct OrbitkitGraph *g);

/**
 * Number of vertices; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t orbitkit_graph_order(const struct OrbitkitGraph *g);

/**
 * Number of edges; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t orbitkit_graph_edge_count(const struct OrbitkitGraph *g);

/**
 * graph6 encoding of `g`. Free the result with [`orbitkit_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum OrbitkitStatus orbitkit_graph_to_graph6(const struct OrbitkitGraph *g, char **out);

/**
 * Orbit partition of Aut(`g`). `node_budget` 0 selects the default.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum OrbitkitStatus orbitkit_orbits_compute(const struct OrbitkitGraph *g,
                                            uint64_t node_budget,
                                            struct OrbitkitOrbits **out);

/**
 * # Safety
 * `o` must be NULL or a handle from this library, not yet freed.
 */
void orbitkit_orbits_free(struct OrbitkitOrbits *o);

/**
 * Number of orbits (the transitivity number); 0 for NULL.
 *
 * # Safety
 * `o` must be NULL or a live orbits handle.
 */
size_t orbitkit_orbits_count(const struct OrbitkitOrbits *o);

/**
 * Copies the representatives (smallest vertex of each orbit, in orbit
 * order) into `buf`, which must hold at least
 * [`orbitkit_orbits_count`] entries.
 *
 * # Safety
 * `o` must be a live orbits handle and `buf` must point to `len` writable
 * values.
 */
enum OrbitkitStatus orbitkit_orbits_representatives(const struct OrbitkitOrbits *o,
                                                    size_t *buf,
                                                    size_t len);

/**
 * Index of the orbit containing `v`.
 *
 * # Safety
 * `o` must be a live orbits handle and `out` writable.
 */
enum OrbitkitStatus orbitkit_orbits_orbit_of(const struct OrbitkitOrbits *o, size_t v, size_t *out);

/**
 * `{"n", "r", "orbits", "representatives"}` as JSON.
 *
 * # Safety
 * `o` must be a live orbits handle and `out` writable.
 */
enum OrbitkitStatus orbitkit_orbits_to_json(const struct OrbitkitOrbits *o, char **out);

/**
 * Transitivity number of `g` with the default search budget.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum OrbitkitStatus orbitkit_transitivity_number(const struct OrbitkitGraph *g, size_t *out);

/**
 * Whether some automorphism of `g` maps `u` to `v`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum OrbitkitStatus orbitkit_interchangeable(const struct OrbitkitGraph *g,
                                             size_t u,
                                             size_t v,
                                             bool *out);

/**
 * Builds a product of `g` and `h`. `vertex_limit` 0 selects the default.
 *
 * # Safety
 * `g` and `h` must be live graph handles and `out` writable.
 */
enum OrbitkitStatus orbitkit_product(enum OrbitkitProduct kind,
                                     const struct OrbitkitGraph *g,
                                     const struct OrbitkitGraph *h,
                                     size_t vertex_limit,
                                     struct OrbitkitGraph **out);

/**
 * Property report as JSON:
 * `{"property", "r", "per_orbit": [{"rep", "value"}], "distinct_values"}`.
 * `name` is one of `degree`, `eccentricity`, `total_distance`,
 * `betweenness`. With `fast`, the property is evaluated once per orbit.
 *
 * # Safety
 * `g` must be a live graph handle, `name` a NUL-terminated string and
 * `out` writable.
 */
enum OrbitkitStatus orbitkit_property_json(const struct OrbitkitGraph *g,
                                           const char *name,
                                           bool fast,
                                           char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBITKIT_H */
