/* C interface to the anumber library: graph a-number invariants and rational Betti numbers of toric spaces over graph associahedra. */

#ifndef ANUMBER_H
#define ANUMBER_H

/* Generated by cbindgen from the anumber-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum AnStatus {
  /**
   * Success; out-parameters are filled in.
   */
  AN_STATUS_OK = 0,
  /**
   * Input text could not be decoded (graph6, edge list, name strings).
   */
  AN_STATUS_MALFORMED_INPUT = 1,
  /**
   * A mathematical precondition was violated (wrong parity, wrong
   * connectivity, out-of-range index).
   */
  AN_STATUS_DOMAIN_ERROR = 2,
  /**
   * Well-formed input outside the supported model (for example a cycle
   * on two vertices, or a host beyond the vertex-count limit).
   */
  AN_STATUS_UNSUPPORTED = 3,
  /**
   * The computation would exceed a size cap; raise the cap to proceed.
   */
  AN_STATUS_RESOURCE_LIMIT = 4,
  /**
   * A required pointer argument was NULL.
   */
  AN_STATUS_NULL_ARGUMENT = 5,
  /**
   * A string argument was not valid UTF-8.
   */
  AN_STATUS_INVALID_UTF8 = 6,
  /**
   * An internal panic was caught at the boundary; treat as a bug.
   */
  AN_STATUS_PANIC = 7,
} AnStatus;

/**
 * Opaque graph handle. Create with one of the `an_graph_*` constructors,
 * release with [`an_graph_free`].
 */
typedef struct AnGraph AnGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default cap on host order for the subset recursion.
 */
uint32_t an_default_dp_cap(void);

/**
 * Default cap on host order for the homology-based routes.
 */
uint32_t an_default_homology_cap(void);

/**
 * Message describing this thread's most recent failure, as an owned string
 * (empty if the last call succeeded). Free with `an_string_free`.
 */
char *an_last_error_message(void);

/**
 * Release a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `text` must be NULL or an unreleased pointer returned by this library.
 */
void an_string_free(char *text);

/**
 * Parse a graph from its graph6 encoding.
 *
 * # Safety
 * `text` must be NULL or NUL-terminated; `out` must be NULL or writable.
 */
enum AnStatus an_graph_from_graph6(const char *text, struct AnGraph **out);

/**
 * Parse a graph from edge-list text: first line the vertex count, then one
 * `u v` pair per line; `#` starts a comment.
 *
 * # Safety
 * `text` must be NULL or NUL-terminated; `out` must be NULL or writable.
 */
enum AnStatus an_graph_from_edge_list(const char *text, struct AnGraph **out);

/**
 * Build a member of a named family (`"path"`, `"cycle"`, `"complete"`,
 * `"star"`) on `n` vertices.
 *
 * # Safety
 * `family` must be NULL or NUL-terminated; `out` must be NULL or writable.
 */
enum AnStatus an_graph_generate(const char *family, uint32_t n, struct AnGraph **out);

/**
 * Release a graph handle. NULL is ignored.
 *
 * # Safety
 * `handle` must be NULL or an unreleased pointer from a constructor.
 */
void an_graph_free(struct AnGraph *handle);

/**
 * Number of vertices, or -1 if the handle is NULL.
 *
 * # Safety
 * `handle` must be NULL or a live graph handle.
 */
int32_t an_graph_vertex_count(const struct AnGraph *handle);

/**
 * Number of edges, or -1 if the handle is NULL.
 *
 * # Safety
 * `handle` must be NULL or a live graph handle.
 */
int64_t an_graph_edge_count(const struct AnGraph *handle);

/**
 * The graph6 encoding of the graph, as an owned string.
 *
 * # Safety
 * `handle` must be NULL or a live graph handle; `out` NULL or writable.
 */
enum AnStatus an_graph_to_graph6(const struct AnGraph *handle, char **out);

/**
 * The a-vector, alternating total `b` and signed value `sa` of the graph,
 * as a JSON object (all numbers in decimal strings). `dp_cap` of 0 selects
 * the default cap.
 *
 * # Safety
 * `handle` must be NULL or a live graph handle; `out` NULL or writable.
 */
enum AnStatus an_invariants_json(const struct AnGraph *handle, uint32_t dp_cap, char **out);

/**
 * Betti numbers of the toric space over the graph associahedron, as a JSON
 * object, by the requested route:
 *
 * - `"recursion"`: real space via the signed subset recursion (`dp_cap`);
 * - `"odd-intersection"`: real space via homology of the subcomplexes
 *   meeting each even subset oddly (`homology_cap`);
 * - `"row-combination"`: real space via homology over all row combinations
 *   of the folded characteristic matrix (`homology_cap`);
 * - `"component-product"`: real space via per-component homology factors
 *   (`homology_cap`);
 * - `"complex"`: the complex-case ranks, i.e. the h-vector of the nested
 *   set complex, reported in degree `2i` (`homology_cap`).
 *
 * A cap of 0 selects the default.
 *
 * # Safety
 * `handle` must be NULL or a live graph handle; `method` NULL or
 * NUL-terminated; `out` NULL or writable.
 */
enum AnStatus an_betti_json(const struct AnGraph *handle,
                            const char *method,
                            uint32_t dp_cap,
                            uint32_t homology_cap,
                            char **out);

/**
 * Run every Betti route and cross-check them; writes 1 to `out_consistent`
 * when all checks agree, 0 otherwise. Caps of 0 select the defaults.
 *
 * # Safety
 * `handle` must be NULL or a live graph handle; `out_consistent` NULL or
 * writable.
 */
enum AnStatus an_verify(const struct AnGraph *handle,
                        uint32_t dp_cap,
                        uint32_t homology_cap,
                        uint8_t *out_consistent);

/**
 * Like `an_verify`, but returns the full report (per-route Betti numbers
 * and each named check) as a JSON object.
 *
 * # Safety
 * `handle` must be NULL or a live graph handle; `out` NULL or writable.
 */
enum AnStatus an_verify_json(const struct AnGraph *handle,
                             uint32_t dp_cap,
                             uint32_t homology_cap,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANUMBER_H */
