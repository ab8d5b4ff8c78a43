/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef RADIAL_MOORE_H
#define RADIAL_MOORE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RmStatus {
  RM_STATUS_OK = 0,
  RM_STATUS_NULL_POINTER = 1,
  RM_STATUS_INVALID_ARGUMENT = 2,
  RM_STATUS_PARSE_ERROR = 3,
  RM_STATUS_UNSUPPORTED = 4,
  RM_STATUS_DISCONNECTED = 5,
  RM_STATUS_TIMEOUT = 6,
  RM_STATUS_CHECK_FAILED = 7,
  RM_STATUS_PANIC = 8,
} RmStatus;

/**
 * Opaque graph handle.
 */
typedef struct RmGraph RmGraph;

/**
 * Result of `rm_verify_radial_moore`. `radius` and `diameter` are 0 for a
 * disconnected graph.
 */
typedef struct RmRadialReport {
  bool is_radial_moore;
  bool order_ok;
  bool regular_ok;
  bool connected;
  size_t radius;
  size_t diameter;
  size_t central_count;
} RmRadialReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *rm_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed once.
 */
void rm_string_free(char *s);

/**
 * # Safety
 * `g` must be NULL or a handle returned by this library, freed once.
 */
void rm_graph_free(struct RmGraph *g);

/**
 * Decodes one graph6 string (optional header, no trailing data).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum RmStatus rm_graph_from_graph6(const char *text, struct RmGraph **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_graph_to_graph6(const struct RmGraph *g, char **out);

/**
 * Builds a graph on `order` vertices from `edge_count` pairs stored flat
 * in `edges` as `u0, v0, u1, v1, ...`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum RmStatus rm_graph_from_edges(size_t order,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct RmGraph **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_graph_order(const struct RmGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_graph_edge_count(const struct RmGraph *g, size_t *out);

/**
 * The graph `G_d` with the center at vertex 0.
 *
 * # Safety
 * `out` must be writable.
 */
enum RmStatus rm_build_gd(size_t d, struct RmGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum RmStatus rm_hoffman_singleton(struct RmGraph **out);

/**
 * Sum of distances from `v` to every vertex.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_vertex_status(const struct RmGraph *g, size_t v, uint64_t *out);

/**
 * Sum of all vertex statuses (twice the Wiener index).
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_total_status(const struct RmGraph *g, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle; `radius` and `diameter` must be writable.
 */
enum RmStatus rm_radius_diameter(const struct RmGraph *g, size_t *radius, size_t *diameter);

/**
 * Checks order `M(d,k)`, `d`-regularity, radius `k` and diameter `k+1`.
 * A negative verdict is reported in `out`, not as an error.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_verify_radial_moore(const struct RmGraph *g,
                                     size_t d,
                                     size_t k,
                                     struct RmRadialReport *out);

/**
 * `M(d,k)` as a decimal string.
 *
 * # Safety
 * `out` must be writable; free the result with `rm_string_free`.
 */
enum RmStatus rm_moore_bound(uint64_t d, uint64_t k, char **out);

/**
 * Status of any vertex of a Moore graph, as a decimal string.
 *
 * # Safety
 * `out` must be writable; free the result with `rm_string_free`.
 */
enum RmStatus rm_moore_status(uint64_t d, uint64_t k, char **out);

/**
 * Upper bound on the number of central vertices, as a decimal string.
 *
 * # Safety
 * `out` must be writable; free the result with `rm_string_free`.
 */
enum RmStatus rm_central_upper_bound(uint64_t d, uint64_t k, char **out);

/**
 * Order of the automorphism group as a decimal string. Fails with
 * `RM_STATUS_TIMEOUT` once `budget` search nodes are spent.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_automorphism_group_order(const struct RmGraph *g, uint64_t budget, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RADIAL_MOORE_H */
