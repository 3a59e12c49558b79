#ifndef RECTCOVER_H
#define RECTCOVER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_NULL_POINTER = 1,
  RC_STATUS_INVALID_POLYGON = 2,
  RC_STATUS_INDEX_OUT_OF_RANGE = 3,
  RC_STATUS_BAD_PARAMETER = 4,
  RC_STATUS_LIMIT_EXCEEDED = 5,
  RC_STATUS_INTERNAL = 6,
} RcStatus;

typedef enum RcTarget {
  RC_TARGET_BOUNDARY = 0,
  RC_TARGET_CORNER = 1,
  RC_TARGET_INTERIOR = 2,
} RcTarget;

/**
 * A support graph over some family of the polygon's maximal rectangles.
 */
typedef struct RcGraph RcGraph;

/**
 * A polygon with its maximal rectangles in canonical order.
 */
typedef struct RcPolygon RcPolygon;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *rc_status_message(enum RcStatus status);

/**
 * Builds a polygon from `n_vertices` points stored as `x0, y0, x1, y1, ...`.
 *
 * # Safety
 * `xy` must point to `2 * n_vertices` readable `int64_t` values and `out` must be
 * writable. On success `*out` owns a handle to release with `rc_polygon_free`.
 */
enum RcStatus rc_polygon_new(const int64_t *xy, size_t n_vertices, struct RcPolygon **out);

/**
 * # Safety
 * `p` must be null or a handle from `rc_polygon_new` not yet freed.
 */
void rc_polygon_free(struct RcPolygon *p);

/**
 * Number of maximal rectangles.
 *
 * # Safety
 * `p` must be a live polygon handle and `out` writable.
 */
enum RcStatus rc_maximal_count(const struct RcPolygon *p, size_t *out);

/**
 * Maximal rectangle `index` as `x1, y1, x2, y2`.
 *
 * # Safety
 * `p` must be a live polygon handle and `out` must hold 4 writable `int64_t`.
 */
enum RcStatus rc_maximal_get(const struct RcPolygon *p, size_t index, int64_t *out);

/**
 * Planar support of all maximal rectangles.
 *
 * # Safety
 * `p` must be a live polygon handle and `out` writable. Release the graph with `rc_graph_free`.
 */
enum RcStatus rc_complete_support(const struct RcPolygon *p, struct RcGraph **out);

/**
 * Planar support of the maximal rectangles at `indices`; graph vertex `i` is
 * the `i`-th smallest selected index.
 *
 * # Safety
 * `p` must be a live polygon handle, `indices` must hold `n` readable values
 * (may be null when `n` is 0), and `out` writable.
 */
enum RcStatus rc_subfamily_support(const struct RcPolygon *p,
                                   const size_t *indices,
                                   size_t n,
                                   struct RcGraph **out);

/**
 * # Safety
 * `g` must be null or a graph handle not yet freed.
 */
void rc_graph_free(struct RcGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle; the out pointers must be writable.
 */
enum RcStatus rc_graph_size(const struct RcGraph *g, size_t *vertices, size_t *edges);

/**
 * Edge `index` in ascending order, endpoints `a < b`.
 *
 * # Safety
 * `g` must be a live graph handle; `a` and `b` writable.
 */
enum RcStatus rc_graph_edge(const struct RcGraph *g, size_t index, size_t *a, size_t *b);

/**
 * Whether `g` is planar and supports every boundary witness of the selected family.
 *
 * # Safety
 * `p` and `g` must be live handles, `indices` as in `rc_subfamily_support`, `out` writable.
 */
enum RcStatus rc_graph_check(const struct RcPolygon *p,
                             const struct RcGraph *g,
                             const size_t *indices,
                             size_t n,
                             bool *out);

/**
 * Cover size: local search with swap size `k` when `exact` is false, otherwise
 * branch and bound limited to `node_limit` nodes.
 *
 * # Safety
 * `p` must be a live polygon handle and `size` writable.
 */
enum RcStatus rc_cover_size(const struct RcPolygon *p,
                            enum RcTarget target,
                            size_t k,
                            bool exact,
                            size_t node_limit,
                            size_t *size);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RECTCOVER_H */
