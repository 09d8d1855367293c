#ifndef SQO_H
#define SQO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SqoStatus {
  SQO_STATUS_OK = 0,
  SQO_STATUS_NULL_ARGUMENT = 1,
  SQO_STATUS_INVALID_INPUT = 2,
  SQO_STATUS_DISCONNECTED = 3,
  /**
   * No good ordering exists at the requested thresholds.
   */
  SQO_STATUS_STUCK = 4,
  SQO_STATUS_BUFFER_TOO_SMALL = 5,
  SQO_STATUS_BUDGET = 6,
  SQO_STATUS_PANIC = 99,
} SqoStatus;

typedef struct SqoGraph SqoGraph;

typedef struct SqoOrdering SqoOrdering;

typedef struct SqoPlaneGraph SqoPlaneGraph;

/**
 * Final state of a discharging run. The total is `total_num / total_den`.
 */
typedef struct SqoAudit {
  bool conserved;
  bool faces_nonnegative;
  bool high_vertices_nonnegative;
  size_t negative_vertices;
  size_t negative_faces;
  int64_t total_num;
  int64_t total_den;
} SqoAudit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *sqo_last_error(void);

/**
 * Builds a simple graph on `n` vertices from `edge_count` pairs stored
 * flat in `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum SqoStatus sqo_graph_new(size_t n,
                             const size_t *edges,
                             size_t edge_count,
                             struct SqoGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void sqo_graph_free(struct SqoGraph *g);

/**
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sqo_graph_vertex_count(const struct SqoGraph *g);

/**
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sqo_graph_edge_count(const struct SqoGraph *g);

/**
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sqo_graph_max_degree(const struct SqoGraph *g);

/**
 * The square of `g` as a new graph handle.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SqoStatus sqo_graph_square(const struct SqoGraph *g, struct SqoGraph **out);

/**
 * Generates a named construction (`"gk"`, `"wegner"`, `"dvorak"`, ...).
 *
 * # Safety
 * `family` must be a nul-terminated string and `out` writable.
 */
enum SqoStatus sqo_plane_generate(const char *family, size_t param, struct SqoPlaneGraph **out);

/**
 * # Safety
 * `pg` must be null or a handle from this library not yet freed.
 */
void sqo_plane_free(struct SqoPlaneGraph *pg);

/**
 * Copies the underlying graph into a new handle.
 *
 * # Safety
 * `pg` must be a live handle and `out` writable.
 */
enum SqoStatus sqo_plane_graph(const struct SqoPlaneGraph *pg, struct SqoGraph **out);

/**
 * Extracts a good ordering. Zero for `d_param` or `t_g` selects the
 * defaults (`max(Δ, 32)` and 3). On [`SqoStatus::Stuck`], `stuck_count`
 * (if non-null) receives the size of the certificate.
 *
 * # Safety
 * `g` must be a live handle, `out` writable, `stuck_count` null or
 * writable.
 */
enum SqoStatus sqo_good_ordering(const struct SqoGraph *g,
                                 size_t d_param,
                                 size_t t_g,
                                 struct SqoOrdering **out,
                                 size_t *stuck_count);

/**
 * # Safety
 * `o` must be null or a handle from this library not yet freed.
 */
void sqo_ordering_free(struct SqoOrdering *o);

/**
 * # Safety
 * `o` must be null or a live handle.
 */
size_t sqo_ordering_len(const struct SqoOrdering *o);

/**
 * # Safety
 * `o` must be null or a live handle.
 */
size_t sqo_ordering_max_back_g(const struct SqoOrdering *o);

/**
 * # Safety
 * `o` must be null or a live handle.
 */
size_t sqo_ordering_max_back_sq(const struct SqoOrdering *o);

/**
 * Copies the ordering into `buf`, which must hold [`sqo_ordering_len`]
 * entries.
 *
 * # Safety
 * `o` must be a live handle and `buf` writable for `len` entries.
 */
enum SqoStatus sqo_ordering_copy(const struct SqoOrdering *o, size_t *buf, size_t len);

/**
 * Greedy L(p,q)-labeling of `g` along `o`. `labels` receives one label per
 * vertex and `span` the largest label.
 *
 * # Safety
 * `g` and `o` must be live handles for the same graph; `labels` writable
 * for `len` entries; `span` null or writable.
 */
enum SqoStatus sqo_greedy_lpq(const struct SqoGraph *g,
                              const struct SqoOrdering *o,
                              uint32_t p,
                              uint32_t q,
                              uint32_t *labels,
                              size_t len,
                              uint32_t *span);

/**
 * Runs the discharging rules with parameter `d_param` (0 for
 * `max(Δ, 32)`) and summarizes the final charges.
 *
 * # Safety
 * `pg` must be a live handle and `out` writable.
 */
enum SqoStatus sqo_discharge_audit(const struct SqoPlaneGraph *pg,
                                   size_t d_param,
                                   struct SqoAudit *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SQO_H */
