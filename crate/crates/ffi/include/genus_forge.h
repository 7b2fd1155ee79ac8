#ifndef GENUS_FORGE_H
#define GENUS_FORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GfStatus {
  GF_STATUS_OK = 0,
  GF_STATUS_NULL_POINTER = 1,
  GF_STATUS_INVALID_GRAPH = 2,
  GF_STATUS_PARSE = 3,
  /**
   * The call needs terminals and the graph has none.
   */
  GF_STATUS_NO_TERMINALS = 4,
  /**
   * The terminals are adjacent where that is not allowed.
   */
  GF_STATUS_XY_PRESENT = 5,
  GF_STATUS_INDEX_OUT_OF_RANGE = 6,
  GF_STATUS_CATALOG = 7,
  GF_STATUS_COUNT_MISMATCH = 8,
  GF_STATUS_INTERNAL = 9,
} GfStatus;

/**
 * Opaque genus engine with its profile cache. Safe to share between
 * threads.
 */
typedef struct GfEngine GfEngine;

/**
 * Opaque graph, optionally carrying two terminals.
 */
typedef struct GfGraph GfGraph;

/**
 * Opaque list of torus obstructions.
 */
typedef struct GfObstructions GfObstructions;

typedef struct GfProfile {
  uint32_t g;
  uint32_t g_plus;
  uint32_t theta;
  uint32_t epsilon;
  uint32_t epsilon_plus;
  uint32_t g_a;
  uint32_t g_a_plus;
} GfProfile;

typedef struct GfTorusCounts {
  uint32_t pairs;
  uint32_t filtered;
  uint32_t obstructions;
  uint32_t t2_pairs;
  uint32_t t2_survivors;
} GfTorusCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null, never freed.
 */
const char *gf_status_message(enum GfStatus status);

struct GfEngine *gf_engine_new(bool decompose);

/**
 * # Safety
 * `engine` must come from [`gf_engine_new`] and not be used afterwards.
 */
void gf_engine_free(struct GfEngine *engine);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (it may be null
 * when `edge_count` is 0) and `out` must be writable.
 */
enum GfStatus gf_graph_new(uint32_t n,
                           const uint32_t *edges,
                           size_t edge_count,
                           struct GfGraph **out);

/**
 * Parses the first record of `text` in the plain or XY-labelled graph
 * format. Terminals are kept when the record has them.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum GfStatus gf_graph_parse(const char *text, struct GfGraph **out);

/**
 * Sets (or replaces) the terminals.
 *
 * # Safety
 * `graph` must be a live handle.
 */
enum GfStatus gf_graph_set_terminals(struct GfGraph *graph, uint32_t x, uint32_t y);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
uint32_t gf_graph_vertex_count(const struct GfGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
uint32_t gf_graph_edge_count(const struct GfGraph *graph);

/**
 * # Safety
 * `graph` must come from this API and not be used afterwards.
 */
void gf_graph_free(struct GfGraph *graph);

/**
 * Minimum orientable genus of the graph (terminals ignored).
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum GfStatus gf_min_genus(const struct GfEngine *engine,
                           const struct GfGraph *graph,
                           uint32_t *out);

/**
 * The seven two-terminal parameters.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum GfStatus gf_profile(const struct GfEngine *engine,
                         const struct GfGraph *graph,
                         struct GfProfile *out);

/**
 * Genus of the xy-sum of two parts predicted from their profiles.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum GfStatus gf_two_sum_genus(const struct GfEngine *engine,
                               const struct GfGraph *part1,
                               const struct GfGraph *part2,
                               bool with_edge,
                               uint32_t *out);

/**
 * Whether the graph is a minor-minimal obstruction for the surface of
 * genus `k`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum GfStatus gf_is_obstruction(const struct GfEngine *engine,
                                const struct GfGraph *graph,
                                uint32_t k,
                                bool *out);

/**
 * Validates the shipped catalog and builds the connectivity-2 torus
 * obstructions. `counts` may be null; `out` receives a list handle.
 *
 * # Safety
 * `engine` must be live; `out` writable.
 */
enum GfStatus gf_enumerate_torus(const struct GfEngine *engine,
                                 struct GfTorusCounts *counts,
                                 struct GfObstructions **out);

/**
 * # Safety
 * `list` must be a live handle or null.
 */
size_t gf_obstructions_len(const struct GfObstructions *list);

/**
 * A fresh graph handle for record `index`, with the glued pair as
 * terminals. Free it with [`gf_graph_free`].
 *
 * # Safety
 * `list` must be live and `out` writable.
 */
enum GfStatus gf_obstructions_get(const struct GfObstructions *list,
                                  size_t index,
                                  struct GfGraph **out);

/**
 * # Safety
 * `list` must come from [`gf_enumerate_torus`] and not be used afterwards.
 */
void gf_obstructions_free(struct GfObstructions *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GENUS_FORGE_H */
