#ifndef FORKLINK_H
#define FORKLINK_H

/* This file is generated by cbindgen from the forklink-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum FlStatus {
  /**
   * Success.
   */
  FL_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  FL_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  FL_STATUS_INVALID_UTF8 = 2,
  /**
   * The input was structurally invalid (bad JSON, edge out of range,
   * empty partition, zero vertex counts, ...).
   */
  FL_STATUS_INVALID_INPUT = 3,
  /**
   * The operation needs a connected diagram but the graph splits.
   */
  FL_STATUS_DISCONNECTED = 4,
  /**
   * An internal invariant failed; this is a bug in the library.
   */
  FL_STATUS_INTERNAL = 5,
} FlStatus;

/**
 * Opaque handle to an embedded bipartite graph.
 */
typedef struct FlGraph FlGraph;

/**
 * Parses a graph from JSON of the form `{"p":…,"q":…,"edges":[[u,l],…]}`.
 *
 * # Safety
 *
 * `json` must be a NUL-terminated string; `out` must point to writable
 * memory. On success `*out` owns a new handle.
 */
enum FlStatus fl_graph_from_json(const char *json, struct FlGraph **out);

/**
 * Builds the complete graph on `p` upper and `q` lower vertices, whose
 * boundary is the torus link T(p, q).
 *
 * # Safety
 *
 * `out` must point to writable memory. On success `*out` owns a new handle.
 */
enum FlStatus fl_graph_theta(uint32_t p, uint32_t q, struct FlGraph **out);

/**
 * Builds the twisted-torus graph of a weakly decreasing positive partition.
 *
 * # Safety
 *
 * `parts` must point to `len` readable values; `out` must point to writable
 * memory. On success `*out` owns a new handle.
 */
enum FlStatus fl_graph_twisted_torus(const uint32_t *parts, size_t len, struct FlGraph **out);

/**
 * Releases a graph handle. NULL is ignored.
 *
 * # Safety
 *
 * `graph` must be NULL or a handle from this library, not yet freed.
 */
void fl_graph_free(struct FlGraph *graph);

/**
 * Serializes a graph back to JSON.
 *
 * # Safety
 *
 * `graph` must be a live handle; `out` must point to writable memory. On
 * success `*out` owns a new string.
 */
enum FlStatus fl_graph_to_json(const struct FlGraph *graph, char **out);

/**
 * Computes the invariant fingerprint of the presented link, as JSON.
 *
 * # Safety
 *
 * `graph` must be a live handle; `out` must point to writable memory. On
 * success `*out` owns a new string.
 */
enum FlStatus fl_fingerprint_json(const struct FlGraph *graph, char **out);

/**
 * Writes the quasipositive band word of a connected graph, for example
 * `"s[1,2] s[1,3]"`.
 *
 * # Safety
 *
 * `graph` must be a live handle; `out` must point to writable memory. On
 * success `*out` owns a new string.
 */
enum FlStatus fl_band_word(const struct FlGraph *graph, char **out);

/**
 * Writes the Artin-generator expansion of the band word, for example
 * `"strands=2; +1 +1 +1"`.
 *
 * # Safety
 *
 * `graph` must be a live handle; `out` must point to writable memory. On
 * success `*out` owns a new string.
 */
enum FlStatus fl_artin_word(const struct FlGraph *graph, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 *
 * `text` must be NULL or a string from this library, not yet freed.
 */
void fl_string_free(char *text);

/**
 * Static description of a status code; never needs freeing.
 */
const char *fl_status_message(enum FlStatus status);

#endif  /* FORKLINK_H */
