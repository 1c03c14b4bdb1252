/* C interface to the chaincount library: exact spanning tree counting
 * for double nested (bipartite chain) graphs, plus the matrix-tree
 * oracle, recognizer and generator behind opaque handles.
 *
 * Every fallible function returns a chaincount_status and writes its
 * result through out parameters. On failure the out parameters are left
 * untouched unless documented otherwise, and chaincount_last_error()
 * returns a thread-local human-readable detail message. Strings handed
 * out by the library are heap-allocated and must be released with
 * chaincount_string_free.
 */

#ifndef CHAINCOUNT_H
#define CHAINCOUNT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chaincount_status {
    CHAINCOUNT_OK = 0,
    CHAINCOUNT_ERR_EMPTY_SPEC = 1,
    CHAINCOUNT_ERR_NONPOSITIVE_CELL = 2,
    CHAINCOUNT_ERR_LENGTH_MISMATCH = 3,
    CHAINCOUNT_ERR_RESOURCE_LIMIT = 4,
    CHAINCOUNT_ERR_ODD_CYCLE = 5,
    CHAINCOUNT_ERR_DISCONNECTED = 6,
    CHAINCOUNT_ERR_NOT_NESTED = 7,
    CHAINCOUNT_ERR_CELL_MISMATCH = 8,
    CHAINCOUNT_ERR_ZERO_PIVOT = 9,
    CHAINCOUNT_ERR_SINGULAR = 10,
    CHAINCOUNT_ERR_PARSE = 11,
    CHAINCOUNT_ERR_INVALID_ARGUMENT = 12,
    CHAINCOUNT_ERR_INTERNAL = 13
} chaincount_status;

/// Chain graph description: cell sizes of both color classes.
typedef struct chaincount_spec chaincount_spec;

/// Simple undirected graph held as a compacted edge list.
typedef struct chaincount_graph chaincount_graph;

const char* chaincount_version(void);

/// Stable name of a status code ("OddCycle", "NotNested", ...).
const char* chaincount_status_name(chaincount_status status);

/// Detail message of the last failure on this thread; empty when the
/// last call succeeded.
const char* chaincount_last_error(void);

/// Releases any string returned through a char** out parameter.
void chaincount_string_free(char* s);

/* ---- specs ---- */

/// Builds a spec from two cell-size arrays of length `cells`.
chaincount_status chaincount_spec_create(const int64_t* u_cells,
                                         const int64_t* v_cells,
                                         size_t cells,
                                         chaincount_spec** out);

/// Parses {"m":[...],"n":[...]}.
chaincount_status chaincount_spec_from_json(const char* json,
                                            chaincount_spec** out);

/// Serializes back to {"m":[...],"n":[...]}.
chaincount_status chaincount_spec_to_json(const chaincount_spec* spec,
                                          char** out);

size_t chaincount_spec_cells(const chaincount_spec* spec);

/// Copies the cell sizes into caller arrays of length
/// chaincount_spec_cells(spec).
chaincount_status chaincount_spec_copy_cells(const chaincount_spec* spec,
                                             int64_t* u_out,
                                             int64_t* v_out);

/// Exchanges the two color classes.
chaincount_status chaincount_spec_swap_colors(const chaincount_spec* spec,
                                              chaincount_spec** out);

void chaincount_spec_free(chaincount_spec* spec);

/* ---- counting ---- */

/// Exact spanning tree count of the spec's graph, linear in the vertex
/// count, written as a decimal string. ops_out (nullable) receives the
/// number of exact rational multiply/divide operations performed.
chaincount_status chaincount_count(const chaincount_spec* spec,
                                   char** tau_out,
                                   uint64_t* ops_out);

/// m^(n-1) * n^(m-1) as a decimal string.
chaincount_status chaincount_complete_bipartite(int64_t m, int64_t n,
                                                char** tau_out);

/* ---- graphs ---- */

/// Builds a graph from `edge_count` endpoint pairs laid out
/// [u0, v0, u1, v1, ...]. Labels are compacted; loops and duplicate
/// edges are rejected.
chaincount_status chaincount_graph_from_edges(const int64_t* endpoints,
                                              size_t edge_count,
                                              chaincount_graph** out);

/// Parses edge-list text: one "u v" pair per line, '#' comments.
chaincount_status chaincount_graph_from_text(const char* text,
                                             chaincount_graph** out);

/// Canonical edge-list text of the graph.
chaincount_status chaincount_graph_to_text(const chaincount_graph* graph,
                                           char** out);

int64_t chaincount_graph_vertices(const chaincount_graph* graph);
int64_t chaincount_graph_edges(const chaincount_graph* graph);

void chaincount_graph_free(chaincount_graph* graph);

/// Expands a spec to its explicit graph under the canonical vertex
/// order. max_edges caps the expansion; pass 0 for the default cap of
/// 10^7 edges.
chaincount_status chaincount_expand(const chaincount_spec* spec,
                                    int64_t max_edges,
                                    chaincount_graph** out);

/// Recovers the canonical spec of a connected double nested graph.
chaincount_status chaincount_recognize(const chaincount_graph* graph,
                                       chaincount_spec** out);

/// Spanning tree count of an arbitrary connected graph via the
/// Kirchhoff cofactor; cubic, exact. On a disconnected graph returns
/// CHAINCOUNT_ERR_DISCONNECTED and sets *tau_out to "0". ops_out
/// (nullable) receives the big-integer multiply/divide count.
chaincount_status chaincount_oracle_count(const chaincount_graph* graph,
                                          char** tau_out,
                                          uint64_t* ops_out);

#ifdef __cplusplus
}
#endif

#endif /* CHAINCOUNT_H */
