#pragma once

#include "chaincount/chain_spec.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace chaincount {

/// Simple undirected graph on vertices 0..vertex_count-1. No loops, no
/// duplicate edges.
struct Graph {
    std::int64_t vertex_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

/// Bipartite graph with an explicit two-coloring. Edge pairs index the
/// two sides separately: (u, v) with u in [0, u_count) and v in
/// [0, v_count). Expansion numbers vertices canonically: U cells first
/// in cell order, then V cells, so the global id of v is u_count + v.
struct BipartiteGraph {
    std::int64_t u_count = 0;
    std::int64_t v_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;

    std::int64_t vertex_count() const { return u_count + v_count; }
    Graph to_graph() const;
};

inline constexpr std::int64_t default_edge_limit = 10'000'000;

/// Explicit graph of a ChainSpec under the canonical vertex order.
/// Throws ResourceLimit when the expansion exceeds max_edges edges.
BipartiteGraph expand(const ChainSpec& spec,
                      std::int64_t max_edges = default_edge_limit);

/// Edge-list text: one "u v" pair of nonnegative integers per line, '#'
/// starts a comment. Vertex labels are compacted to 0..n-1 preserving
/// numeric order. Self-loops and duplicate edges are rejected.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Canonical edge-list text: one edge per line, endpoints in ascending
/// order, lines sorted.
std::string to_edge_list(const Graph& g);
std::string to_edge_list(const BipartiteGraph& g);

std::vector<std::vector<std::int64_t>> adjacency(const Graph& g);
bool is_connected(const Graph& g);

} // namespace chaincount
