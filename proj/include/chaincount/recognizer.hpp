#pragma once

#include "chaincount/chain_spec.hpp"
#include "chaincount/graph.hpp"

#include <cstdint>
#include <vector>

namespace chaincount {

/// Two-coloring of a connected bipartite graph: side[v] is 0 or 1.
/// Unique per connected graph up to swapping the sides.
struct Bipartition {
    std::vector<std::uint8_t> side;
};

/// Breadth-first two-coloring. Throws OddCycle when the graph is not
/// bipartite and Disconnected when it has more than one component.
Bipartition bipartition(const Graph& g);

/// Decides whether g is a connected double nested graph and returns the
/// canonical ChainSpec whose expansion is isomorphic to it. Cells are
/// groups of vertices with identical neighborhoods, ordered by degree
/// descending; the orientation follows canonical_orientation. Throws
/// OddCycle, Disconnected, NotNested or CellMismatch.
ChainSpec recognize_chain(const Graph& g);

} // namespace chaincount
