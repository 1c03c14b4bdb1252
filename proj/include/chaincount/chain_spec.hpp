#pragma once

#include "chaincount/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chaincount {

/// Parameter vector of a double nested (bipartite chain) graph: h cells
/// per side, U-side cell sizes u_cells[0..h), V-side cell sizes
/// v_cells[0..h). Every vertex of U-cell i is adjacent to exactly the
/// vertices of V-cells 0..h-1-i.
struct ChainSpec {
    std::vector<std::int64_t> u_cells;
    std::vector<std::int64_t> v_cells;

    std::int64_t cells() const { return static_cast<std::int64_t>(u_cells.size()); }
    std::int64_t u_total() const;
    std::int64_t v_total() const;
    std::int64_t vertex_count() const { return u_total() + v_total(); }

    bool operator==(const ChainSpec&) const = default;
};

/// Checks a raw sequence pair and returns the ChainSpec it names.
/// Throws EmptySpec, NonPositiveCell or LengthMismatch.
ChainSpec validate_spec(std::span<const std::int64_t> u_cells,
                        std::span<const std::int64_t> v_cells);

/// Exchanges the two color classes; the expanded graphs are isomorphic.
ChainSpec swap_colors(const ChainSpec& spec);

/// The orientation the recognizer emits: the side whose first cell has
/// the larger common degree becomes U, ties broken toward the
/// lexicographically smaller U-side size sequence.
ChainSpec canonical_orientation(const ChainSpec& spec);

/// Per-cell degree data consumed by the counting algorithm.
///
/// u_degree[i] is the common degree of every U-cell-i vertex (the total
/// size of the V cells it sees); v_degree[j] likewise on the V side.
/// u_prefix / v_prefix are cumulative cell sizes. last_v_reduced is the
/// size of the last V cell after one vertex is deleted for the cofactor;
/// it is engaged only when that cell has two or more vertices (a
/// single-vertex last cell disappears entirely and is handled
/// structurally by the counter).
struct DegreeProfile {
    std::vector<std::int64_t> u_degree;
    std::vector<std::int64_t> v_degree;
    std::vector<std::int64_t> u_prefix;
    std::vector<std::int64_t> v_prefix;
    std::optional<std::int64_t> last_v_reduced;
};

DegreeProfile degree_profile(const ChainSpec& spec);

/// Number of edges of the expansion, exact.
Integer edge_count(const ChainSpec& spec);

} // namespace chaincount
