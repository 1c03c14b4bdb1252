#include "chaincount/recognizer.hpp"

#include "chaincount/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace chaincount {

Bipartition bipartition(const Graph& g) {
    if (g.vertex_count == 0) {
        fail(Errc::invalid_argument, "empty graph");
    }
    const auto adj = adjacency(g);
    constexpr std::uint8_t unassigned = 2;
    Bipartition bp;
    bp.side.assign(static_cast<std::size_t>(g.vertex_count), unassigned);
    std::deque<std::int64_t> queue{0};
    bp.side[0] = 0;
    std::int64_t reached = 1;
    while (!queue.empty()) {
        const std::int64_t v = queue.front();
        queue.pop_front();
        const std::uint8_t other = bp.side[static_cast<std::size_t>(v)] ^ 1;
        for (const std::int64_t w : adj[static_cast<std::size_t>(v)]) {
            auto& side = bp.side[static_cast<std::size_t>(w)];
            if (side == unassigned) {
                side = other;
                ++reached;
                queue.push_back(w);
            } else if (side != other) {
                fail(Errc::odd_cycle, "graph contains an odd cycle, not bipartite");
            }
        }
    }
    if (reached != g.vertex_count) {
        fail(Errc::disconnected, "graph is not connected");
    }
    return bp;
}

namespace {

struct CellGrouping {
    std::vector<std::vector<std::int64_t>> members; // by cell, degree descending
    std::vector<std::int64_t> sizes;
    std::vector<std::int64_t> degrees;
};

// Groups one side's vertices by identical neighborhoods and orders the
// groups by degree descending.
CellGrouping group_side(const std::vector<std::int64_t>& vertices,
                        const std::vector<std::vector<std::int64_t>>& adj) {
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> by_neighborhood;
    for (const std::int64_t v : vertices) {
        by_neighborhood[adj[static_cast<std::size_t>(v)]].push_back(v);
    }
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> groups(
        by_neighborhood.begin(), by_neighborhood.end());
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return a.first.size() > b.first.size();
    });
    CellGrouping out;
    for (auto& [neighborhood, members] : groups) {
        out.degrees.push_back(static_cast<std::int64_t>(neighborhood.size()));
        out.sizes.push_back(static_cast<std::int64_t>(members.size()));
        out.members.push_back(std::move(members));
    }
    return out;
}

// Distinct cells with equal degree cannot be nested.
void check_degrees_strict(const CellGrouping& cells) {
    for (std::size_t i = 0; i + 1 < cells.degrees.size(); ++i) {
        if (cells.degrees[i] == cells.degrees[i + 1]) {
            fail(Errc::not_nested,
                 "two cells share degree " + std::to_string(cells.degrees[i]) +
                     " but have different neighborhoods");
        }
    }
}

} // namespace

ChainSpec recognize_chain(const Graph& g) {
    const Bipartition bp = bipartition(g);
    const auto adj = adjacency(g);

    std::vector<std::int64_t> side0, side1;
    for (std::int64_t v = 0; v < g.vertex_count; ++v) {
        (bp.side[static_cast<std::size_t>(v)] == 0 ? side0 : side1).push_back(v);
    }
    if (side0.empty() || side1.empty()) {
        fail(Errc::cell_mismatch, "one side of the bipartition is empty");
    }

    const CellGrouping u_groups = group_side(side0, adj);
    const CellGrouping v_groups = group_side(side1, adj);
    const std::size_t h = u_groups.members.size();
    if (h != v_groups.members.size()) {
        fail(Errc::cell_mismatch,
             "sides split into " + std::to_string(h) + " and " +
                 std::to_string(v_groups.members.size()) + " cells");
    }
    check_degrees_strict(u_groups);
    check_degrees_strict(v_groups);

    // Cell rank of every side-1 vertex, then check that cell i on the
    // other side sees exactly the first h-i ranks, in full.
    std::vector<std::size_t> rank(static_cast<std::size_t>(g.vertex_count), 0);
    for (std::size_t j = 0; j < h; ++j) {
        for (const std::int64_t v : v_groups.members[j]) {
            rank[static_cast<std::size_t>(v)] = j;
        }
    }
    std::vector<std::int64_t> prefix(h, 0);
    for (std::size_t j = 0; j < h; ++j) {
        prefix[j] = v_groups.sizes[j] + (j > 0 ? prefix[j - 1] : 0);
    }
    for (std::size_t i = 0; i < h; ++i) {
        const auto& neighborhood = adj[static_cast<std::size_t>(u_groups.members[i][0])];
        const std::size_t want = h - 1 - i; // highest rank this cell may see
        for (const std::int64_t v : neighborhood) {
            if (rank[static_cast<std::size_t>(v)] > want) {
                fail(Errc::not_nested,
                     "cell " + std::to_string(i + 1) +
                         " reaches past its nesting range");
            }
        }
        if (static_cast<std::int64_t>(neighborhood.size()) != prefix[want]) {
            fail(Errc::not_nested,
                 "cell " + std::to_string(i + 1) + " covers only part of a cell");
        }
    }

    const ChainSpec spec = validate_spec(u_groups.sizes, v_groups.sizes);
    return canonical_orientation(spec);
}

} // namespace chaincount
