#pragma once

#include "chaincount/chain_spec.hpp"
#include "chaincount/errors.hpp"
#include "chaincount/graph.hpp"
#include "chaincount/recognizer.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace test_support {

using chaincount::ChainSpec;
using chaincount::Graph;

/// Every spec with 1..max_h cells per side and cell sizes 1..max_cell,
/// optionally capped by total vertex count.
inline std::vector<ChainSpec> spec_sweep(std::int64_t max_h, std::int64_t max_cell,
                                         std::int64_t max_vertices = 1'000'000) {
    std::vector<ChainSpec> specs;
    for (std::int64_t h = 1; h <= max_h; ++h) {
        std::vector<std::int64_t> digits(static_cast<std::size_t>(2 * h), 1);
        while (true) {
            const std::vector<std::int64_t> m(digits.begin(), digits.begin() + h);
            const std::vector<std::int64_t> n(digits.begin() + h, digits.end());
            ChainSpec spec{m, n};
            if (spec.vertex_count() <= max_vertices) {
                specs.push_back(std::move(spec));
            }
            std::size_t pos = digits.size();
            while (pos > 0 && digits[pos - 1] == max_cell) {
                digits[--pos] = 1;
            }
            if (pos == 0) break;
            ++digits[pos - 1];
        }
    }
    return specs;
}

inline ChainSpec random_spec(std::mt19937_64& rng, std::int64_t max_h,
                             std::int64_t max_cell, std::int64_t max_vertices) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const std::int64_t h = 1 + static_cast<std::int64_t>(rng() % max_h);
        std::vector<std::int64_t> m, n;
        std::int64_t total = 0;
        for (std::int64_t i = 0; i < 2 * h; ++i) {
            const std::int64_t size = 1 + static_cast<std::int64_t>(rng() % max_cell);
            (i < h ? m : n).push_back(size);
            total += size;
        }
        if (total <= max_vertices) return ChainSpec{std::move(m), std::move(n)};
    }
    return ChainSpec{{1}, {1}};
}

inline Graph random_tree(std::mt19937_64& rng, std::int64_t n) {
    Graph g;
    g.vertex_count = n;
    for (std::int64_t v = 1; v < n; ++v) {
        g.edges.emplace_back(static_cast<std::int64_t>(rng() % v), v);
    }
    return g;
}

inline Graph random_connected_graph(std::mt19937_64& rng, std::int64_t n,
                                    std::int64_t extra_edges) {
    Graph g = random_tree(rng, n);
    std::set<std::pair<std::int64_t, std::int64_t>> have(g.edges.begin(), g.edges.end());
    for (std::int64_t added = 0; added < extra_edges;) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % n);
        const std::int64_t b = static_cast<std::int64_t>(rng() % n);
        if (a == b) continue;
        const auto key = std::minmax(a, b);
        if (!have.insert(std::pair(key.first, key.second)).second) {
            ++added; // saturated graphs would spin forever otherwise
            continue;
        }
        g.edges.emplace_back(key.first, key.second);
        ++added;
    }
    return g;
}

/// Mechanical isomorphism check against expand(spec): groups both sides
/// of g by neighborhood, maps the groups onto the spec's cells in
/// degree order, relabels, and compares the canonical edge lists. Tries
/// both color orientations.
inline bool isomorphic_to_expansion(const Graph& g, const ChainSpec& spec) {
    using chaincount::adjacency;
    using chaincount::bipartition;
    using chaincount::expand;
    using chaincount::swap_colors;
    using chaincount::to_edge_list;

    chaincount::Bipartition bp;
    try {
        bp = bipartition(g);
    } catch (const chaincount::Error&) {
        return false;
    }
    const auto adj = adjacency(g);

    const auto side_groups = [&](std::uint8_t side) {
        std::vector<std::vector<std::int64_t>> groups;
        std::vector<std::vector<std::int64_t>> keys;
        for (std::int64_t v = 0; v < g.vertex_count; ++v) {
            if (bp.side[static_cast<std::size_t>(v)] != side) continue;
            const auto& key = adj[static_cast<std::size_t>(v)];
            auto it = std::find(keys.begin(), keys.end(), key);
            if (it == keys.end()) {
                keys.push_back(key);
                groups.emplace_back();
                it = keys.end() - 1;
            }
            groups[static_cast<std::size_t>(it - keys.begin())].push_back(v);
        }
        std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
            return adj[static_cast<std::size_t>(a[0])].size() >
                   adj[static_cast<std::size_t>(b[0])].size();
        });
        return groups;
    };

    const auto matches = [&](const ChainSpec& s, std::uint8_t u_side) {
        const auto u_groups = side_groups(u_side);
        const auto v_groups = side_groups(u_side ^ 1);
        if (u_groups.size() != s.u_cells.size() || v_groups.size() != s.v_cells.size()) {
            return false;
        }
        std::vector<std::int64_t> relabel(static_cast<std::size_t>(g.vertex_count), -1);
        std::int64_t next = 0;
        for (std::size_t i = 0; i < u_groups.size(); ++i) {
            if (static_cast<std::int64_t>(u_groups[i].size()) != s.u_cells[i]) return false;
            for (const std::int64_t v : u_groups[i]) relabel[static_cast<std::size_t>(v)] = next++;
        }
        for (std::size_t j = 0; j < v_groups.size(); ++j) {
            if (static_cast<std::int64_t>(v_groups[j].size()) != s.v_cells[j]) return false;
            for (const std::int64_t v : v_groups[j]) relabel[static_cast<std::size_t>(v)] = next++;
        }
        Graph relabeled;
        relabeled.vertex_count = g.vertex_count;
        for (const auto& [a, b] : g.edges) {
            relabeled.edges.emplace_back(relabel[static_cast<std::size_t>(a)],
                                         relabel[static_cast<std::size_t>(b)]);
        }
        return to_edge_list(relabeled) == to_edge_list(expand(s).to_graph());
    };

    return matches(spec, 0) || matches(spec, 1) || matches(swap_colors(spec), 0) ||
           matches(swap_colors(spec), 1);
}

} // namespace test_support

#define CHECK_FAILS_WITH(expected_errc, ...)                             \
    do {                                                                 \
        try {                                                            \
            (void)(__VA_ARGS__);                                         \
            FAIL("expected failure with "                                \
                 << chaincount::errc_name(expected_errc));               \
        } catch (const chaincount::Error& caught_) {                     \
            CHECK(std::string(chaincount::errc_name(caught_.code())) ==  \
                  chaincount::errc_name(expected_errc));                 \
        }                                                                \
    } while (0)
