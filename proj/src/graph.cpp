#include "chaincount/graph.hpp"

#include "chaincount/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace chaincount {

Graph BipartiteGraph::to_graph() const {
    Graph g;
    g.vertex_count = u_count + v_count;
    g.edges.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        g.edges.emplace_back(u, u_count + v);
    }
    return g;
}

BipartiteGraph expand(const ChainSpec& spec, std::int64_t max_edges) {
    const Integer total = edge_count(spec);
    if (total > max_edges) {
        fail(Errc::resource_limit,
             "expansion has " + total.get_str() + " edges, over the cap of " +
                 std::to_string(max_edges));
    }
    const DegreeProfile p = degree_profile(spec);
    const std::size_t h = spec.u_cells.size();

    BipartiteGraph g;
    g.u_count = p.u_prefix[h - 1];
    g.v_count = p.v_prefix[h - 1];
    g.edges.reserve(static_cast<std::size_t>(total.get_si()));
    std::int64_t u = 0;
    for (std::size_t i = 0; i < h; ++i) {
        const std::int64_t reach = p.u_degree[i]; // = |V_1| + ... for this cell
        for (std::int64_t k = 0; k < spec.u_cells[i]; ++k, ++u) {
            for (std::int64_t v = 0; v < reach; ++v) {
                g.edges.emplace_back(u, v);
            }
        }
    }
    return g;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        std::int64_t a = 0, b = 0;
        if (!(fields >> a) || !(fields >> b)) {
            fail(Errc::parse_error,
                 "line " + std::to_string(line_no) + ": expected two integers");
        }
        std::string rest;
        if (fields >> rest) {
            fail(Errc::parse_error,
                 "line " + std::to_string(line_no) + ": trailing token '" + rest + "'");
        }
        if (a < 0 || b < 0) {
            fail(Errc::parse_error,
                 "line " + std::to_string(line_no) + ": negative vertex label");
        }
        if (a == b) {
            fail(Errc::parse_error,
                 "line " + std::to_string(line_no) + ": self-loop on vertex " +
                     std::to_string(a));
        }
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
            fail(Errc::parse_error,
                 "line " + std::to_string(line_no) + ": duplicate edge " +
                     std::to_string(key.first) + " " + std::to_string(key.second));
        }
        raw.emplace_back(a, b);
    }

    // Compact labels to 0..n-1 in numeric order.
    std::map<std::int64_t, std::int64_t> id;
    for (const auto& [a, b] : raw) {
        id.emplace(a, 0);
        id.emplace(b, 0);
    }
    std::int64_t next = 0;
    for (auto& [label, compact] : id) {
        compact = next++;
    }

    Graph g;
    g.vertex_count = next;
    g.edges.reserve(raw.size());
    for (const auto& [a, b] : raw) {
        g.edges.emplace_back(id.at(a), id.at(b));
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::vector<std::pair<std::int64_t, std::int64_t>> sorted;
    sorted.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        sorted.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (const auto& [a, b] : sorted) {
        out += std::to_string(a);
        out += ' ';
        out += std::to_string(b);
        out += '\n';
    }
    return out;
}

std::string to_edge_list(const BipartiteGraph& g) {
    return to_edge_list(g.to_graph());
}

std::vector<std::vector<std::int64_t>> adjacency(const Graph& g) {
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(g.vertex_count));
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count) {
            fail(Errc::invalid_argument, "edge endpoint out of range");
        }
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
    }
    return adj;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count == 0) return true;
    const auto adj = adjacency(g);
    std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count), false);
    std::deque<std::int64_t> queue{0};
    visited[0] = true;
    std::int64_t reached = 1;
    while (!queue.empty()) {
        const std::int64_t v = queue.front();
        queue.pop_front();
        for (const std::int64_t w : adj[static_cast<std::size_t>(v)]) {
            if (!visited[static_cast<std::size_t>(w)]) {
                visited[static_cast<std::size_t>(w)] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == g.vertex_count;
}

} // namespace chaincount
