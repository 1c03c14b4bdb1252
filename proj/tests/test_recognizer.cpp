#include "chaincount/errors.hpp"
#include "chaincount/graph.hpp"
#include "chaincount/recognizer.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace chaincount;
using test_support::isomorphic_to_expansion;
using test_support::spec_sweep;

namespace {

Graph cycle(std::int64_t k) {
    Graph g;
    g.vertex_count = k;
    for (std::int64_t v = 0; v < k; ++v) g.edges.emplace_back(v, (v + 1) % k);
    return g;
}

Graph path4() { return parse_edge_list(std::string("0 1\n1 2\n2 3\n")); }

} // namespace

TEST_CASE("bipartition colors a path alternately") {
    const Bipartition bp = bipartition(path4());
    CHECK(bp.side[0] == bp.side[2]);
    CHECK(bp.side[1] == bp.side[3]);
    CHECK(bp.side[0] != bp.side[1]);
}

TEST_CASE("bipartition rejects odd cycles and disconnected graphs") {
    CHECK_FAILS_WITH(Errc::odd_cycle, bipartition(cycle(3)));
    CHECK_FAILS_WITH(Errc::odd_cycle, bipartition(cycle(5)));
    CHECK_FAILS_WITH(Errc::disconnected,
                     bipartition(Graph{4, {{0, 1}, {2, 3}}}));
    CHECK_FAILS_WITH(Errc::invalid_argument, bipartition(Graph{}));
}

TEST_CASE("recognize_chain recovers worked examples") {
    CHECK(recognize_chain(expand(ChainSpec{{1, 1}, {2, 2}}).to_graph()) ==
          ChainSpec{{1, 1}, {2, 2}});
    CHECK(recognize_chain(path4()) == ChainSpec{{1, 1}, {1, 1}});
    // Both orientations of the complete bipartite graph resolve to the
    // one with the larger first-cell degree on the U side.
    CHECK(recognize_chain(expand(ChainSpec{{3}, {2}}).to_graph()) == ChainSpec{{2}, {3}});
    CHECK(recognize_chain(expand(ChainSpec{{2}, {3}}).to_graph()) == ChainSpec{{2}, {3}});
    CHECK(recognize_chain(expand(ChainSpec{{1}, {3}}).to_graph()) == ChainSpec{{1}, {3}});
}

TEST_CASE("recognize_chain round-trips the sweep") {
    for (const ChainSpec& spec : spec_sweep(3, 3, 60)) {
        const ChainSpec recovered = recognize_chain(expand(spec).to_graph());
        CHECK(recovered == canonical_orientation(spec));
        if (spec == canonical_orientation(spec)) {
            CHECK(recovered == spec);
        }
    }
}

TEST_CASE("recognize_chain round-trips randomized specs") {
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 60; ++t) {
        const ChainSpec spec = test_support::random_spec(rng, 5, 5, 60);
        const ChainSpec recovered = recognize_chain(expand(spec).to_graph());
        CHECK(recovered == canonical_orientation(spec));
    }
}

TEST_CASE("accepted graphs are isomorphic to the recovered expansion") {
    std::mt19937_64 rng(7);
    for (const ChainSpec& spec : spec_sweep(3, 3, 40)) {
        const Graph g = expand(spec).to_graph();
        CHECK(isomorphic_to_expansion(g, recognize_chain(g)));
    }
    for (int t = 0; t < 25; ++t) {
        const Graph g = expand(test_support::random_spec(rng, 4, 6, 50)).to_graph();
        CHECK(isomorphic_to_expansion(g, recognize_chain(g)));
    }
}

TEST_CASE("recognize_chain rejects non-chain graphs with the right reason") {
    CHECK_FAILS_WITH(Errc::odd_cycle, recognize_chain(cycle(3)));
    CHECK_FAILS_WITH(Errc::odd_cycle, recognize_chain(cycle(5)));
    CHECK_FAILS_WITH(Errc::disconnected,
                     recognize_chain(parse_edge_list(std::string("0 1\n2 3\n"))));
    // Hexagon: neighborhoods have equal degrees but no containment order.
    CHECK_FAILS_WITH(Errc::not_nested, recognize_chain(cycle(6)));
    // Five-vertex path: three cells on one side, two on the other.
    CHECK_FAILS_WITH(Errc::cell_mismatch,
                     recognize_chain(parse_edge_list(std::string("0 1\n1 2\n2 3\n3 4\n"))));
}

TEST_CASE("adding an edge inside a color class breaks recognition") {
    for (const ChainSpec& spec : spec_sweep(2, 3, 30)) {
        Graph g = expand(spec).to_graph();
        const std::int64_t u_count = spec.u_total();
        if (u_count >= 2) {
            Graph broken = g;
            broken.edges.emplace_back(0, 1); // two U-side vertices
            CHECK_THROWS_AS((void)recognize_chain(broken), Error);
        }
        if (spec.v_total() >= 2) {
            Graph broken = g;
            broken.edges.emplace_back(u_count, u_count + 1);
            CHECK_THROWS_AS((void)recognize_chain(broken), Error);
        }
    }
}

TEST_CASE("isolated vertices are rejected as disconnected") {
    CHECK_FAILS_WITH(Errc::disconnected, recognize_chain(Graph{3, {{0, 1}}}));
}
