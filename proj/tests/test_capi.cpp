// Exercises the shared-library surface through chaincount.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaincount.h"

#include <cstdint>
#include <string>
#include <vector>

namespace {

struct Spec {
    chaincount_spec* handle = nullptr;
    ~Spec() { chaincount_spec_free(handle); }
};

struct GraphHandle {
    chaincount_graph* handle = nullptr;
    ~GraphHandle() { chaincount_graph_free(handle); }
};

std::string take(char* s) {
    std::string out(s);
    chaincount_string_free(s);
    return out;
}

} // namespace

TEST_CASE("spec create, json round trip and accessors") {
    const std::vector<int64_t> m{1, 2}, n{2, 1};
    Spec spec;
    REQUIRE(chaincount_spec_create(m.data(), n.data(), 2, &spec.handle) == CHAINCOUNT_OK);
    CHECK(chaincount_spec_cells(spec.handle) == 2);

    char* json = nullptr;
    REQUIRE(chaincount_spec_to_json(spec.handle, &json) == CHAINCOUNT_OK);
    const std::string text = take(json);
    CHECK(text == "{\"m\":[1,2],\"n\":[2,1]}");

    Spec parsed;
    REQUIRE(chaincount_spec_from_json(text.c_str(), &parsed.handle) == CHAINCOUNT_OK);
    std::vector<int64_t> m2(2), n2(2);
    REQUIRE(chaincount_spec_copy_cells(parsed.handle, m2.data(), n2.data()) ==
            CHAINCOUNT_OK);
    CHECK(m2 == m);
    CHECK(n2 == n);

    Spec swapped;
    REQUIRE(chaincount_spec_swap_colors(spec.handle, &swapped.handle) == CHAINCOUNT_OK);
    REQUIRE(chaincount_spec_copy_cells(swapped.handle, m2.data(), n2.data()) ==
            CHAINCOUNT_OK);
    CHECK(m2 == n);
    CHECK(n2 == m);
}

TEST_CASE("spec errors map to status codes with detail") {
    Spec spec;
    const std::vector<int64_t> m{1, 0}, n{2, 2};
    CHECK(chaincount_spec_create(m.data(), n.data(), 2, &spec.handle) ==
          CHAINCOUNT_ERR_NONPOSITIVE_CELL);
    CHECK(std::string(chaincount_last_error()).size() > 0);

    CHECK(chaincount_spec_from_json("{\"m\":[1]}", &spec.handle) == CHAINCOUNT_ERR_PARSE);
    CHECK(chaincount_spec_from_json("not json", &spec.handle) == CHAINCOUNT_ERR_PARSE);
    CHECK(chaincount_spec_from_json("{\"m\":[],\"n\":[]}", &spec.handle) ==
          CHAINCOUNT_ERR_EMPTY_SPEC);
    CHECK(chaincount_spec_create(nullptr, nullptr, 0, &spec.handle) ==
          CHAINCOUNT_ERR_INVALID_ARGUMENT);
    CHECK(spec.handle == nullptr);
}

TEST_CASE("counting through the C surface") {
    Spec spec;
    REQUIRE(chaincount_spec_from_json("{\"m\":[1,1],\"n\":[2,2]}", &spec.handle) ==
            CHAINCOUNT_OK);
    char* tau = nullptr;
    uint64_t ops = 0;
    REQUIRE(chaincount_count(spec.handle, &tau, &ops) == CHAINCOUNT_OK);
    CHECK(take(tau) == "4");
    CHECK(ops > 0);

    char* k34 = nullptr;
    REQUIRE(chaincount_complete_bipartite(3, 4, &k34) == CHAINCOUNT_OK);
    CHECK(take(k34) == "432");
    CHECK(chaincount_complete_bipartite(0, 4, &k34) == CHAINCOUNT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graph construction, expansion and text") {
    Spec spec;
    REQUIRE(chaincount_spec_from_json("{\"m\":[1],\"n\":[1]}", &spec.handle) ==
            CHAINCOUNT_OK);
    GraphHandle g;
    REQUIRE(chaincount_expand(spec.handle, 0, &g.handle) == CHAINCOUNT_OK);
    CHECK(chaincount_graph_vertices(g.handle) == 2);
    CHECK(chaincount_graph_edges(g.handle) == 1);
    char* text = nullptr;
    REQUIRE(chaincount_graph_to_text(g.handle, &text) == CHAINCOUNT_OK);
    CHECK(take(text) == "0 1\n");

    Spec big;
    REQUIRE(chaincount_spec_from_json("{\"m\":[100],\"n\":[100]}", &big.handle) ==
            CHAINCOUNT_OK);
    GraphHandle capped;
    CHECK(chaincount_expand(big.handle, 50, &capped.handle) ==
          CHAINCOUNT_ERR_RESOURCE_LIMIT);

    GraphHandle from_text;
    CHECK(chaincount_graph_from_text("0 1\n1 1\n", &from_text.handle) ==
          CHAINCOUNT_ERR_PARSE);
    CHECK(chaincount_graph_from_text("0 1\n1 0\n", &from_text.handle) ==
          CHAINCOUNT_ERR_PARSE);
    REQUIRE(chaincount_graph_from_text("0 1\n# c\n1 2\n", &from_text.handle) ==
            CHAINCOUNT_OK);
    CHECK(chaincount_graph_vertices(from_text.handle) == 3);

    const int64_t endpoints[] = {0, 1, 1, 2, 2, 3};
    GraphHandle from_edges;
    REQUIRE(chaincount_graph_from_edges(endpoints, 3, &from_edges.handle) ==
            CHAINCOUNT_OK);
    CHECK(chaincount_graph_edges(from_edges.handle) == 3);
}

TEST_CASE("recognition through the C surface") {
    Spec spec;
    REQUIRE(chaincount_spec_from_json("{\"m\":[1,2],\"n\":[2,1]}", &spec.handle) ==
            CHAINCOUNT_OK);
    GraphHandle g;
    REQUIRE(chaincount_expand(spec.handle, 0, &g.handle) == CHAINCOUNT_OK);
    Spec recovered;
    REQUIRE(chaincount_recognize(g.handle, &recovered.handle) == CHAINCOUNT_OK);
    char* json = nullptr;
    REQUIRE(chaincount_spec_to_json(recovered.handle, &json) == CHAINCOUNT_OK);
    CHECK(take(json) == "{\"m\":[1,2],\"n\":[2,1]}");

    GraphHandle triangle;
    REQUIRE(chaincount_graph_from_text("0 1\n1 2\n2 0\n", &triangle.handle) ==
            CHAINCOUNT_OK);
    Spec rejected;
    CHECK(chaincount_recognize(triangle.handle, &rejected.handle) ==
          CHAINCOUNT_ERR_ODD_CYCLE);
    CHECK(rejected.handle == nullptr);
}

TEST_CASE("oracle through the C surface") {
    GraphHandle triangle;
    REQUIRE(chaincount_graph_from_text("0 1\n1 2\n2 0\n", &triangle.handle) ==
            CHAINCOUNT_OK);
    char* tau = nullptr;
    uint64_t ops = 0;
    REQUIRE(chaincount_oracle_count(triangle.handle, &tau, &ops) == CHAINCOUNT_OK);
    CHECK(take(tau) == "3");
    CHECK(ops > 0);

    // Disconnected: error plus the count 0 for callers that want it.
    GraphHandle split;
    REQUIRE(chaincount_graph_from_text("0 1\n2 3\n", &split.handle) == CHAINCOUNT_OK);
    char* zero = nullptr;
    CHECK(chaincount_oracle_count(split.handle, &zero, nullptr) ==
          CHAINCOUNT_ERR_DISCONNECTED);
    CHECK(take(zero) == "0");
}

TEST_CASE("status names and version") {
    CHECK(std::string(chaincount_status_name(CHAINCOUNT_OK)) == "Ok");
    CHECK(std::string(chaincount_status_name(CHAINCOUNT_ERR_ODD_CYCLE)) == "OddCycle");
    CHECK(std::string(chaincount_status_name(CHAINCOUNT_ERR_NOT_NESTED)) == "NotNested");
    CHECK(std::string(chaincount_version()).size() > 0);
}
