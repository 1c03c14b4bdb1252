#include "chaincount.h"

#include "chaincount/chain_spec.hpp"
#include "chaincount/counter.hpp"
#include "chaincount/errors.hpp"
#include "chaincount/graph.hpp"
#include "chaincount/kirchhoff.hpp"
#include "chaincount/recognizer.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <string>

using chaincount::ChainSpec;
using chaincount::Errc;
using chaincount::Graph;

struct chaincount_spec {
    ChainSpec spec;
};

struct chaincount_graph {
    Graph graph;
};

namespace {

thread_local std::string last_error;

chaincount_status status_of(Errc code) {
    switch (code) {
        case Errc::empty_spec: return CHAINCOUNT_ERR_EMPTY_SPEC;
        case Errc::non_positive_cell: return CHAINCOUNT_ERR_NONPOSITIVE_CELL;
        case Errc::length_mismatch: return CHAINCOUNT_ERR_LENGTH_MISMATCH;
        case Errc::resource_limit: return CHAINCOUNT_ERR_RESOURCE_LIMIT;
        case Errc::odd_cycle: return CHAINCOUNT_ERR_ODD_CYCLE;
        case Errc::disconnected: return CHAINCOUNT_ERR_DISCONNECTED;
        case Errc::not_nested: return CHAINCOUNT_ERR_NOT_NESTED;
        case Errc::cell_mismatch: return CHAINCOUNT_ERR_CELL_MISMATCH;
        case Errc::zero_pivot: return CHAINCOUNT_ERR_ZERO_PIVOT;
        case Errc::singular_input: return CHAINCOUNT_ERR_SINGULAR;
        case Errc::parse_error: return CHAINCOUNT_ERR_PARSE;
        case Errc::invalid_argument: return CHAINCOUNT_ERR_INVALID_ARGUMENT;
        case Errc::trace_divergence:
        case Errc::internal: return CHAINCOUNT_ERR_INTERNAL;
    }
    return CHAINCOUNT_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, translating exceptions into status codes and the
// thread-local error message.
template <typename Fn>
chaincount_status guarded(Fn&& body) {
    try {
        body();
        last_error.clear();
        return CHAINCOUNT_OK;
    } catch (const chaincount::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return CHAINCOUNT_ERR_INTERNAL;
    }
}

chaincount_status require(bool ok, const char* what) {
    if (ok) return CHAINCOUNT_OK;
    last_error = what;
    return CHAINCOUNT_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* chaincount_version(void) { return "1.0.0"; }

const char* chaincount_status_name(chaincount_status status) {
    switch (status) {
        case CHAINCOUNT_OK: return "Ok";
        case CHAINCOUNT_ERR_EMPTY_SPEC: return "EmptySpec";
        case CHAINCOUNT_ERR_NONPOSITIVE_CELL: return "NonPositiveCell";
        case CHAINCOUNT_ERR_LENGTH_MISMATCH: return "LengthMismatch";
        case CHAINCOUNT_ERR_RESOURCE_LIMIT: return "ResourceLimit";
        case CHAINCOUNT_ERR_ODD_CYCLE: return "OddCycle";
        case CHAINCOUNT_ERR_DISCONNECTED: return "Disconnected";
        case CHAINCOUNT_ERR_NOT_NESTED: return "NotNested";
        case CHAINCOUNT_ERR_CELL_MISMATCH: return "CellMismatch";
        case CHAINCOUNT_ERR_ZERO_PIVOT: return "ZeroPivot";
        case CHAINCOUNT_ERR_SINGULAR: return "SingularInput";
        case CHAINCOUNT_ERR_PARSE: return "ParseError";
        case CHAINCOUNT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case CHAINCOUNT_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownStatus";
}

const char* chaincount_last_error(void) { return last_error.c_str(); }

void chaincount_string_free(char* s) { std::free(s); }

chaincount_status chaincount_spec_create(const int64_t* u_cells,
                                         const int64_t* v_cells, size_t cells,
                                         chaincount_spec** out) {
    if (auto bad = require(u_cells && v_cells && out, "null argument")) return bad;
    return guarded([&] {
        ChainSpec spec = chaincount::validate_spec(
            std::span<const int64_t>(u_cells, cells),
            std::span<const int64_t>(v_cells, cells));
        *out = new chaincount_spec{std::move(spec)};
    });
}

chaincount_status chaincount_spec_from_json(const char* json, chaincount_spec** out) {
    if (auto bad = require(json && out, "null argument")) return bad;
    return guarded([&] {
        const auto parsed = nlohmann::json::parse(json, nullptr, false);
        if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("m") ||
            !parsed.contains("n") || !parsed["m"].is_array() || !parsed["n"].is_array()) {
            chaincount::fail(Errc::parse_error,
                             "expected a JSON object {\"m\":[...],\"n\":[...]}");
        }
        std::vector<int64_t> m, n;
        for (const auto& x : parsed["m"]) {
            if (!x.is_number_integer()) {
                chaincount::fail(Errc::parse_error, "non-integer cell size in \"m\"");
            }
            m.push_back(x.get<int64_t>());
        }
        for (const auto& x : parsed["n"]) {
            if (!x.is_number_integer()) {
                chaincount::fail(Errc::parse_error, "non-integer cell size in \"n\"");
            }
            n.push_back(x.get<int64_t>());
        }
        ChainSpec spec = chaincount::validate_spec(m, n);
        *out = new chaincount_spec{std::move(spec)};
    });
}

chaincount_status chaincount_spec_to_json(const chaincount_spec* spec, char** out) {
    if (auto bad = require(spec && out, "null argument")) return bad;
    return guarded([&] {
        nlohmann::ordered_json j;
        j["m"] = spec->spec.u_cells;
        j["n"] = spec->spec.v_cells;
        *out = copy_string(j.dump());
    });
}

size_t chaincount_spec_cells(const chaincount_spec* spec) {
    return spec == nullptr ? 0 : spec->spec.u_cells.size();
}

chaincount_status chaincount_spec_copy_cells(const chaincount_spec* spec,
                                             int64_t* u_out, int64_t* v_out) {
    if (auto bad = require(spec && u_out && v_out, "null argument")) return bad;
    return guarded([&] {
        std::memcpy(u_out, spec->spec.u_cells.data(),
                    spec->spec.u_cells.size() * sizeof(int64_t));
        std::memcpy(v_out, spec->spec.v_cells.data(),
                    spec->spec.v_cells.size() * sizeof(int64_t));
    });
}

chaincount_status chaincount_spec_swap_colors(const chaincount_spec* spec,
                                              chaincount_spec** out) {
    if (auto bad = require(spec && out, "null argument")) return bad;
    return guarded([&] { *out = new chaincount_spec{chaincount::swap_colors(spec->spec)}; });
}

void chaincount_spec_free(chaincount_spec* spec) { delete spec; }

chaincount_status chaincount_count(const chaincount_spec* spec, char** tau_out,
                                   uint64_t* ops_out) {
    if (auto bad = require(spec && tau_out, "null argument")) return bad;
    return guarded([&] {
        const chaincount::CountResult result = chaincount::count_spanning_trees(spec->spec);
        *tau_out = copy_string(chaincount::decimal(result.tau));
        if (ops_out) *ops_out = result.ops;
    });
}

chaincount_status chaincount_complete_bipartite(int64_t m, int64_t n, char** tau_out) {
    if (auto bad = require(tau_out != nullptr, "null argument")) return bad;
    return guarded([&] {
        *tau_out = copy_string(chaincount::decimal(chaincount::tau_complete_bipartite(m, n)));
    });
}

chaincount_status chaincount_graph_from_edges(const int64_t* endpoints,
                                              size_t edge_count,
                                              chaincount_graph** out) {
    if (auto bad = require(out && (endpoints || edge_count == 0), "null argument")) {
        return bad;
    }
    return guarded([&] {
        std::string text;
        for (size_t i = 0; i < edge_count; ++i) {
            text += std::to_string(endpoints[2 * i]);
            text += ' ';
            text += std::to_string(endpoints[2 * i + 1]);
            text += '\n';
        }
        *out = new chaincount_graph{chaincount::parse_edge_list(text)};
    });
}

chaincount_status chaincount_graph_from_text(const char* text, chaincount_graph** out) {
    if (auto bad = require(text && out, "null argument")) return bad;
    return guarded([&] {
        *out = new chaincount_graph{chaincount::parse_edge_list(std::string(text))};
    });
}

chaincount_status chaincount_graph_to_text(const chaincount_graph* graph, char** out) {
    if (auto bad = require(graph && out, "null argument")) return bad;
    return guarded([&] { *out = copy_string(chaincount::to_edge_list(graph->graph)); });
}

int64_t chaincount_graph_vertices(const chaincount_graph* graph) {
    return graph == nullptr ? 0 : graph->graph.vertex_count;
}

int64_t chaincount_graph_edges(const chaincount_graph* graph) {
    return graph == nullptr ? 0 : static_cast<int64_t>(graph->graph.edges.size());
}

void chaincount_graph_free(chaincount_graph* graph) { delete graph; }

chaincount_status chaincount_expand(const chaincount_spec* spec, int64_t max_edges,
                                    chaincount_graph** out) {
    if (auto bad = require(spec && out, "null argument")) return bad;
    return guarded([&] {
        const int64_t cap = max_edges > 0 ? max_edges : chaincount::default_edge_limit;
        *out = new chaincount_graph{chaincount::expand(spec->spec, cap).to_graph()};
    });
}

chaincount_status chaincount_recognize(const chaincount_graph* graph,
                                       chaincount_spec** out) {
    if (auto bad = require(graph && out, "null argument")) return bad;
    return guarded([&] {
        *out = new chaincount_spec{chaincount::recognize_chain(graph->graph)};
    });
}

chaincount_status chaincount_oracle_count(const chaincount_graph* graph,
                                          char** tau_out, uint64_t* ops_out) {
    if (auto bad = require(graph && tau_out, "null argument")) return bad;
    try {
        uint64_t ops = 0;
        const chaincount::Integer tau = chaincount::count_oracle(graph->graph, &ops);
        *tau_out = copy_string(chaincount::decimal(tau));
        if (ops_out) *ops_out = ops;
        last_error.clear();
        return CHAINCOUNT_OK;
    } catch (const chaincount::Error& e) {
        last_error = e.what();
        if (e.code() == Errc::disconnected) {
            // A disconnected graph has no spanning tree: the count 0 is
            // still reported alongside the error.
            *tau_out = copy_string("0");
            if (ops_out) *ops_out = 0;
        }
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return CHAINCOUNT_ERR_INTERNAL;
    }
}

} // extern "C"
