// Command-line front end for the chaincount shared library. Talks to
// the library exclusively through the C API in chaincount.h.

#include "chaincount.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::ordered_json;

// Exit codes are part of the interface: 0 success, 1 malformed input,
// 2 recognition/graph rejection, 3 verification mismatch.
constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_rejected = 2;
constexpr int exit_mismatch = 3;

struct StringDeleter {
    void operator()(char* s) const { chaincount_string_free(s); }
};
using LibString = std::unique_ptr<char, StringDeleter>;

struct SpecDeleter {
    void operator()(chaincount_spec* s) const { chaincount_spec_free(s); }
};
using Spec = std::unique_ptr<chaincount_spec, SpecDeleter>;

struct GraphDeleter {
    void operator()(chaincount_graph* g) const { chaincount_graph_free(g); }
};
using GraphHandle = std::unique_ptr<chaincount_graph, GraphDeleter>;

class CliError : public std::runtime_error {
public:
    CliError(int exit_code, const std::string& message)
        : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

int exit_code_for(chaincount_status status) {
    switch (status) {
        case CHAINCOUNT_ERR_ODD_CYCLE:
        case CHAINCOUNT_ERR_DISCONNECTED:
        case CHAINCOUNT_ERR_NOT_NESTED:
        case CHAINCOUNT_ERR_CELL_MISMATCH:
        case CHAINCOUNT_ERR_SINGULAR:
            return exit_rejected;
        default:
            return exit_input;
    }
}

void check(chaincount_status status) {
    if (status == CHAINCOUNT_OK) return;
    std::string message = chaincount_status_name(status);
    const char* detail = chaincount_last_error();
    if (detail != nullptr && detail[0] != '\0') {
        message += ": ";
        message += detail;
    }
    throw CliError(exit_code_for(status), message);
}

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::int64_t edge_cap_from_env() {
    const char* raw = std::getenv("CHAINCOUNT_MAX_EDGES");
    if (raw == nullptr || raw[0] == '\0') return 0; // library default
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0) {
        throw CliError(exit_input, "CHAINCOUNT_MAX_EDGES must be a positive integer");
    }
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(exit_input, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CliError(exit_input, "bad " + what + " entry '" + item + "'");
        }
    }
    if (values.empty()) throw CliError(exit_input, what + " list is empty");
    return values;
}

// Inline form "m=1,1;n=2,2".
Spec spec_from_terse(const std::string& text) {
    std::optional<std::vector<std::int64_t>> m, n;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) {
            throw CliError(exit_input, "bad spec fragment '" + part + "'");
        }
        const std::string key = part.substr(0, eq);
        const auto values = parse_int_list(part.substr(eq + 1), "cell size");
        if (key == "m") {
            m = values;
        } else if (key == "n") {
            n = values;
        } else {
            throw CliError(exit_input, "unknown spec key '" + key + "'");
        }
    }
    if (!m || !n) throw CliError(exit_input, "spec needs both m= and n=");
    chaincount_spec* raw = nullptr;
    check(chaincount_spec_create(m->data(), n->data(), m->size(), &raw));
    return Spec(raw);
}

Spec spec_from_json_text(const std::string& text) {
    chaincount_spec* raw = nullptr;
    check(chaincount_spec_from_json(text.c_str(), &raw));
    return Spec(raw);
}

// Accepts inline JSON, the terse m=..;n=.. form, or a path to a file
// holding either.
Spec load_spec(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return spec_from_json_text(arg);
    if (arg.find('=') != std::string::npos) return spec_from_terse(arg);
    const std::string contents = read_file(arg);
    const auto start = contents.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && contents[start] == '{') {
        return spec_from_json_text(contents);
    }
    return spec_from_terse(contents);
}

GraphHandle load_graph(const std::string& path) {
    const std::string contents = read_file(path);
    chaincount_graph* raw = nullptr;
    check(chaincount_graph_from_text(contents.c_str(), &raw));
    return GraphHandle(raw);
}

std::string spec_json(const chaincount_spec* spec) {
    char* raw = nullptr;
    check(chaincount_spec_to_json(spec, &raw));
    return std::string(LibString(raw).get());
}

void emit_report(const ordered_json& report) { std::cout << report.dump() << "\n"; }

[[noreturn]] void fail_cli(const CliError& e, bool json_mode, const std::string& command,
                           const std::string& input) {
    if (json_mode) {
        ordered_json report;
        report["command"] = command;
        report["input"] = input;
        report["status"] = e.what();
        emit_report(report);
    }
    std::cerr << "error: " << e.what() << "\n";
    std::exit(e.exit_code());
}

// ---- count ----

int run_count(const std::string& spec_arg, const std::string& edges_path, bool json_mode) {
    const std::string input = !spec_arg.empty() ? spec_arg : edges_path;
    try {
        const std::int64_t started = now_ns();
        Spec spec = !spec_arg.empty()
                        ? load_spec(spec_arg)
                        : [&] {
                              GraphHandle graph = load_graph(edges_path);
                              chaincount_spec* raw = nullptr;
                              check(chaincount_recognize(graph.get(), &raw));
                              return Spec(raw);
                          }();
        char* tau_raw = nullptr;
        std::uint64_t ops = 0;
        check(chaincount_count(spec.get(), &tau_raw, &ops));
        const LibString tau(tau_raw);
        const std::int64_t elapsed = now_ns() - started;
        if (json_mode) {
            ordered_json report;
            report["command"] = "count";
            report["input"] = input;
            report["status"] = "ok";
            report["result"] = std::string(tau.get());
            report["wall_ns"] = elapsed;
            report["ops"] = ops;
            emit_report(report);
        } else {
            std::cout << tau.get() << "\n";
        }
        return exit_ok;
    } catch (const CliError& e) {
        fail_cli(e, json_mode, "count", input);
    }
}

// ---- oracle ----

int run_oracle(const std::string& edges_path, bool json_mode) {
    try {
        const std::int64_t started = now_ns();
        GraphHandle graph = load_graph(edges_path);
        char* tau_raw = nullptr;
        std::uint64_t ops = 0;
        check(chaincount_oracle_count(graph.get(), &tau_raw, &ops));
        const LibString tau(tau_raw);
        const std::int64_t elapsed = now_ns() - started;
        if (json_mode) {
            ordered_json report;
            report["command"] = "oracle";
            report["input"] = edges_path;
            report["status"] = "ok";
            report["result"] = std::string(tau.get());
            report["wall_ns"] = elapsed;
            report["ops"] = ops;
            emit_report(report);
        } else {
            std::cout << tau.get() << "\n";
        }
        return exit_ok;
    } catch (const CliError& e) {
        fail_cli(e, json_mode, "oracle", edges_path);
    }
}

// ---- recognize ----

int run_recognize(const std::string& edges_path, bool json_mode) {
    try {
        const std::int64_t started = now_ns();
        GraphHandle graph = load_graph(edges_path);
        chaincount_spec* raw = nullptr;
        check(chaincount_recognize(graph.get(), &raw));
        const Spec spec(raw);
        const std::string result = spec_json(spec.get());
        const std::int64_t elapsed = now_ns() - started;
        if (json_mode) {
            ordered_json report;
            report["command"] = "recognize";
            report["input"] = edges_path;
            report["status"] = "ok";
            report["result"] = result;
            report["wall_ns"] = elapsed;
            emit_report(report);
        } else {
            std::cout << result << "\n";
        }
        return exit_ok;
    } catch (const CliError& e) {
        fail_cli(e, json_mode, "recognize", edges_path);
    }
}

// ---- generate ----

int run_generate(const std::string& spec_arg, const std::string& out_path) {
    try {
        Spec spec = load_spec(spec_arg);
        chaincount_graph* graph_raw = nullptr;
        check(chaincount_expand(spec.get(), edge_cap_from_env(), &graph_raw));
        const GraphHandle graph(graph_raw);
        char* text_raw = nullptr;
        check(chaincount_graph_to_text(graph.get(), &text_raw));
        const LibString text(text_raw);
        if (out_path.empty() || out_path == "-") {
            std::cout << text.get();
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw CliError(exit_input, "cannot write " + out_path);
            out << text.get();
            if (!out.flush()) throw CliError(exit_input, "cannot write " + out_path);
        }
        return exit_ok;
    } catch (const CliError& e) {
        fail_cli(e, false, "generate", spec_arg);
    }
}

// ---- verify ----

struct VerifyCase {
    std::string descriptor;
    std::string counter;
    std::string oracle;
};

// Counter vs matrix-tree oracle on one spec; single-cell specs are
// additionally held against the complete-bipartite closed form. Returns
// a mismatch record when anything disagrees.
std::optional<VerifyCase> check_spec(const chaincount_spec* spec, std::int64_t edge_cap) {
    char* tau_raw = nullptr;
    check(chaincount_count(spec, &tau_raw, nullptr));
    const LibString tau(tau_raw);

    chaincount_graph* graph_raw = nullptr;
    check(chaincount_expand(spec, edge_cap, &graph_raw));
    const GraphHandle graph(graph_raw);
    char* oracle_raw = nullptr;
    check(chaincount_oracle_count(graph.get(), &oracle_raw, nullptr));
    const LibString oracle(oracle_raw);

    std::string reference = oracle.get();
    if (chaincount_spec_cells(spec) == 1 && reference == tau.get()) {
        std::int64_t m = 0, n = 0;
        check(chaincount_spec_copy_cells(spec, &m, &n));
        char* closed_raw = nullptr;
        check(chaincount_complete_bipartite(m, n, &closed_raw));
        reference = LibString(closed_raw).get();
    }

    if (std::string(tau.get()) != reference) {
        char* json_raw = nullptr;
        check(chaincount_spec_to_json(spec, &json_raw));
        const LibString json(json_raw);
        return VerifyCase{json.get(), tau.get(), reference};
    }
    return std::nullopt;
}

int run_verify(std::int64_t max_h, std::int64_t max_cell, std::int64_t trials,
               std::uint64_t seed, std::int64_t max_vertices, bool json_mode) {
    try {
        if (max_h < 1 || max_cell < 1 || trials < 0 || max_vertices < 2) {
            throw CliError(exit_input, "bounds must be positive");
        }
        const std::int64_t started = now_ns();
        const std::int64_t edge_cap = edge_cap_from_env();
        std::vector<VerifyCase> mismatches;
        std::int64_t exhaustive = 0;

        std::vector<std::int64_t> digits;
        for (std::int64_t h = 1; h <= max_h; ++h) {
            digits.assign(static_cast<std::size_t>(2 * h), 1);
            while (true) {
                chaincount_spec* raw = nullptr;
                check(chaincount_spec_create(digits.data(),
                                             digits.data() + h,
                                             static_cast<std::size_t>(h), &raw));
                const Spec spec(raw);
                ++exhaustive;
                if (auto bad = check_spec(spec.get(), edge_cap)) {
                    mismatches.push_back(std::move(*bad));
                }
                std::size_t pos = digits.size();
                while (pos > 0 && digits[pos - 1] == max_cell) {
                    digits[--pos] = 1;
                }
                if (pos == 0) break;
                ++digits[pos - 1];
            }
        }

        std::mt19937_64 rng(seed);
        std::int64_t random_done = 0;
        for (std::int64_t t = 0; t < trials; ++t) {
            std::vector<std::int64_t> m, n;
            for (int attempt = 0; attempt < 1000; ++attempt) {
                const std::int64_t h = 1 + static_cast<std::int64_t>(rng() % 4);
                m.clear();
                n.clear();
                std::int64_t total = 0;
                for (std::int64_t i = 0; i < 2 * h; ++i) {
                    const std::int64_t size = 1 + static_cast<std::int64_t>(rng() % 8);
                    (i < h ? m : n).push_back(size);
                    total += size;
                }
                if (total <= max_vertices) break;
            }
            chaincount_spec* raw = nullptr;
            check(chaincount_spec_create(m.data(), n.data(), m.size(), &raw));
            const Spec spec(raw);
            ++random_done;
            if (auto bad = check_spec(spec.get(), edge_cap)) {
                mismatches.push_back(std::move(*bad));
            }
        }

        const std::int64_t elapsed = now_ns() - started;
        const std::int64_t checked = exhaustive + random_done;
        if (json_mode) {
            ordered_json report;
            report["command"] = "verify";
            report["input"] = "max-h=" + std::to_string(max_h) +
                              " max-cell=" + std::to_string(max_cell) +
                              " trials=" + std::to_string(trials) +
                              " seed=" + std::to_string(seed);
            report["status"] = mismatches.empty() ? "ok" : "mismatch";
            report["checked"] = checked;
            report["mismatches"] = ordered_json::array();
            for (const auto& c : mismatches) {
                report["mismatches"].push_back({{"spec", c.descriptor},
                                                {"counter", c.counter},
                                                {"oracle", c.oracle}});
            }
            report["wall_ns"] = elapsed;
            emit_report(report);
        } else {
            for (const auto& c : mismatches) {
                std::cout << "MISMATCH " << c.descriptor << " counter=" << c.counter
                          << " oracle=" << c.oracle << "\n";
            }
            std::cout << "checked " << checked << " specs (" << exhaustive
                      << " exhaustive, " << random_done << " random): "
                      << (mismatches.empty() ? "all counts match" : "MISMATCHES FOUND")
                      << "\n";
        }
        return mismatches.empty() ? exit_ok : exit_mismatch;
    } catch (const CliError& e) {
        fail_cli(e, json_mode, "verify", "");
    }
}

// ---- bench ----

struct BenchRow {
    std::int64_t n = 0;
    std::string algorithm;
    std::int64_t wall_ns = 0;
    std::uint64_t ops = 0;
};

Spec bench_spec_chain(std::int64_t size) {
    const std::vector<std::int64_t> m{1, 1};
    const std::vector<std::int64_t> n{2, std::max<std::int64_t>(1, size - 4)};
    chaincount_spec* raw = nullptr;
    check(chaincount_spec_create(m.data(), n.data(), 2, &raw));
    return Spec(raw);
}

Spec bench_spec_balanced(std::int64_t size) {
    const std::int64_t cell = std::max<std::int64_t>(1, size / 8);
    const std::vector<std::int64_t> cells(8, cell);
    chaincount_spec* raw = nullptr;
    check(chaincount_spec_create(cells.data(), cells.data() + 4, 4, &raw));
    return Spec(raw);
}

std::int64_t spec_vertices(const chaincount_spec* spec) {
    const std::size_t h = chaincount_spec_cells(spec);
    std::vector<std::int64_t> m(h), n(h);
    check(chaincount_spec_copy_cells(spec, m.data(), n.data()));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < h; ++i) total += m[i] + n[i];
    return total;
}

double fitted_exponent(const std::vector<BenchRow>& rows) {
    // Least-squares slope of log(ops) against log(n) over counter rows.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::int64_t count = 0;
    for (const auto& row : rows) {
        if (row.algorithm != "counter" || row.ops == 0) continue;
        const double x = std::log(static_cast<double>(row.n));
        const double y = std::log(static_cast<double>(row.ops));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) return 0.0;
    const double denom = count * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (count * sxy - sx * sy) / denom;
}

int run_bench(const std::string& sizes_csv, std::int64_t reps, const std::string& csv_path,
              std::int64_t oracle_limit, bool json_mode) {
    try {
        const auto sizes = parse_int_list(sizes_csv, "size");
        for (const std::int64_t s : sizes) {
            if (s < 5) throw CliError(exit_input, "sizes must be at least 5");
        }
        if (reps < 1) throw CliError(exit_input, "repetitions must be positive");
        const std::int64_t edge_cap = edge_cap_from_env();

        std::vector<BenchRow> rows;
        bool cross_checked = true;
        for (const std::int64_t size : sizes) {
            for (int family = 0; family < 2; ++family) {
                const Spec spec = family == 0 ? bench_spec_chain(size)
                                              : bench_spec_balanced(size);
                const std::int64_t n = spec_vertices(spec.get());
                std::string counter_tau;
                for (std::int64_t rep = 0; rep < reps; ++rep) {
                    char* tau_raw = nullptr;
                    std::uint64_t ops = 0;
                    const std::int64_t t0 = now_ns();
                    check(chaincount_count(spec.get(), &tau_raw, &ops));
                    const std::int64_t t1 = now_ns();
                    counter_tau = LibString(tau_raw).get();
                    rows.push_back({n, "counter", t1 - t0, ops});
                }
                if (n > oracle_limit) continue;
                chaincount_graph* graph_raw = nullptr;
                check(chaincount_expand(spec.get(), edge_cap, &graph_raw));
                const GraphHandle graph(graph_raw);
                for (std::int64_t rep = 0; rep < reps; ++rep) {
                    char* tau_raw = nullptr;
                    std::uint64_t ops = 0;
                    const std::int64_t t0 = now_ns();
                    check(chaincount_oracle_count(graph.get(), &tau_raw, &ops));
                    const std::int64_t t1 = now_ns();
                    const LibString tau(tau_raw);
                    if (counter_tau != tau.get()) cross_checked = false;
                    rows.push_back({n, "oracle", t1 - t0, ops});
                }
            }
        }

        std::string csv = "n,algorithm,wall_ns,ops\n";
        for (const auto& row : rows) {
            csv += std::to_string(row.n) + "," + row.algorithm + "," +
                   std::to_string(row.wall_ns) + "," + std::to_string(row.ops) + "\n";
        }
        const double exponent = fitted_exponent(rows);

        std::ostream* summary = &std::cout;
        if (csv_path.empty() || csv_path == "-") {
            std::cout << csv;
            summary = &std::cerr;
        } else {
            std::ofstream out(csv_path, std::ios::binary);
            if (!out) throw CliError(exit_input, "cannot write " + csv_path);
            out << csv;
            if (!out.flush()) throw CliError(exit_input, "cannot write " + csv_path);
        }
        if (json_mode) {
            ordered_json report;
            report["command"] = "bench";
            report["input"] = sizes_csv;
            report["status"] = cross_checked ? "ok" : "mismatch";
            report["exponent"] = exponent;
            report["rows"] = rows.size();
            emit_report(report);
        } else {
            *summary << "fitted counter ops growth exponent: " << exponent << "\n";
            *summary << "counter/oracle cross-check: "
                     << (cross_checked ? "ok" : "MISMATCH") << "\n";
        }
        return cross_checked ? exit_ok : exit_mismatch;
    } catch (const CliError& e) {
        fail_cli(e, json_mode, "bench", sizes_csv);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spanning tree counting for double nested (bipartite chain) graphs"};
    app.require_subcommand(1);

    std::string spec_arg, edges_path, out_path, sizes_csv, csv_path;
    bool json_mode = false;
    std::int64_t max_h = 3, max_cell = 3, trials = 0, max_vertices = 60;
    std::uint64_t seed = 0;
    std::int64_t reps = 1, oracle_limit = 400;

    auto* count = app.add_subcommand(
        "count", "Count spanning trees of a chain spec or a recognized edge list");
    auto* count_spec =
        count->add_option("--spec", spec_arg,
                          "Spec as inline JSON {\"m\":[..],\"n\":[..]}, inline m=..;n=.., "
                          "or a file holding either");
    auto* count_edges =
        count->add_option("--edges", edges_path, "Edge-list file (recognized first)");
    count_spec->excludes(count_edges);
    count->add_flag("--json", json_mode, "Emit a JSON run report");

    auto* oracle = app.add_subcommand(
        "oracle", "Count spanning trees of any connected graph via the Kirchhoff cofactor");
    oracle->add_option("edges", edges_path, "Edge-list file")->required();
    oracle->add_flag("--json", json_mode, "Emit a JSON run report");

    auto* recognize =
        app.add_subcommand("recognize", "Recover the chain spec of an edge list");
    recognize->add_option("edges", edges_path, "Edge-list file")->required();
    recognize->add_flag("--json", json_mode, "Emit a JSON run report");

    auto* generate = app.add_subcommand("generate", "Write the canonical edge list of a spec");
    generate->add_option("--spec", spec_arg, "Spec (same forms as count)")->required();
    generate->add_option("--out", out_path, "Output file, '-' or omitted for stdout");

    auto* verify = app.add_subcommand(
        "verify", "Sweep specs and compare the linear counter against the matrix-tree oracle");
    verify->add_option("--max-h", max_h, "Exhaustive sweep: cells per side up to this");
    verify->add_option("--max-cell", max_cell, "Exhaustive sweep: cell sizes up to this");
    verify->add_option("--trials", trials, "Extra random specs");
    verify->add_option("--seed", seed, "Random spec seed");
    verify->add_option("--max-vertices", max_vertices, "Vertex bound for random specs");
    verify->add_flag("--json", json_mode, "Emit a JSON run report");

    auto* bench = app.add_subcommand("bench", "Time counter and oracle across sizes, CSV out");
    bench->add_option("--sizes", sizes_csv, "Comma-separated vertex counts")
        ->default_val("1000,10000,100000");
    bench->add_option("--reps", reps, "Repetitions per size");
    bench->add_option("--csv", csv_path, "CSV output file, '-' or omitted for stdout");
    bench->add_option("--oracle-limit", oracle_limit,
                      "Run the cubic oracle only up to this many vertices");
    bench->add_flag("--json", json_mode, "Emit a JSON run report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            if (spec_arg.empty() && edges_path.empty()) {
                throw CliError(exit_input, "count needs --spec or --edges");
            }
            return run_count(spec_arg, edges_path, json_mode);
        }
        if (oracle->parsed()) return run_oracle(edges_path, json_mode);
        if (recognize->parsed()) return run_recognize(edges_path, json_mode);
        if (generate->parsed()) return run_generate(spec_arg, out_path);
        if (verify->parsed()) {
            return run_verify(max_h, max_cell, trials, seed, max_vertices, json_mode);
        }
        if (bench->parsed()) {
            return run_bench(sizes_csv, reps, csv_path, oracle_limit, json_mode);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
    return exit_input;
}
