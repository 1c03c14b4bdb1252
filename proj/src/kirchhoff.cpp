#include "chaincount/kirchhoff.hpp"

#include "chaincount/errors.hpp"

#include <string>
#include <utility>

namespace chaincount {

IntMatrix kirchhoff_matrix(const Graph& g) {
    IntMatrix k(g.vertex_count);
    for (const auto& [a, b] : g.edges) {
        if (a == b) {
            fail(Errc::invalid_argument, "kirchhoff matrix of a graph with a loop");
        }
        k.at(a, a) += 1;
        k.at(b, b) += 1;
        k.at(a, b) -= 1;
        k.at(b, a) -= 1;
    }
    return k;
}

IntMatrix kirchhoff_matrix(const BipartiteGraph& g) {
    return kirchhoff_matrix(g.to_graph());
}

namespace {

// Fraction-free (Bareiss) determinant with row pivoting; destroys w.
// Divisions are exact at every step. ops, when given, counts the
// big-integer multiplications and exact divisions.
Integer bareiss_determinant(IntMatrix& w, std::uint64_t* ops) {
    const std::int64_t n = w.order();
    if (n == 0) return 1;
    Integer previous = 1;
    bool negate = false;
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::int64_t pivot_row = -1;
            for (std::int64_t r = k + 1; r < n; ++r) {
                if (w.at(r, k) != 0) {
                    pivot_row = r;
                    break;
                }
            }
            if (pivot_row < 0) return 0;
            for (std::int64_t c = 0; c < n; ++c) {
                std::swap(w.at(k, c), w.at(pivot_row, c));
            }
            negate = !negate;
        }
        for (std::int64_t i = k + 1; i < n; ++i) {
            for (std::int64_t j = k + 1; j < n; ++j) {
                Integer numerator = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), numerator.get_mpz_t(),
                             previous.get_mpz_t());
                if (ops) *ops += 3;
            }
            w.at(i, k) = 0;
        }
        previous = w.at(k, k);
    }
    Integer det = w.at(n - 1, n - 1);
    return negate ? Integer(-det) : det;
}

Integer cofactor_impl(const IntMatrix& k, std::int64_t index, std::uint64_t* ops) {
    const std::int64_t n = k.order();
    if (index < 0 || index >= n) {
        fail(Errc::invalid_argument, "cofactor index out of range");
    }
    IntMatrix minor(n - 1);
    for (std::int64_t r = 0, mr = 0; r < n; ++r) {
        if (r == index) continue;
        for (std::int64_t c = 0, mc = 0; c < n; ++c) {
            if (c == index) continue;
            minor.at(mr, mc) = k.at(r, c);
            ++mc;
        }
        ++mr;
    }
    Integer det = bareiss_determinant(minor, ops);
    if (det == 0) {
        fail(Errc::singular_input, "cofactor is zero; the graph is disconnected");
    }
    return det;
}

} // namespace

Integer cofactor(const IntMatrix& k, std::int64_t index) {
    return cofactor_impl(k, index, nullptr);
}

Integer count_oracle(const Graph& g, std::uint64_t* ops) {
    if (g.vertex_count == 0) {
        fail(Errc::invalid_argument, "empty graph");
    }
    if (!is_connected(g)) {
        fail(Errc::disconnected, "graph is disconnected; it has no spanning tree");
    }
    if (g.vertex_count == 1) return 1;
    return cofactor_impl(kirchhoff_matrix(g), g.vertex_count - 1, ops);
}

Integer count_oracle(const BipartiteGraph& g, std::uint64_t* ops) {
    return count_oracle(g.to_graph(), ops);
}

} // namespace chaincount
