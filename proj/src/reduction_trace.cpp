#include "chaincount/reduction_trace.hpp"

#include "chaincount/counter.hpp"
#include "chaincount/errors.hpp"
#include "chaincount/graph.hpp"
#include "chaincount/kirchhoff.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace chaincount {

namespace {

// Dense symmetric rational matrix restricted to paired row/column
// operations, so the determinant is pinned for the whole reduction.
class CongruenceMatrix {
public:
    CongruenceMatrix(std::int64_t order, bool check_determinant)
        : order_(order),
          cells_(static_cast<std::size_t>(order * order)),
          check_(check_determinant) {}

    std::int64_t order() const { return order_; }

    Rational& at(std::int64_t r, std::int64_t c) {
        return cells_[static_cast<std::size_t>(r * order_ + c)];
    }
    const Rational& at(std::int64_t r, std::int64_t c) const {
        return cells_[static_cast<std::size_t>(r * order_ + c)];
    }

    void seal_determinant() {
        if (check_) reference_det_ = determinant();
    }

    // R_target += coef * R_source and the matching column operation.
    void sym_add(std::int64_t target, std::int64_t source, const Rational& coef) {
        for (std::int64_t c = 0; c < order_; ++c) {
            at(target, c) += coef * at(source, c);
        }
        for (std::int64_t r = 0; r < order_; ++r) {
            at(r, target) += coef * at(r, source);
        }
        if (check_ && determinant() != reference_det_) {
            fail(Errc::trace_divergence,
                 "determinant moved after a row/column operation pair");
        }
    }

    std::vector<Rational> diagonal() const {
        std::vector<Rational> d;
        d.reserve(static_cast<std::size_t>(order_));
        for (std::int64_t i = 0; i < order_; ++i) d.push_back(at(i, i));
        return d;
    }

    bool is_diagonal() const {
        for (std::int64_t r = 0; r < order_; ++r) {
            for (std::int64_t c = 0; c < order_; ++c) {
                if (r != c && at(r, c) != 0) return false;
            }
        }
        return true;
    }

    Rational determinant() const {
        CongruenceMatrix w(*this);
        Rational det = 1;
        for (std::int64_t k = 0; k < order_; ++k) {
            std::int64_t pivot = -1;
            for (std::int64_t r = k; r < order_; ++r) {
                if (w.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            if (pivot != k) {
                for (std::int64_t c = 0; c < order_; ++c) {
                    std::swap(w.at(k, c), w.at(pivot, c));
                }
                det = -det;
            }
            det *= w.at(k, k);
            for (std::int64_t r = k + 1; r < order_; ++r) {
                if (w.at(r, k) == 0) continue;
                const Rational factor = w.at(r, k) / w.at(k, k);
                for (std::int64_t c = k; c < order_; ++c) {
                    w.at(r, c) -= factor * w.at(k, c);
                }
            }
        }
        return det;
    }

private:
    std::int64_t order_;
    std::vector<Rational> cells_;
    bool check_;
    Rational reference_det_;
};

// Collapses the pairwise-equal rows of one cell from the bottom up: the
// step-t pair first differences the lower row into the upper one's
// pattern, then folds t/(t+1) of it back, finishing the lower row with
// a bare diagonal entry.
void telescope_cell(CongruenceMatrix& m, std::int64_t start, std::int64_t size) {
    for (std::int64_t t = 1; t < size; ++t) {
        const std::int64_t lower = start + size - t;
        const std::int64_t upper = lower - 1;
        m.sym_add(lower, upper, Rational(-1));
        m.sym_add(upper, lower, ratio(t, t + 1));
    }
}

} // namespace

std::vector<Rational> reduction_trace(const ChainSpec& spec, const TraceOptions& options) {
    if (spec.vertex_count() > options.max_vertices) {
        fail(Errc::resource_limit,
             "trace limited to " + std::to_string(options.max_vertices) +
                 " vertices, spec has " + std::to_string(spec.vertex_count()));
    }
    const DegreeProfile profile = degree_profile(spec);
    const std::int64_t h = spec.cells();
    const std::int64_t u_total = spec.u_total();
    const BipartiteGraph graph = expand(spec);
    const IntMatrix kirchhoff = kirchhoff_matrix(graph);

    // Cofactor matrix: drop the last row and column (a last-V-cell
    // vertex under the canonical order).
    const std::int64_t order = kirchhoff.order() - 1;
    CongruenceMatrix m(order, options.check_determinant);
    for (std::int64_t r = 0; r < order; ++r) {
        for (std::int64_t c = 0; c < order; ++c) {
            m.at(r, c) = Rational(kirchhoff.at(r, c));
        }
    }
    m.seal_determinant();

    // Cell row ranges inside the cofactor matrix. The last V cell lost
    // one vertex; every other cell is intact.
    std::vector<std::int64_t> u_start(static_cast<std::size_t>(h));
    std::vector<std::int64_t> v_start(static_cast<std::size_t>(h));
    std::vector<std::int64_t> v_size = spec.v_cells;
    v_size.back() -= 1;
    for (std::int64_t i = 0; i < h; ++i) {
        u_start[static_cast<std::size_t>(i)] =
            i == 0 ? 0 : profile.u_prefix[static_cast<std::size_t>(i - 1)];
        v_start[static_cast<std::size_t>(i)] =
            u_total + (i == 0 ? 0 : profile.v_prefix[static_cast<std::size_t>(i - 1)]);
    }

    for (std::int64_t i = 0; i < h; ++i) {
        telescope_cell(m, u_start[static_cast<std::size_t>(i)], spec.u_cells[static_cast<std::size_t>(i)]);
    }
    for (std::int64_t j = 0; j < h; ++j) {
        telescope_cell(m, v_start[static_cast<std::size_t>(j)], v_size[static_cast<std::size_t>(j)]);
    }

    // Representative rows that survived on the V side.
    std::vector<std::int64_t> v_rep;
    for (std::int64_t j = 0; j < h; ++j) {
        if (v_size[static_cast<std::size_t>(j)] >= 1) {
            v_rep.push_back(v_start[static_cast<std::size_t>(j)]);
        }
    }

    // Difference adjacent V representatives; each row keeps a single
    // coupling into the U representative it is nested against.
    for (std::size_t r = 0; r + 1 < v_rep.size(); ++r) {
        m.sym_add(v_rep[r], v_rep[r + 1], Rational(-1));
    }

    // Absorb each U representative's remaining couplings into the V
    // diagonal it points at.
    for (std::int64_t i = 0; i < h; ++i) {
        const std::int64_t u_row = u_start[static_cast<std::size_t>(i)];
        for (const std::int64_t vr : v_rep) {
            if (m.at(vr, u_row) != 0) {
                const Rational coef = -m.at(vr, u_row) / m.at(u_row, u_row);
                m.sym_add(vr, u_row, coef);
            }
        }
    }

    // Symmetric elimination down the tridiagonal core; the pivots land
    // on the diagonal.
    for (std::size_t r = 0; r + 1 < v_rep.size(); ++r) {
        const Rational& pivot = m.at(v_rep[r], v_rep[r]);
        if (pivot == 0) {
            fail(Errc::zero_pivot, "zero pivot in the tridiagonal elimination");
        }
        if (m.at(v_rep[r + 1], v_rep[r]) != 0) {
            const Rational coef = -m.at(v_rep[r + 1], v_rep[r]) / pivot;
            m.sym_add(v_rep[r + 1], v_rep[r], coef);
        }
    }

    if (!m.is_diagonal()) {
        fail(Errc::trace_divergence, "matrix is not diagonal after the reduction");
    }
    return m.diagonal();
}

std::vector<Rational> verify_reduction_trace(const ChainSpec& spec,
                                             const TraceOptions& options) {
    std::vector<Rational> trace = reduction_trace(spec, options);

    const DegreeProfile profile = degree_profile(spec);
    std::vector<Rational> expected = cell_factors(spec, profile).all();
    const PivotSequence pivots = lu_pivots(build_tridiagonal(spec, profile));
    expected.insert(expected.end(), pivots.pivots.begin(), pivots.pivots.end());

    std::vector<Rational> sorted_trace = trace;
    std::sort(sorted_trace.begin(), sorted_trace.end());
    std::sort(expected.begin(), expected.end());
    if (sorted_trace != expected) {
        fail(Errc::trace_divergence,
             "trace diagonal differs from the closed-form factor multiset");
    }

    Rational product = 1;
    for (const Rational& d : trace) product *= d;
    const Integer tau = count_oracle(expand(spec));
    if (product != Rational(tau)) {
        fail(Errc::trace_divergence,
             "trace product " + product.get_str() +
                 " differs from the matrix-tree count " + tau.get_str());
    }
    return trace;
}

} // namespace chaincount
