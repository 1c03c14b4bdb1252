#include "chaincount/counter.hpp"

#include "chaincount/errors.hpp"

#include <utility>

namespace chaincount {

std::vector<Rational> FactorList::all() const {
    std::vector<Rational> flat;
    for (const auto& cell : u_cell) flat.insert(flat.end(), cell.begin(), cell.end());
    for (const auto& cell : v_cell) flat.insert(flat.end(), cell.begin(), cell.end());
    flat.insert(flat.end(), representative.begin(), representative.end());
    return flat;
}

namespace {

// Effective V-cell sizes in the cofactor matrix: the deleted vertex
// comes out of the last cell, which disappears entirely when it had a
// single vertex.
std::vector<std::int64_t> effective_v_sizes(const ChainSpec& spec,
                                            const DegreeProfile& profile) {
    std::vector<std::int64_t> sizes = spec.v_cells;
    sizes.back() = profile.last_v_reduced.value_or(0);
    return sizes;
}

// Visits every closed-form diagonal factor in canonical order: U-cell
// telescopes, V-cell telescopes, then the U representatives.
template <typename CellFn, typename RepFn>
void visit_factors(const ChainSpec& spec, const DegreeProfile& profile,
                   CellFn&& on_cell_factor, RepFn&& on_representative) {
    const std::size_t h = spec.u_cells.size();
    for (std::size_t i = 0; i < h; ++i) {
        const Integer degree(static_cast<long>(profile.u_degree[i]));
        for (std::int64_t k = spec.u_cells[i]; k >= 2; --k) {
            on_cell_factor(true, i, ratio(k * degree, Integer(static_cast<long>(k - 1))));
        }
    }
    const std::vector<std::int64_t> v_sizes = effective_v_sizes(spec, profile);
    for (std::size_t j = 0; j < h; ++j) {
        const Integer degree(static_cast<long>(profile.v_degree[j]));
        for (std::int64_t k = v_sizes[j]; k >= 2; --k) {
            on_cell_factor(false, j, ratio(k * degree, Integer(static_cast<long>(k - 1))));
        }
    }
    for (std::size_t i = 0; i < h; ++i) {
        on_representative(ratio(profile.u_degree[i], spec.u_cells[i]));
    }
}

Tridiagonal build_tridiagonal_impl(const ChainSpec& spec, const DegreeProfile& profile) {
    const std::int64_t h = spec.cells();
    const auto rep = [&](std::int64_t j) { // V representative d/size, 0-based
        return ratio(profile.v_degree[static_cast<std::size_t>(j)],
                     spec.v_cells[static_cast<std::size_t>(j)]);
    };
    const auto u_ratio = [&](std::int64_t i) { // m/d for U cell i, 0-based
        return ratio(spec.u_cells[static_cast<std::size_t>(i)],
                     profile.u_degree[static_cast<std::size_t>(i)]);
    };

    Tridiagonal t;
    if (profile.last_v_reduced.has_value()) {
        // Order h; the last V cell keeps last_v_reduced vertices.
        const Rational last_rep = ratio(profile.v_degree[static_cast<std::size_t>(h - 1)],
                                        *profile.last_v_reduced);
        t.diag.reserve(static_cast<std::size_t>(h));
        for (std::int64_t i = 0; i + 1 < h; ++i) {
            const Rational next = (i + 2 == h) ? last_rep : rep(i + 1);
            t.diag.push_back(rep(i) + next - u_ratio(h - 1 - i));
            t.off.push_back(-next);
        }
        t.diag.push_back(last_rep - u_ratio(0));
    } else if (h >= 2) {
        // The deletion consumed the whole last V cell: order h-1, and
        // the final row absorbs both leading U cells.
        for (std::int64_t i = 0; i + 1 < h - 1; ++i) {
            t.diag.push_back(rep(i) + rep(i + 1) - u_ratio(h - 1 - i));
            t.off.push_back(-rep(i + 1));
        }
        t.diag.push_back(rep(h - 2) - u_ratio(0) - u_ratio(1));
    }
    // h == 1 with a single V vertex: a star, no tridiagonal core.
    return t;
}

PivotSequence lu_pivots_impl(const Tridiagonal& t, std::uint64_t* ops) {
    PivotSequence seq;
    seq.pivots.reserve(t.diag.size());
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        Rational g = t.diag[i];
        if (i > 0) {
            Rational carry = t.off[i - 1] * t.off[i - 1];
            carry /= seq.pivots[i - 1];
            if (ops) *ops += 2;
            g -= carry;
        }
        if (g == 0) {
            fail(Errc::zero_pivot,
                 "zero pivot at position " + std::to_string(i + 1) +
                     "; input is not a valid chain graph");
        }
        seq.product *= g;
        if (ops) *ops += 1;
        seq.pivots.push_back(std::move(g));
    }
    return seq;
}

} // namespace

FactorList cell_factors(const ChainSpec& spec, const DegreeProfile& profile) {
    const std::size_t h = spec.u_cells.size();
    FactorList list;
    list.u_cell.resize(h);
    list.v_cell.resize(h);
    visit_factors(
        spec, profile,
        [&](bool u_side, std::size_t cell, Rational f) {
            (u_side ? list.u_cell : list.v_cell)[cell].push_back(std::move(f));
        },
        [&](Rational f) { list.representative.push_back(std::move(f)); });
    return list;
}

Tridiagonal build_tridiagonal(const ChainSpec& spec, const DegreeProfile& profile) {
    return build_tridiagonal_impl(spec, profile);
}

PivotSequence lu_pivots(const Tridiagonal& t) {
    return lu_pivots_impl(t, nullptr);
}

CountResult count_spanning_trees(const ChainSpec& spec) {
    const DegreeProfile profile = degree_profile(spec);
    std::uint64_t ops = 0;
    Rational product = 1;
    const auto multiply = [&](const Rational& f) {
        product *= f;
        ++ops;
    };
    visit_factors(
        spec, profile, [&](bool, std::size_t, const Rational& f) { multiply(f); },
        multiply);

    const Tridiagonal t = build_tridiagonal_impl(spec, profile);
    const PivotSequence pivots = lu_pivots_impl(t, &ops);
    product *= pivots.product;
    ++ops;

    if (product.get_den() != 1) {
        fail(Errc::internal,
             "spanning tree count did not reduce to an integer: " + product.get_str());
    }
    return CountResult{product.get_num(), ops};
}

CountBreakdown count_breakdown(const ChainSpec& spec) {
    const DegreeProfile profile = degree_profile(spec);
    CountBreakdown out;
    out.factors = cell_factors(spec, profile);
    out.tridiagonal = build_tridiagonal_impl(spec, profile);
    out.pivots = lu_pivots(out.tridiagonal);
    const CountResult result = count_spanning_trees(spec);
    out.tau = result.tau;
    out.ops = result.ops;
    return out;
}

Integer tau_complete_bipartite(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) {
        fail(Errc::invalid_argument, "complete bipartite sides must be positive");
    }
    Integer lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(n - 1));
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(m - 1));
    return lhs * rhs;
}

} // namespace chaincount
