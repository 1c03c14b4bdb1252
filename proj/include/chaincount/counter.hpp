#pragma once

#include "chaincount/chain_spec.hpp"
#include "chaincount/rational.hpp"

#include <cstdint>
#include <vector>

namespace chaincount {

/// Closed-form diagonal factors of the reduced Kirchhoff cofactor
/// matrix, grouped by origin. U cell i of size s contributes the s-1
/// telescoping factors k*d/(k-1) for k = s..2 (product s * d^(s-1));
/// V cells likewise, the last V cell at its reduced size. Each U cell
/// additionally leaves one representative factor d/s.
struct FactorList {
    std::vector<std::vector<Rational>> u_cell;
    std::vector<std::vector<Rational>> v_cell;
    std::vector<Rational> representative;

    std::vector<Rational> all() const;
};

/// Symmetric tridiagonal core left after the cell collapse. Order is h
/// when the last V cell keeps a vertex after the cofactor deletion and
/// h-1 when that deletion consumes the whole cell.
struct Tridiagonal {
    std::vector<Rational> diag;
    std::vector<Rational> off;

    std::int64_t order() const { return static_cast<std::int64_t>(diag.size()); }
};

/// LU pivots g of the tridiagonal core: g[0] = a[0],
/// g[i] = a[i] - b[i-1]^2 / g[i-1]. product is det(T).
struct PivotSequence {
    std::vector<Rational> pivots;
    Rational product = 1;
};

FactorList cell_factors(const ChainSpec& spec, const DegreeProfile& profile);

Tridiagonal build_tridiagonal(const ChainSpec& spec, const DegreeProfile& profile);

/// Throws ZeroPivot on a zero pivot (never happens for a valid spec).
PivotSequence lu_pivots(const Tridiagonal& t);

/// Spanning tree count plus the number of exact rational
/// multiply/divide operations spent computing it.
struct CountResult {
    Integer tau;
    std::uint64_t ops = 0;
};

/// Counts the spanning trees of the spec's expansion without building
/// the graph: the product of all cell factors and LU pivots, reduced to
/// an exact integer. Linear in the vertex count.
CountResult count_spanning_trees(const ChainSpec& spec);

/// Same count with every intermediate exposed; ops matches
/// count_spanning_trees exactly.
struct CountBreakdown {
    Integer tau;
    std::uint64_t ops = 0;
    FactorList factors;
    Tridiagonal tridiagonal;
    PivotSequence pivots;
};

CountBreakdown count_breakdown(const ChainSpec& spec);

/// m^(n-1) * n^(m-1), the complete bipartite closed form. Test oracle
/// for single-cell specs.
Integer tau_complete_bipartite(std::int64_t m, std::int64_t n);

} // namespace chaincount
