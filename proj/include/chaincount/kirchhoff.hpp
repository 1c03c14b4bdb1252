#pragma once

#include "chaincount/graph.hpp"
#include "chaincount/rational.hpp"

#include <cstdint>
#include <vector>

namespace chaincount {

/// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
public:
    explicit IntMatrix(std::int64_t order)
        : order_(order), cells_(static_cast<std::size_t>(order * order)) {}

    std::int64_t order() const { return order_; }

    Integer& at(std::int64_t r, std::int64_t c) {
        return cells_[static_cast<std::size_t>(r * order_ + c)];
    }
    const Integer& at(std::int64_t r, std::int64_t c) const {
        return cells_[static_cast<std::size_t>(r * order_ + c)];
    }

private:
    std::int64_t order_;
    std::vector<Integer> cells_;
};

/// K = D - A: vertex degrees on the diagonal, -1 per edge.
IntMatrix kirchhoff_matrix(const Graph& g);
IntMatrix kirchhoff_matrix(const BipartiteGraph& g);

/// Determinant of K with row and column `index` deleted, by
/// fraction-free integer elimination. For a connected graph this is the
/// spanning tree count regardless of index. Throws SingularInput when
/// the result is zero (disconnected input).
Integer cofactor(const IntMatrix& k, std::int64_t index);

/// Spanning tree count of an arbitrary connected graph via the cofactor
/// at the last vertex. Cubic in the vertex count. Throws Disconnected.
/// ops, when given, receives the big-integer multiply/divide count.
Integer count_oracle(const Graph& g, std::uint64_t* ops = nullptr);
Integer count_oracle(const BipartiteGraph& g, std::uint64_t* ops = nullptr);

} // namespace chaincount
