#pragma once

#include "chaincount/chain_spec.hpp"
#include "chaincount/rational.hpp"

#include <cstdint>
#include <vector>

namespace chaincount {

/// Verification fixture, not a user-facing operation: replays the full
/// congruence reduction of the Kirchhoff cofactor matrix on a dense
/// exact-rational matrix, operation pair by operation pair, and returns
/// the resulting diagonal. The multiset must equal the closed-form cell
/// factors plus LU pivots, and its product must equal the spanning tree
/// count; verify_reduction_trace checks both.
struct TraceOptions {
    /// Recompute the determinant after every row/column operation pair
    /// and throw TraceDivergence if it moved. Cubic per pair; keep the
    /// instances small.
    bool check_determinant = false;
    std::int64_t max_vertices = 200;
};

std::vector<Rational> reduction_trace(const ChainSpec& spec,
                                      const TraceOptions& options = {});

/// Runs the trace and checks it against the closed forms and the
/// matrix-tree oracle. Throws TraceDivergence on any mismatch; returns
/// the trace diagonal.
std::vector<Rational> verify_reduction_trace(const ChainSpec& spec,
                                             const TraceOptions& options = {});

} // namespace chaincount
