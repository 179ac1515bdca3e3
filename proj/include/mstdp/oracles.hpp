#pragma once

#include <cstddef>

#include "mstdp/graph.hpp"
#include "mstdp/minmax.hpp"

// Classical reference algorithms. None of them is branch-free; they exist to
// cross-check the pure dynamic program.

namespace mstdp {

/// Largest vertex count accepted by bruteforce_mst.
inline constexpr std::size_t kBruteforceMaxVertices = 8;

/// Sort by weight (ties by edge index) and join with union-find.
Weight kruskal_mst(const Graph& g, const Weighting& x);

/// Edge indices of the tree chosen by kruskal_mst.
SpanningTree kruskal_tree(const Graph& g, const Weighting& x);

/// Minimum over every spanning tree. Throws PreconditionError for n > 8.
Weight bruteforce_mst(const Graph& g, const Weighting& x);

/// Sums x(e) over edges whose min-max distance equals x(e). Requires pairwise
/// distinct weights (PreconditionError otherwise); absent pairs are weighted
/// +infinity rather than extended with the maximum weight.
Weight maggs_plotkin_mst(const Graph& g, const Weighting& x);

/// True when no two edge weights coincide.
bool has_distinct_weights(const Weighting& x);

/// Entry (u, v) is the heaviest edge on the u-v path of a minimum spanning tree.
DistanceMatrix hu_minmax_via_mst(const Graph& g, const Weighting& x);

}  // namespace mstdp
