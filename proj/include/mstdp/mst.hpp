#pragma once

#include <cstddef>
#include <vector>

#include "mstdp/graph.hpp"
#include "mstdp/kernels.hpp"
#include "mstdp/ops.hpp"

namespace mstdp {

struct DecompositionTerm {
  EdgeIndex edge;
  Weight distance;
};

/// MST weight written as a telescoping sum: term i is the min-max distance of
/// tree edge e_i once e_1..e_{i-1} have been given weight zero.
struct Decomposition {
  std::vector<DecompositionTerm> terms;
  Weight total = 0;
};

struct MstResult {
  Weight weight = 0;
  OpCounts ops;
};

/// Decomposition along the given tree, in the given edge order. Throws
/// PreconditionError if `t` is not a spanning tree of `g`.
Decomposition mst_decomposition(const Graph& g, const Weighting& x, const SpanningTree& t);
Decomposition mst_decomposition(const Graph& g, const Weighting& x, const SpanningTree& t,
                                OpCounter& counter,
                                const kernels::KernelTable& kernels = kernels::active());

/// O(n^3) branch-free solver: complete extension, one all-pairs min-max run,
/// then n-2 zeroing updates along fix_spanning_tree(g), summing the n-1 tree
/// distances into an accumulator that starts at 0.
MstResult mst_puredp(const Graph& g, const Weighting& x);
MstResult mst_puredp(const Graph& g, const Weighting& x, OpCounter& counter,
                     const kernels::KernelTable& kernels = kernels::active());

/// O(n^4) variant: a fresh all-pairs run for each of the n-1 successively
/// zeroed weightings.
MstResult mst_puredp_naive(const Graph& g, const Weighting& x);
MstResult mst_puredp_naive(const Graph& g, const Weighting& x, OpCounter& counter,
                           const kernels::KernelTable& kernels = kernels::active());

/// Operation counts implied by the loop bounds of the two solvers.
///   all-pairs run  N = n * n(n-1)/2 min and as many max
///   zeroing update K = n(n-1) min and as many max
///   puredp: N + (n-2) K, plus m-1 max for the extension, plus n-1 additions
///   naive:  (n-1) N,     plus m-1 max for the extension, plus n-1 additions
OpCounts expected_puredp_counts(std::size_t n, std::size_t m) noexcept;
OpCounts expected_naive_counts(std::size_t n, std::size_t m) noexcept;

}  // namespace mstdp
