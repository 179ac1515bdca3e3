#pragma once

#include <cstddef>

#include "mstdp/graph.hpp"
#include "mstdp/kernels.hpp"
#include "mstdp/matrix.hpp"
#include "mstdp/ops.hpp"

namespace mstdp {

/// Symmetric matrix of min-max (bottleneck) distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(SquareMatrix values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  Weight operator()(Vertex i, Vertex j) const noexcept { return values_(i, j); }
  const SquareMatrix& values() const noexcept { return values_; }
  SquareMatrix& mutable_values() noexcept { return values_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  SquareMatrix values_;
};

/// Throws PreconditionError unless `w` is symmetric with a zero diagonal and
/// no negative or NaN entry. +infinity is allowed.
void check_extended_weighting(const SquareMatrix& w);

/// Floyd-Warshall over (min, max). Each of the n rounds visits every
/// unordered pair i < j once with one max and one min, so a run costs
/// n * n(n-1)/2 of each.
DistanceMatrix all_pairs_minmax(const ExtendedWeighting& xbar);
DistanceMatrix all_pairs_minmax(const ExtendedWeighting& xbar, OpCounter& counter,
                                const kernels::KernelTable& kernels = kernels::active());

/// The same closure on an arbitrary pair-weight table (e.g. one using
/// +infinity for absent edges).
DistanceMatrix minmax_closure(SquareMatrix weights, OpCounter& counter,
                              const kernels::KernelTable& kernels = kernels::active());

/// Distances after setting pair {a, b} to weight zero:
///
///   D'(i,j) = min(min(D(i,j), max(D(i,a), D(b,j))), max(D(i,b), D(a,j)))
///
/// over unordered pairs i < j: n(n-1) min and n(n-1) max operations.
DistanceMatrix zero_edge_update(const DistanceMatrix& d, Vertex a, Vertex b);
DistanceMatrix zero_edge_update(const DistanceMatrix& d, Vertex a, Vertex b, OpCounter& counter,
                                const kernels::KernelTable& kernels = kernels::active());

/// Same as zero_edge_update, rewriting `d`. `scratch` holds the snapshot of
/// rows a and b and is resized as needed.
void zero_edge_update_in_place(DistanceMatrix& d, Vertex a, Vertex b, OpCounter& counter,
                               const kernels::KernelTable& kernels, std::vector<Weight>& scratch);

/// Minimum over all simple u-v paths in `g` of the heaviest edge. Exponential;
/// meant for graphs of up to about 10 vertices.
Weight minmax_distance_bruteforce(const Graph& g, const Weighting& x, Vertex u, Vertex v);

}  // namespace mstdp
