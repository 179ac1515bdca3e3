#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mstdp/matrix.hpp"
#include "mstdp/ops.hpp"
#include "mstdp/value.hpp"

namespace mstdp {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  EdgeIndex edge;
};

/// Undirected, simple, connected graph on vertices 0..n-1. Edge indices are
/// the positions in the list passed at construction.
class Graph {
 public:
  /// Throws GraphError if the edge list has self-loops, duplicates,
  /// out-of-range endpoints, or does not connect all n vertices (n >= 1).
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Neighbors of `v` in ascending vertex order.
  std::span<const Neighbor> neighbors(Vertex v) const;

  /// Index of edge {u, v}, or -1 when absent.
  long find_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Nonnegative finite weight per edge index.
class Weighting {
 public:
  Weighting() = default;
  /// Throws GraphError(negative_weight) on a negative or non-finite value.
  explicit Weighting(std::vector<Weight> values);

  std::size_t size() const noexcept { return values_.size(); }
  Weight operator[](EdgeIndex e) const noexcept { return values_[e]; }
  std::span<const Weight> values() const noexcept { return values_; }

  /// Copy with edge `e` set to zero.
  Weighting with_zeroed(EdgeIndex e) const;

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  std::vector<Weight> values_;
};

/// A graph together with its weights, as read from an edge-list file.
struct Instance {
  Graph graph;
  Weighting weights;
};

/// Ordered list of n-1 edge indices forming a spanning tree of a host graph.
class SpanningTree {
 public:
  SpanningTree() = default;
  explicit SpanningTree(std::vector<EdgeIndex> edges) : edges_(std::move(edges)) {}

  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const EdgeIndex> edges() const noexcept { return edges_; }
  EdgeIndex operator[](std::size_t i) const noexcept { return edges_[i]; }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::vector<EdgeIndex> edges_;
};

/// Weights of every vertex pair of K_n: source weights on edges, the maximum
/// source weight on non-edges, zero on the diagonal.
struct ExtendedWeighting {
  SquareMatrix values;
  Weight max_weight = 0;
};

/// Throws PreconditionError when `x` does not weight `g` edge for edge.
void check_weighting(const Graph& g, const Weighting& x);

/// Throws PreconditionError unless `t` is n-1 distinct edges of `g` with no cycle.
void check_spanning_tree(const Graph& g, const SpanningTree& t);

/// Complete-graph extension. The maximum is a left fold over edges in index
/// order, costing m-1 max operations.
ExtendedWeighting complete_extension(const Graph& g, const Weighting& x);
ExtendedWeighting complete_extension(const Graph& g, const Weighting& x, OpCounter& counter);

/// DFS tree from vertex 0 exploring neighbors in ascending order; edges are
/// listed in discovery order. Depends on the graph only.
SpanningTree fix_spanning_tree(const Graph& g);

}  // namespace mstdp
