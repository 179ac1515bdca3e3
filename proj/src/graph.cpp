#include "mstdp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "disjoint_sets.hpp"
#include "mstdp/errors.hpp"

namespace mstdp {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  using Kind = GraphError::Kind;
  if (n_ == 0) throw GraphError(Kind::empty_graph, 0, "graph must have at least one vertex");

  std::vector<std::size_t> degree(n_, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= n_ || v >= n_) {
      throw GraphError(Kind::vertex_out_of_range, 0,
                       "edge " + std::to_string(e) + " has an endpoint outside 0.." +
                           std::to_string(n_ - 1));
    }
    if (u == v) throw GraphError(Kind::self_loop, 0, "edge " + std::to_string(e) + " is a self-loop");
    ++degree[u];
    ++degree[v];
  }

  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    adjacency_[cursor[u]++] = {v, static_cast<EdgeIndex>(e)};
    adjacency_[cursor[v]++] = {u, static_cast<EdgeIndex>(e)};
  }
  for (std::size_t v = 0; v < n_; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) {
      return a.vertex < b.vertex || (a.vertex == b.vertex && a.edge < b.edge);
    });
    auto dup = std::adjacent_find(first, last, [](const Neighbor& a, const Neighbor& b) {
      return a.vertex == b.vertex;
    });
    if (dup != last) {
      throw GraphError(Kind::duplicate_edge, 0,
                       "edge " + std::to_string(std::next(dup)->edge) + " duplicates edge " +
                           std::to_string(dup->edge));
    }
  }

  detail::DisjointSets components(n_);
  std::size_t count = n_;
  for (const auto& [u, v] : edges_) count -= components.unite(u, v) ? 1 : 0;
  if (count != 1) {
    throw GraphError(Kind::disconnected, 0,
                     "graph is disconnected (" + std::to_string(count) + " components)");
  }
}

std::span<const Neighbor> Graph::neighbors(Vertex v) const {
  if (v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

long Graph::find_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return -1;
  auto list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex key) { return a.vertex < key; });
  if (it == list.end() || it->vertex != v) return -1;
  return static_cast<long>(it->edge);
}

Weighting::Weighting(std::vector<Weight> values) : values_(std::move(values)) {
  for (std::size_t e = 0; e < values_.size(); ++e) {
    Weight& w = values_[e];
    if (!std::isfinite(w) || w < 0) {
      throw GraphError(GraphError::Kind::negative_weight, 0,
                       "weight of edge " + std::to_string(e) + " must be finite and nonnegative");
    }
    if (w == 0) w = 0;  // -0.0
  }
}

Weighting Weighting::with_zeroed(EdgeIndex e) const {
  Weighting copy = *this;
  copy.values_.at(e) = 0;
  return copy;
}

void check_weighting(const Graph& g, const Weighting& x) {
  if (x.size() != g.edge_count()) {
    throw PreconditionError("weighting has " + std::to_string(x.size()) + " values for " +
                            std::to_string(g.edge_count()) + " edges");
  }
}

void check_spanning_tree(const Graph& g, const SpanningTree& t) {
  const std::size_t n = g.vertex_count();
  if (t.size() != n - 1) {
    throw PreconditionError("spanning tree needs " + std::to_string(n - 1) + " edges, got " +
                            std::to_string(t.size()));
  }
  detail::DisjointSets components(n);
  for (EdgeIndex e : t.edges()) {
    if (e >= g.edge_count()) {
      throw PreconditionError("tree edge index " + std::to_string(e) + " out of range");
    }
    const auto [u, v] = g.edge(e);
    if (!components.unite(u, v)) {
      throw PreconditionError("tree edge " + std::to_string(e) + " closes a cycle or repeats");
    }
  }
}

ExtendedWeighting complete_extension(const Graph& g, const Weighting& x) {
  OpCounter counter;
  return complete_extension(g, x, counter);
}

ExtendedWeighting complete_extension(const Graph& g, const Weighting& x, OpCounter& counter) {
  check_weighting(g, x);
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  Weight big = m == 0 ? Weight{0} : x[0];
  for (EdgeIndex e = 1; e < m; ++e) big = std::max(big, x[e]);
  if (m > 1) counter.record(OpKindTag::max, m - 1);

  ExtendedWeighting out{SquareMatrix(n, big), big};
  for (std::size_t i = 0; i < n; ++i) out.values(i, i) = 0;
  for (EdgeIndex e = 0; e < m; ++e) {
    const auto [u, v] = g.edge(e);
    out.values(u, v) = x[e];
    out.values(v, u) = x[e];
  }
  return out;
}

SpanningTree fix_spanning_tree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<EdgeIndex> tree;
  tree.reserve(n - 1);

  // Iterative form of the recursive DFS: each frame resumes at its neighbor cursor.
  struct Frame {
    Vertex vertex;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  seen[0] = true;
  while (!stack.empty()) {
    Frame& top = stack.back();
    auto list = g.neighbors(top.vertex);
    if (top.next == list.size()) {
      stack.pop_back();
      continue;
    }
    const Neighbor nb = list[top.next++];
    if (seen[nb.vertex]) continue;
    seen[nb.vertex] = true;
    tree.push_back(nb.edge);
    stack.push_back({nb.vertex, 0});
  }
  return SpanningTree(std::move(tree));
}

}  // namespace mstdp
