#include "mstdp/oracles.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "disjoint_sets.hpp"
#include "mstdp/errors.hpp"

namespace mstdp {

SpanningTree kruskal_tree(const Graph& g, const Weighting& x) {
  check_weighting(g, x);
  std::vector<EdgeIndex> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeIndex a, EdgeIndex b) { return x[a] < x[b]; });

  detail::DisjointSets components(g.vertex_count());
  std::vector<EdgeIndex> tree;
  tree.reserve(g.vertex_count() - 1);
  for (EdgeIndex e : order) {
    const auto [u, v] = g.edge(e);
    if (components.unite(u, v)) {
      tree.push_back(e);
      if (tree.size() + 1 == g.vertex_count()) break;
    }
  }
  return SpanningTree(std::move(tree));
}

Weight kruskal_mst(const Graph& g, const Weighting& x) {
  // Summed in ascending weight order.
  const SpanningTree tree = kruskal_tree(g, x);
  Weight total = 0;
  for (EdgeIndex e : tree.edges()) total += x[e];
  return total;
}

namespace {

// Include/exclude search over edges in index order, keeping only forests.
// Component labels fit in a fixed array because n <= 8.
struct TreeEnumerator {
  const Graph& g;
  const Weighting& x;
  std::size_t need;
  Weight best = std::numeric_limits<Weight>::infinity();

  using Labels = std::array<std::uint8_t, kBruteforceMaxVertices>;

  void search(std::size_t next, std::size_t taken, Weight sum, const Labels& labels) {
    if (taken == need) {
      best = std::min(best, sum);
      return;
    }
    if (g.edge_count() - next < need - taken) return;
    const auto [u, v] = g.edge(static_cast<EdgeIndex>(next));
    if (labels[u] != labels[v]) {
      Labels joined = labels;
      const std::uint8_t from = labels[v];
      for (auto& l : joined) {
        if (l == from) l = labels[u];
      }
      search(next + 1, taken + 1, sum + x[static_cast<EdgeIndex>(next)], joined);
    }
    search(next + 1, taken, sum, labels);
  }
};

}  // namespace

Weight bruteforce_mst(const Graph& g, const Weighting& x) {
  check_weighting(g, x);
  const std::size_t n = g.vertex_count();
  if (n > kBruteforceMaxVertices) {
    throw PreconditionError("exhaustive enumeration is limited to " +
                            std::to_string(kBruteforceMaxVertices) + " vertices, got " +
                            std::to_string(n));
  }
  TreeEnumerator::Labels labels{};
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<std::uint8_t>(v);
  TreeEnumerator enumerator{g, x, n - 1};
  enumerator.search(0, 0, 0, labels);
  return enumerator.best;
}

bool has_distinct_weights(const Weighting& x) {
  std::vector<Weight> sorted(x.values().begin(), x.values().end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Weight maggs_plotkin_mst(const Graph& g, const Weighting& x) {
  check_weighting(g, x);
  if (!has_distinct_weights(x)) {
    throw PreconditionError("Maggs-Plotkin selection requires pairwise distinct edge weights");
  }
  const std::size_t n = g.vertex_count();
  SquareMatrix weights(n, std::numeric_limits<Weight>::infinity());
  for (std::size_t i = 0; i < n; ++i) weights(i, i) = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    weights(u, v) = x[e];
    weights(v, u) = x[e];
  }
  OpCounter counter;
  const DistanceMatrix d = minmax_closure(std::move(weights), counter);

  Weight total = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (d(u, v) == x[e]) total += x[e];
  }
  return total;
}

DistanceMatrix hu_minmax_via_mst(const Graph& g, const Weighting& x) {
  const std::size_t n = g.vertex_count();
  const SpanningTree tree = kruskal_tree(g, x);

  std::vector<std::vector<Neighbor>> adjacency(n);
  for (EdgeIndex e : tree.edges()) {
    const auto [u, v] = g.edge(e);
    adjacency[u].push_back({v, e});
    adjacency[v].push_back({u, e});
  }

  // From every source, walk the tree carrying the heaviest edge seen so far.
  SquareMatrix out(n, 0);
  std::vector<Vertex> stack;
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    parent[s] = s;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : adjacency[v]) {
        if (nb.vertex == parent[v]) continue;
        parent[nb.vertex] = v;
        out(s, nb.vertex) = std::max(out(s, v), x[nb.edge]);
        stack.push_back(nb.vertex);
      }
    }
  }
  return DistanceMatrix(std::move(out));
}

}  // namespace mstdp
