#include "mstdp/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mstdp/errors.hpp"

namespace mstdp {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw PreconditionError("empty range for uniform draw");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t bound = span + 1;
  // Largest multiple of `bound` representable, so the accepted draws split evenly.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + draw % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return unit() < p;
}

Graph random_connected_graph(std::size_t n, double density, Rng& rng) {
  if (n == 0) throw PreconditionError("graph needs at least one vertex");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  rng.shuffle(std::span<Vertex>(order));

  std::vector<bool> present(n * n, false);
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex u = order[i];
    const Vertex v = order[rng.uniform(0, i - 1)];
    present[std::min(u, v) * n + std::max(u, v)] = true;
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool tree_edge = present[u * n + v];
      const bool extra = !tree_edge && rng.bernoulli(density);
      if (tree_edge || extra) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Weighting random_weights(std::size_t m, std::uint64_t max_weight, Rng& rng) {
  std::vector<Weight> values(m);
  for (auto& w : values) w = static_cast<Weight>(rng.uniform(0, max_weight));
  return Weighting(std::move(values));
}

}  // namespace mstdp
