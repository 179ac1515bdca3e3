#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "mstdp/graph.hpp"

namespace mstdp {

/// Seeded generator with platform-independent output: std::mt19937_64 (whose
/// sequence the standard fixes) plus bounded draws defined here rather than
/// the implementation-specific std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], by rejection.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  /// True with probability p; p <= 0 never, p >= 1 always.
  bool bernoulli(double p);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform(0, i - 1);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Random spanning tree (each vertex of a random order attaches to a uniform
/// earlier one), then every other pair independently with probability
/// `density`. Edges are listed in lexicographic (min, max) order.
Graph random_connected_graph(std::size_t n, double density, Rng& rng);

/// Integer weights drawn uniformly from [0, max_weight].
Weighting random_weights(std::size_t m, std::uint64_t max_weight, Rng& rng);

}  // namespace mstdp
