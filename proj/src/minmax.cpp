#include "mstdp/minmax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mstdp/errors.hpp"

namespace mstdp {

void check_extended_weighting(const SquareMatrix& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (w(i, i) != 0) {
      throw PreconditionError("weight matrix has nonzero diagonal entry at " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const Weight a = w(i, j);
      if (std::isnan(a) || a < 0) {
        throw PreconditionError("weight matrix entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is negative or NaN");
      }
      if (a != w(j, i)) {
        throw PreconditionError("weight matrix is not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
    }
  }
}

DistanceMatrix minmax_closure(SquareMatrix weights, OpCounter& counter,
                              const kernels::KernelTable& kernels) {
  check_extended_weighting(weights);
  const std::size_t n = weights.size();
  // Round k reads row k and column k, which round k leaves unchanged because
  // the diagonal is zero. Only the strict upper triangle is rewritten; the
  // lower one is restored from it before the next round reads it.
  for (std::size_t k = 0; k < n; ++k) {
    auto pivot_row = weights.row(k);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto row = weights.row(i);
      const std::size_t count = n - i - 1;
      kernels.relax_row(row.data() + i + 1, pivot_row.data() + i + 1, row[k], count);
      counter.record(OpKindTag::max, count);
      counter.record(OpKindTag::min, count);
    }
    weights.mirror_upper();
  }
  return DistanceMatrix(std::move(weights));
}

DistanceMatrix all_pairs_minmax(const ExtendedWeighting& xbar) {
  OpCounter counter;
  return minmax_closure(xbar.values, counter, kernels::active());
}

DistanceMatrix all_pairs_minmax(const ExtendedWeighting& xbar, OpCounter& counter,
                                const kernels::KernelTable& kernels) {
  return minmax_closure(xbar.values, counter, kernels);
}

void zero_edge_update_in_place(DistanceMatrix& d, Vertex a, Vertex b, OpCounter& counter,
                               const kernels::KernelTable& kernels, std::vector<Weight>& scratch) {
  const std::size_t n = d.size();
  if (a >= n || b >= n) {
    throw PreconditionError("zeroed pair {" + std::to_string(a) + "," + std::to_string(b) +
                            "} out of range for " + std::to_string(n) + " vertices");
  }
  if (a == b) throw PreconditionError("zeroed pair must have distinct endpoints");

  // Every read refers to the pre-update matrix; rows a and b are the only
  // ones read across rows, so they are snapshotted.
  SquareMatrix& m = d.mutable_values();
  scratch.resize(2 * n);
  std::copy_n(m.row(a).begin(), n, scratch.begin());
  std::copy_n(m.row(b).begin(), n, scratch.begin() + static_cast<std::ptrdiff_t>(n));
  const Weight* a_row = scratch.data();
  const Weight* b_row = scratch.data() + n;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t count = n - i - 1;
    kernels.zero_edge_row(m.row(i).data() + i + 1, a_row + i + 1, b_row + i + 1, a_row[i],
                          b_row[i], count);
    counter.record(OpKindTag::max, 2 * count);
    counter.record(OpKindTag::min, 2 * count);
  }
  m.mirror_upper();
}

DistanceMatrix zero_edge_update(const DistanceMatrix& d, Vertex a, Vertex b) {
  OpCounter counter;
  return zero_edge_update(d, a, b, counter, kernels::active());
}

DistanceMatrix zero_edge_update(const DistanceMatrix& d, Vertex a, Vertex b, OpCounter& counter,
                                const kernels::KernelTable& kernels) {
  DistanceMatrix out = d;
  std::vector<Weight> scratch;
  zero_edge_update_in_place(out, a, b, counter, kernels, scratch);
  return out;
}

namespace {

struct PathSearch {
  const Graph& g;
  const Weighting& x;
  Vertex target;
  std::vector<bool> on_path;
  Weight best = std::numeric_limits<Weight>::infinity();

  void visit(Vertex v, Weight heaviest) {
    if (heaviest >= best) return;
    if (v == target) {
      best = heaviest;
      return;
    }
    on_path[v] = true;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!on_path[nb.vertex]) visit(nb.vertex, std::max(heaviest, x[nb.edge]));
    }
    on_path[v] = false;
  }
};

}  // namespace

Weight minmax_distance_bruteforce(const Graph& g, const Weighting& x, Vertex u, Vertex v) {
  check_weighting(g, x);
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw PreconditionError("vertex out of range");
  }
  if (u == v) return 0;
  PathSearch search{g, x, v, std::vector<bool>(g.vertex_count(), false)};
  search.visit(u, 0);
  return search.best;
}

}  // namespace mstdp
