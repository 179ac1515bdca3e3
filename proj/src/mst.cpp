#include "mstdp/mst.hpp"

#include "mstdp/errors.hpp"
#include "mstdp/minmax.hpp"

namespace mstdp {

namespace {

// Shared driver: one closure, then read / accumulate / zero along `order`.
// The update after the last edge is skipped since nothing reads it.
Decomposition run_incremental(const Graph& g, const Weighting& x, std::span<const EdgeIndex> order,
                              OpCounter& counter, const kernels::KernelTable& kernels) {
  ExtendedWeighting xbar = complete_extension(g, x, counter);
  DistanceMatrix d = minmax_closure(std::move(xbar.values), counter, kernels);

  Decomposition out;
  out.terms.reserve(order.size());
  std::vector<Weight> scratch;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const auto [a, b] = g.edge(order[t]);
    const Weight term = d(a, b);
    out.terms.push_back({order[t], term});
    out.total += term;
    counter.record(OpKindTag::add, 1);
    if (t + 1 < order.size()) {
      zero_edge_update_in_place(d, a, b, counter, kernels, scratch);
    }
  }
  return out;
}

}  // namespace

Decomposition mst_decomposition(const Graph& g, const Weighting& x, const SpanningTree& t) {
  OpCounter counter;
  return mst_decomposition(g, x, t, counter, kernels::active());
}

Decomposition mst_decomposition(const Graph& g, const Weighting& x, const SpanningTree& t,
                                OpCounter& counter, const kernels::KernelTable& kernels) {
  check_weighting(g, x);
  check_spanning_tree(g, t);
  return run_incremental(g, x, t.edges(), counter, kernels);
}

MstResult mst_puredp(const Graph& g, const Weighting& x) {
  OpCounter counter;
  return mst_puredp(g, x, counter, kernels::active());
}

MstResult mst_puredp(const Graph& g, const Weighting& x, OpCounter& counter,
                     const kernels::KernelTable& kernels) {
  check_weighting(g, x);
  const SpanningTree tree = fix_spanning_tree(g);
  const OpCounts before = counter.counts();
  Decomposition dec = run_incremental(g, x, tree.edges(), counter, kernels);
  const OpCounts& after = counter.counts();
  return {dec.total, OpCounts{after.min_count - before.min_count, after.max_count - before.max_count,
                              after.add_count - before.add_count}};
}

MstResult mst_puredp_naive(const Graph& g, const Weighting& x) {
  OpCounter counter;
  return mst_puredp_naive(g, x, counter, kernels::active());
}

MstResult mst_puredp_naive(const Graph& g, const Weighting& x, OpCounter& counter,
                           const kernels::KernelTable& kernels) {
  check_weighting(g, x);
  const SpanningTree tree = fix_spanning_tree(g);
  const OpCounts before = counter.counts();

  ExtendedWeighting xbar = complete_extension(g, x, counter);
  SquareMatrix weights = std::move(xbar.values);
  Weight total = 0;
  for (EdgeIndex e : tree.edges()) {
    const auto [a, b] = g.edge(e);
    DistanceMatrix d = minmax_closure(weights, counter, kernels);
    total += d(a, b);
    counter.record(OpKindTag::add, 1);
    weights(a, b) = 0;
    weights(b, a) = 0;
  }

  const OpCounts& after = counter.counts();
  return {total, OpCounts{after.min_count - before.min_count, after.max_count - before.max_count,
                          after.add_count - before.add_count}};
}

OpCounts expected_puredp_counts(std::size_t n, std::size_t m) noexcept {
  const std::uint64_t pairs = n * (n - 1) / 2;
  const std::uint64_t closure = n * pairs;
  const std::uint64_t update = 2 * pairs;
  const std::uint64_t rounds = n >= 2 ? n - 2 : 0;
  const std::uint64_t extension = m >= 1 ? m - 1 : 0;
  return {closure + rounds * update, closure + rounds * update + extension, n - 1};
}

OpCounts expected_naive_counts(std::size_t n, std::size_t m) noexcept {
  const std::uint64_t pairs = n * (n - 1) / 2;
  const std::uint64_t closure = n * pairs;
  const std::uint64_t extension = m >= 1 ? m - 1 : 0;
  return {(n - 1) * closure, (n - 1) * closure + extension, n - 1};
}

}  // namespace mstdp
