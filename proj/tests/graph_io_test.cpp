#include <gtest/gtest.h>

#include "mstdp/errors.hpp"
#include "mstdp/graph_io.hpp"
#include "support/test_graphs.hpp"

namespace mstdp {
namespace {

GraphError parse_error(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return GraphError(GraphError::Kind::syntax, 0, "");
}

TEST(ParseGraphTest, Triangle) {
  const Instance inst = parse_graph("3 3\n1 2 1\n1 3 3\n2 3 2");
  EXPECT_EQ(inst.graph, testing::make_graph(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(inst.weights, testing::make_weights({1, 3, 2}));
}

TEST(ParseGraphTest, MinimalGraph) {
  const Instance inst = parse_graph("2 1\n1 2 0");
  EXPECT_EQ(inst.graph.vertex_count(), 2U);
  EXPECT_EQ(inst.weights, testing::make_weights({0}));
}

TEST(ParseGraphTest, SingleVertexWithoutEdges) {
  const Instance inst = parse_graph("1 0\n");
  EXPECT_EQ(inst.graph.vertex_count(), 1U);
  EXPECT_EQ(inst.graph.edge_count(), 0U);
}

TEST(ParseGraphTest, CommentsBlankLinesAndDecimals) {
  const Instance inst = parse_graph("# header\n\n3 2\n# edges\n1 2 0.5\n  3\t2   1e3 \r\n");
  EXPECT_EQ(inst.weights, testing::make_weights({0.5, 1000}));
  EXPECT_EQ(inst.graph.edge(1), (Edge{2, 1}));
}

TEST(ParseGraphTest, ReportsOffendingLine) {
  using Kind = GraphError::Kind;
  auto e = parse_error("3 2\n1 2 1\n1 3 -4");
  EXPECT_EQ(e.kind(), Kind::negative_weight);
  EXPECT_EQ(e.line(), 3U);

  e = parse_error("# c\n3 2\n1 2 1\n2 2 4");
  EXPECT_EQ(e.kind(), Kind::self_loop);
  EXPECT_EQ(e.line(), 4U);

  e = parse_error("3 3\n1 2 1\n2 3 1\n2 1 5");
  EXPECT_EQ(e.kind(), Kind::duplicate_edge);
  EXPECT_EQ(e.line(), 4U);

  e = parse_error("3 2\n1 2 1\n1 4 1");
  EXPECT_EQ(e.kind(), Kind::vertex_out_of_range);
  EXPECT_EQ(e.line(), 3U);

  e = parse_error("3 2\n1 2 1\n0 2 1");
  EXPECT_EQ(e.kind(), Kind::vertex_out_of_range);

  e = parse_error("3 2\n1 2 x\n");
  EXPECT_EQ(e.kind(), Kind::syntax);
  EXPECT_EQ(e.line(), 2U);

  e = parse_error("3 2\n1 2\n");
  EXPECT_EQ(e.kind(), Kind::syntax);
  EXPECT_EQ(e.line(), 2U);
}

TEST(ParseGraphTest, StructuralErrors) {
  using Kind = GraphError::Kind;
  EXPECT_EQ(parse_error("").kind(), Kind::syntax);
  EXPECT_EQ(parse_error("# only a comment\n").kind(), Kind::syntax);
  EXPECT_EQ(parse_error("0 0\n").kind(), Kind::empty_graph);
  EXPECT_EQ(parse_error("3 3\n1 2 1\n2 3 1\n").kind(), Kind::syntax);        // too few edges
  EXPECT_EQ(parse_error("3 1\n1 2 1\n2 3 1\n").kind(), Kind::syntax);        // trailing edge
  EXPECT_EQ(parse_error("3 4\n1 2 1\n").kind(), Kind::syntax);               // more than C(3,2)
  EXPECT_EQ(parse_error("4 2\n1 2 1\n3 4 1\n").kind(), Kind::disconnected);
  EXPECT_EQ(parse_error("2 1\n1 2 nan\n").kind(), Kind::syntax);
  EXPECT_EQ(parse_error("2 1\n1 2 inf\n").kind(), Kind::syntax);
}

TEST(FormatWeightTest, ShortestFixedNotation) {
  EXPECT_EQ(format_weight(3), "3");
  EXPECT_EQ(format_weight(1000000), "1000000");
  EXPECT_EQ(format_weight(0.1), "0.1");
  EXPECT_EQ(format_weight(0), "0");
}

TEST(WriteGraphTest, CanonicalTextRoundTripsBitExactly) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto [g, x] = testing::random_instance(rng, 1, 25, 1'000'000);
    // Mix in non-integral weights to exercise the shortest-decimal path.
    std::vector<Weight> w(x.values().begin(), x.values().end());
    for (auto& v : w) {
      if (rng.bernoulli(0.3)) v = v / 7.0;
    }
    const Instance inst{std::move(g), Weighting(std::move(w))};
    const std::string text = to_edge_list(inst);
    const Instance back = parse_graph(text);
    ASSERT_EQ(back.graph, inst.graph);
    ASSERT_EQ(back.weights, inst.weights);
    ASSERT_EQ(to_edge_list(back), text);
  }
}

}  // namespace
}  // namespace mstdp
