#include <gtest/gtest.h>

#include <sstream>
#include <unordered_map>

#include "mstdp/circuit.hpp"
#include "mstdp/errors.hpp"
#include "mstdp/mst.hpp"
#include "support/test_graphs.hpp"

namespace mstdp {
namespace {

using testing::make_graph;
using testing::make_weights;

// Reads the text form back and evaluates it, independently of Circuit.
Weight evaluate_text(const std::string& text, std::span<const Weight> inputs) {
  std::istringstream in(text);
  std::string line;
  std::vector<Weight> values;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string first;
    fields >> first;
    if (first == "output") {
      std::size_t id;
      fields >> id;
      return values.at(id);
    }
    std::string eq, op;
    fields >> eq >> op;
    EXPECT_EQ(std::stoul(first), values.size());
    EXPECT_EQ(eq, "=");
    if (op == "input") {
      std::size_t e;
      fields >> e;
      values.push_back(inputs[e]);
    } else if (op == "const") {
      std::string v;
      fields >> v;
      EXPECT_EQ(v, "0");
      values.push_back(0);
    } else {
      std::size_t a, b;
      fields >> a >> b;
      EXPECT_LT(a, values.size());
      EXPECT_LT(b, values.size());
      if (op == "min") values.push_back(std::min(values[a], values[b]));
      else if (op == "max") values.push_back(std::max(values[a], values[b]));
      else if (op == "add") values.push_back(values[a] + values[b]);
      else ADD_FAILURE() << "unknown op " << op;
    }
  }
  ADD_FAILURE() << "no output line";
  return -1;
}

void expect_well_formed(const Circuit& c) {
  std::size_t inputs = 0;
  for (std::size_t id = 0; id < c.nodes().size(); ++id) {
    const Node& node = c.nodes()[id];
    switch (node.kind) {
      case OpKind::input:
        ++inputs;
        ASSERT_LT(node.lhs, c.edge_count());
        break;
      case OpKind::constant:
        ASSERT_EQ(c.constants().at(node.lhs), 0);
        break;
      case OpKind::min:
      case OpKind::max:
      case OpKind::add:
        ASSERT_LT(node.lhs, id);
        ASSERT_LT(node.rhs, id);
        break;
      default:
        FAIL() << "node kind outside {input, const, min, max, add}";
    }
  }
  EXPECT_EQ(inputs, c.edge_count());
  EXPECT_LT(c.output(), c.nodes().size());
}

TEST(CircuitTest, InstructionSetHasOnlyFiveKinds) {
  static_assert(kOpKindCount == 5);
  static_assert(static_cast<int>(OpKind::add) == 4);
}

TEST(CircuitTest, TriangleEvaluatesToMstWeight) {
  const Graph g = make_graph(3, {{1, 2}, {1, 3}, {2, 3}});
  const Circuit c = compile_mst_circuit(g);
  expect_well_formed(c);
  EXPECT_EQ(evaluate(c, make_weights({1, 3, 2})), 3);
  EXPECT_EQ(count_ops(c), mst_puredp(g, make_weights({1, 3, 2})).ops);
}

TEST(CircuitTest, SingleEdge) {
  const Graph g = make_graph(2, {{1, 2}});
  const Circuit c = compile_mst_circuit(g);
  expect_well_formed(c);
  EXPECT_EQ(evaluate(c, make_weights({9})), 9);
  EXPECT_EQ(count_ops(c), (OpCounts{2, 2, 1}));
}

TEST(CircuitTest, SingleVertexOutputsConstantZero) {
  const Circuit c = compile_mst_circuit(Graph(1, {}));
  expect_well_formed(c);
  EXPECT_EQ(c.nodes()[c.output()].kind, OpKind::constant);
  EXPECT_EQ(evaluate(c, std::span<const Weight>{}), 0);
}

TEST(CircuitTest, CompilationIsDeterministic) {
  Rng rng(71);
  const Graph g = testing::random_graph_with_density(9, rng);
  EXPECT_EQ(compile_mst_circuit(g), compile_mst_circuit(g));
  EXPECT_EQ(to_text(compile_mst_circuit(g)), to_text(compile_mst_circuit(g)));
}

TEST(CircuitTest, EvaluationMatchesSolversAndCountsMatchInstrumentation) {
  Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    auto [g, x] = testing::random_instance(rng, 1, 14, 1'000'000);
    const Circuit fast = compile_mst_circuit(g);
    const Circuit naive = compile_mst_circuit_naive(g);
    expect_well_formed(fast);
    expect_well_formed(naive);
    const MstResult r = mst_puredp(g, x);
    ASSERT_EQ(evaluate(fast, x), r.weight);
    ASSERT_EQ(evaluate(naive, x), r.weight);
    ASSERT_EQ(count_ops(fast), r.ops);
    ASSERT_EQ(count_ops(naive), mst_puredp_naive(g, x).ops);
  }
}

TEST(CircuitTest, TextFormEvaluatesIndependently) {
  Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    auto [g, x] = testing::random_instance(rng, 1, 9, 1000);
    const std::string text = to_text(compile_mst_circuit(g));
    ASSERT_EQ(evaluate_text(text, x.values()), mst_puredp(g, x).weight);
  }
}

TEST(CircuitTest, MonotoneInItsInputs) {
  Rng rng(74);
  for (int trial = 0; trial < 30; ++trial) {
    auto [g, x] = testing::random_instance(rng, 2, 10, 100);
    const Circuit c = compile_mst_circuit(g);
    std::vector<Weight> y(x.values().begin(), x.values().end());
    for (auto& v : y) v += static_cast<Weight>(rng.uniform(0, 5));
    ASSERT_LE(evaluate(c, x), evaluate(c, y));
  }
}

TEST(CircuitTest, RejectsWrongArity) {
  const Circuit c = compile_mst_circuit(make_graph(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_THROW(evaluate(c, make_weights({1, 2})), PreconditionError);
}

TEST(CircuitTest, NaiveCircuitIsLargerOnK8) {
  const Graph k8 = testing::complete_graph(8);
  const OpCounts fast = count_ops(compile_mst_circuit(k8));
  const OpCounts naive = count_ops(compile_mst_circuit_naive(k8));
  EXPECT_GT(naive.total(), fast.total());
  EXPECT_EQ(fast, expected_puredp_counts(8, 28));
  EXPECT_EQ(naive, expected_naive_counts(8, 28));
}

TEST(CircuitTest, CubicGrowthOnCompleteGraphs) {
  double previous = 0;
  for (std::size_t n : {4, 8, 16, 32, 64}) {
    const OpCounts counts = count_ops(compile_mst_circuit(testing::complete_graph(n)));
    const double n3 = static_cast<double>(n * n * n);
    EXPECT_LE(static_cast<double>(counts.total()), 10 * n3) << "n=" << n;
    const double ratio = static_cast<double>(counts.total()) / n3;
    if (previous > 0) {
      EXPECT_LT(ratio, 2 * previous);
    }
    previous = ratio;
  }
}

TEST(CircuitTest, WriterUsesDocumentedSyntax) {
  const std::string text = to_text(compile_mst_circuit(make_graph(2, {{1, 2}})));
  EXPECT_EQ(text.rfind("0 = input 0\n1 = const 0\n", 0), 0U) << text;
  EXPECT_NE(text.find("= max 1 0\n"), std::string::npos) << text;
  EXPECT_NE(text.find("\noutput "), std::string::npos);
}

TEST(CircuitBuilderTest, RejectsForwardReferencesAndMissingInputs) {
  CircuitBuilder b(2, 1);
  EXPECT_THROW(b.min(0, 1), PreconditionError);
  CircuitBuilder missing(2, 1);
  const NodeId z = missing.zero();
  EXPECT_THROW(std::move(missing).finish(z), PreconditionError);
  CircuitBuilder twice(2, 1);
  twice.input(0);
  EXPECT_THROW(twice.input(0), PreconditionError);
}

}  // namespace
}  // namespace mstdp
