#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mstdp/graph.hpp"
#include "mstdp/ops.hpp"

namespace mstdp {

/// The complete instruction set. There is deliberately no subtraction,
/// division, comparison or branch.
enum class OpKind : std::uint8_t { input, constant, min, max, add };

inline constexpr std::size_t kOpKindCount = 5;

using NodeId = std::uint32_t;

/// For `input`, `lhs` is the edge index; for `constant`, an index into the
/// constant pool. Binary kinds reference two earlier nodes.
struct Node {
  OpKind kind;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Branch-free straight-line program over {min, max, +} with one output.
class Circuit {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Weight>& constants() const noexcept { return constants_; }
  NodeId output() const noexcept { return output_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  friend class CircuitBuilder;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Node> nodes_;
  std::vector<Weight> constants_;
  NodeId output_ = 0;
};

/// Appends nodes in construction order. Node ids are dense.
class CircuitBuilder {
 public:
  CircuitBuilder(std::size_t n, std::size_t m);

  NodeId input(EdgeIndex e);
  /// The shared constant-zero node (created on first use).
  NodeId zero();
  NodeId min(NodeId a, NodeId b) { return binary(OpKind::min, a, b); }
  NodeId max(NodeId a, NodeId b) { return binary(OpKind::max, a, b); }
  NodeId add(NodeId a, NodeId b) { return binary(OpKind::add, a, b); }

  /// Throws PreconditionError unless every edge has exactly one input node.
  Circuit finish(NodeId output) &&;

 private:
  NodeId push(Node node);
  NodeId binary(OpKind kind, NodeId a, NodeId b);

  Circuit circuit_;
  std::vector<bool> has_input_;
  bool has_zero_ = false;
  NodeId zero_ = 0;
};

/// Straight-line program performing exactly the operations of mst_puredp.
Circuit compile_mst_circuit(const Graph& g);

/// Straight-line program performing exactly the operations of mst_puredp_naive.
Circuit compile_mst_circuit_naive(const Graph& g);

/// Forward evaluation. Throws PreconditionError on an arity mismatch.
Weight evaluate(const Circuit& c, std::span<const Weight> inputs);
Weight evaluate(const Circuit& c, const Weighting& x);

OpCounts count_ops(const Circuit& c);

/// Text form, one node per line:
///   <id> = input <edge> | const <value> | min <a> <b> | max <a> <b> | add <a> <b>
/// followed by `output <id>`.
void write_circuit(std::ostream& out, const Circuit& c);
std::string to_text(const Circuit& c);

}  // namespace mstdp
