#include "mstdp/circuit.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "mstdp/errors.hpp"
#include "mstdp/graph_io.hpp"

namespace mstdp {

CircuitBuilder::CircuitBuilder(std::size_t n, std::size_t m) : has_input_(m, false) {
  circuit_.n_ = n;
  circuit_.m_ = m;
}

NodeId CircuitBuilder::push(Node node) {
  circuit_.nodes_.push_back(node);
  return static_cast<NodeId>(circuit_.nodes_.size() - 1);
}

NodeId CircuitBuilder::input(EdgeIndex e) {
  if (e >= has_input_.size() || has_input_[e]) {
    throw PreconditionError("input node for edge " + std::to_string(e) + " is out of range or repeated");
  }
  has_input_[e] = true;
  return push({OpKind::input, e, 0});
}

NodeId CircuitBuilder::zero() {
  if (!has_zero_) {
    circuit_.constants_.push_back(0);
    zero_ = push({OpKind::constant, static_cast<std::uint32_t>(circuit_.constants_.size() - 1), 0});
    has_zero_ = true;
  }
  return zero_;
}

NodeId CircuitBuilder::binary(OpKind kind, NodeId a, NodeId b) {
  const auto size = circuit_.nodes_.size();
  if (a >= size || b >= size) throw PreconditionError("operand refers to a node not yet defined");
  return push({kind, a, b});
}

Circuit CircuitBuilder::finish(NodeId output) && {
  if (output >= circuit_.nodes_.size()) throw PreconditionError("output refers to a missing node");
  if (std::find(has_input_.begin(), has_input_.end(), false) != has_input_.end()) {
    throw PreconditionError("every edge needs an input node");
  }
  circuit_.output_ = output;
  return std::move(circuit_);
}

namespace {

// Node ids standing for the current pair weights / distances, row-major n x n.
using NodeTable = std::vector<NodeId>;

struct Emitter {
  const Graph& g;
  CircuitBuilder& b;
  std::size_t n = g.vertex_count();

  NodeId& at(NodeTable& t, std::size_t i, std::size_t j) const { return t[i * n + j]; }

  // Inputs first, then the max fold, then the K_n table.
  NodeTable extension() {
    const std::size_t m = g.edge_count();
    std::vector<NodeId> inputs(m);
    for (EdgeIndex e = 0; e < m; ++e) inputs[e] = b.input(e);
    const NodeId zero = b.zero();
    NodeId big = zero;
    if (m > 0) {
      big = inputs[0];
      for (EdgeIndex e = 1; e < m; ++e) big = b.max(big, inputs[e]);
    }
    NodeTable t(n * n, big);
    for (std::size_t i = 0; i < n; ++i) at(t, i, i) = zero;
    for (EdgeIndex e = 0; e < m; ++e) {
      const auto [u, v] = g.edge(e);
      at(t, u, v) = inputs[e];
      at(t, v, u) = inputs[e];
    }
    return t;
  }

  void closure(NodeTable& t) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const NodeId pivot = at(t, i, k);
        for (std::size_t j = i + 1; j < n; ++j) {
          const NodeId via = b.max(pivot, at(t, k, j));
          at(t, i, j) = b.min(at(t, i, j), via);
        }
      }
      mirror(t);
    }
  }

  void zero_update(NodeTable& t, Vertex a, Vertex c) {
    const NodeTable before = t;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const NodeId via_ab = b.max(before[a * n + i], before[c * n + j]);
        const NodeId via_ba = b.max(before[c * n + i], before[a * n + j]);
        at(t, i, j) = b.min(b.min(at(t, i, j), via_ab), via_ba);
      }
    }
    mirror(t);
  }

  void mirror(NodeTable& t) const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) at(t, j, i) = at(t, i, j);
    }
  }
};

}  // namespace

Circuit compile_mst_circuit(const Graph& g) {
  CircuitBuilder builder(g.vertex_count(), g.edge_count());
  Emitter emit{g, builder};
  NodeTable t = emit.extension();
  emit.closure(t);

  const SpanningTree tree = fix_spanning_tree(g);
  NodeId acc = builder.zero();
  for (std::size_t r = 0; r < tree.size(); ++r) {
    const auto [a, c] = g.edge(tree[r]);
    acc = builder.add(acc, emit.at(t, a, c));
    if (r + 1 < tree.size()) emit.zero_update(t, a, c);
  }
  return std::move(builder).finish(acc);
}

Circuit compile_mst_circuit_naive(const Graph& g) {
  CircuitBuilder builder(g.vertex_count(), g.edge_count());
  Emitter emit{g, builder};
  NodeTable weights = emit.extension();

  const SpanningTree tree = fix_spanning_tree(g);
  NodeId acc = builder.zero();
  for (EdgeIndex e : tree.edges()) {
    const auto [a, c] = g.edge(e);
    NodeTable d = weights;
    emit.closure(d);
    acc = builder.add(acc, emit.at(d, a, c));
    emit.at(weights, a, c) = builder.zero();
    emit.at(weights, c, a) = builder.zero();
  }
  return std::move(builder).finish(acc);
}

Weight evaluate(const Circuit& c, std::span<const Weight> inputs) {
  if (inputs.size() != c.edge_count()) {
    throw PreconditionError("circuit expects " + std::to_string(c.edge_count()) + " inputs, got " +
                            std::to_string(inputs.size()));
  }
  const auto& nodes = c.nodes();
  std::vector<Weight> values(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const Node& node = nodes[id];
    switch (node.kind) {
      case OpKind::input: values[id] = inputs[node.lhs]; break;
      case OpKind::constant: values[id] = c.constants()[node.lhs]; break;
      case OpKind::min: values[id] = std::min(values[node.lhs], values[node.rhs]); break;
      case OpKind::max: values[id] = std::max(values[node.lhs], values[node.rhs]); break;
      case OpKind::add: values[id] = values[node.lhs] + values[node.rhs]; break;
    }
  }
  return values.at(c.output());
}

Weight evaluate(const Circuit& c, const Weighting& x) { return evaluate(c, x.values()); }

OpCounts count_ops(const Circuit& c) {
  OpCounts counts;
  for (const Node& node : c.nodes()) {
    switch (node.kind) {
      case OpKind::min: ++counts.min_count; break;
      case OpKind::max: ++counts.max_count; break;
      case OpKind::add: ++counts.add_count; break;
      case OpKind::input:
      case OpKind::constant: break;
    }
  }
  return counts;
}

void write_circuit(std::ostream& out, const Circuit& c) {
  const auto& nodes = c.nodes();
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const Node& node = nodes[id];
    out << id << " = ";
    switch (node.kind) {
      case OpKind::input: out << "input " << node.lhs; break;
      case OpKind::constant: out << "const " << format_weight(c.constants()[node.lhs]); break;
      case OpKind::min: out << "min " << node.lhs << ' ' << node.rhs; break;
      case OpKind::max: out << "max " << node.lhs << ' ' << node.rhs; break;
      case OpKind::add: out << "add " << node.lhs << ' ' << node.rhs; break;
    }
    out << '\n';
  }
  out << "output " << c.output() << '\n';
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  write_circuit(out, c);
  return out.str();
}

}  // namespace mstdp
