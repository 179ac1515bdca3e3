#include "mstdp/errors.hpp"

namespace mstdp {

namespace {

std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

GraphError::GraphError(Kind kind, std::size_t line, const std::string& message)
    : Error(with_line(line, message)), kind_(kind), line_(line) {}

std::string_view to_string(GraphError::Kind kind) noexcept {
  switch (kind) {
    case GraphError::Kind::syntax: return "syntax error";
    case GraphError::Kind::empty_graph: return "empty graph";
    case GraphError::Kind::self_loop: return "self-loop";
    case GraphError::Kind::duplicate_edge: return "duplicate edge";
    case GraphError::Kind::negative_weight: return "negative weight";
    case GraphError::Kind::vertex_out_of_range: return "vertex out of range";
    case GraphError::Kind::disconnected: return "disconnected graph";
  }
  return "graph error";
}

}  // namespace mstdp
