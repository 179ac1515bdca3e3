#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mstdp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid graph input. Raised by the edge-list parser and by
/// `Graph` / `Weighting` construction.
class GraphError : public Error {
 public:
  enum class Kind {
    syntax,
    empty_graph,
    self_loop,
    duplicate_edge,
    negative_weight,
    vertex_out_of_range,
    disconnected,
  };

  /// `line` is the 1-based input line, or 0 when the error is not tied to a line.
  GraphError(Kind kind, std::size_t line, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

std::string_view to_string(GraphError::Kind kind) noexcept;

/// An algorithm was called outside its stated domain (duplicate weights for
/// the Maggs-Plotkin oracle, too many vertices for enumeration, a malformed
/// distance matrix, an invalid spanning tree, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mstdp
