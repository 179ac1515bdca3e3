#include "mstdp/graph_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "mstdp/errors.hpp"

namespace mstdp {

namespace {

using Kind = GraphError::Kind;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename Int>
Int parse_integer(std::string_view field, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw GraphError(Kind::syntax, line,
                     std::string("expected ") + what + ", got '" + std::string(field) + "'");
  }
  return value;
}

Weight parse_weight(std::string_view field, std::size_t line) {
  Weight value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value,
                                   std::chars_format::general);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw GraphError(Kind::syntax, line, "expected a finite decimal weight, got '" +
                                             std::string(field) + "'");
  }
  if (value < 0) throw GraphError(Kind::negative_weight, line, "negative weight " + std::string(field));
  return value == 0 ? Weight{0} : value;
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Instance parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  auto next_line = [&](std::vector<std::string_view>& fields) {
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (is_skippable(raw)) continue;
      fields = split_fields(raw);
      return true;
    }
    return false;
  };

  std::vector<std::string_view> fields;
  if (!next_line(fields)) throw GraphError(Kind::syntax, line_no + 1, "missing 'n m' header");
  if (fields.size() != 2) throw GraphError(Kind::syntax, line_no, "header must be 'n m'");
  const auto n = parse_integer<std::uint64_t>(fields[0], line_no, "vertex count");
  const auto m = parse_integer<std::uint64_t>(fields[1], line_no, "edge count");
  if (n == 0) throw GraphError(Kind::empty_graph, line_no, "vertex count must be positive");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw GraphError(Kind::syntax, line_no, "vertex count too large");
  }
  if (m > n * (n - 1) / 2) {
    throw GraphError(Kind::syntax, line_no, "edge count exceeds n(n-1)/2 for a simple graph");
  }

  std::vector<Edge> edges;
  std::vector<Weight> weights;
  edges.reserve(m);
  weights.reserve(m);
  std::unordered_map<std::uint64_t, std::size_t> seen;  // pair key -> defining line
  for (std::uint64_t e = 0; e < m; ++e) {
    if (!next_line(fields)) {
      throw GraphError(Kind::syntax, line_no + 1,
                       "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    }
    if (fields.size() != 3) throw GraphError(Kind::syntax, line_no, "edge line must be 'u v w'");
    const auto u = parse_integer<std::int64_t>(fields[0], line_no, "vertex id");
    const auto v = parse_integer<std::int64_t>(fields[1], line_no, "vertex id");
    const Weight w = parse_weight(fields[2], line_no);
    for (auto id : {u, v}) {
      if (id < 1 || static_cast<std::uint64_t>(id) > n) {
        throw GraphError(Kind::vertex_out_of_range, line_no,
                         "vertex " + std::to_string(id) + " outside 1.." + std::to_string(n));
      }
    }
    if (u == v) throw GraphError(Kind::self_loop, line_no, "self-loop at vertex " + std::to_string(u));
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    auto [it, inserted] = seen.emplace(lo * (n + 1) + hi, line_no);
    if (!inserted) {
      throw GraphError(Kind::duplicate_edge, line_no,
                       "edge {" + std::to_string(lo) + "," + std::to_string(hi) +
                           "} already given on line " + std::to_string(it->second));
    }
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    weights.push_back(w);
  }
  if (next_line(fields)) {
    throw GraphError(Kind::syntax, line_no, "unexpected content after " + std::to_string(m) + " edges");
  }

  Graph graph(static_cast<std::size_t>(n), std::move(edges));
  return Instance{std::move(graph), Weighting(std::move(weights))};
}

Instance parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Instance load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(Kind::syntax, 0, "cannot open '" + path + "'");
  return parse_graph(in);
}

std::string format_weight(Weight w) {
  std::array<char, 400> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w, std::chars_format::fixed);
  if (ec != std::errc{}) return std::to_string(w);
  return std::string(buf.data(), ptr);
}

void write_graph(std::ostream& out, const Instance& instance) {
  const Graph& g = instance.graph;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    out << (u + 1) << ' ' << (v + 1) << ' ' << format_weight(instance.weights[e]) << '\n';
  }
}

std::string to_edge_list(const Instance& instance) {
  std::ostringstream out;
  write_graph(out, instance);
  return out.str();
}

}  // namespace mstdp
