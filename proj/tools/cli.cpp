#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "mstdp/circuit.hpp"
#include "mstdp/errors.hpp"
#include "mstdp/graph_io.hpp"
#include "mstdp/mst.hpp"
#include "mstdp/oracles.hpp"
#include "mstdp/random.hpp"

namespace mstdp::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultMaxWeight = 1'000'000;
constexpr std::uint64_t kDefaultSeed = 1;

const std::vector<std::string> kAlgorithms = {"puredp", "puredp-naive", "kruskal", "maggs-plotkin",
                                              "bruteforce"};

struct RunReport {
  std::string algorithm;
  Weight mst_weight = 0;
  std::optional<OpCounts> ops;
  std::optional<Decomposition> decomposition;
  double time_ms = 0;
};

RunReport run_algorithm(const std::string& algorithm, const Instance& inst) {
  const Graph& g = inst.graph;
  const Weighting& x = inst.weights;
  RunReport report;
  report.algorithm = algorithm;
  const auto start = std::chrono::steady_clock::now();
  if (algorithm == "puredp") {
    const MstResult r = mst_puredp(g, x);
    report.mst_weight = r.weight;
    report.ops = r.ops;
  } else if (algorithm == "puredp-naive") {
    const MstResult r = mst_puredp_naive(g, x);
    report.mst_weight = r.weight;
    report.ops = r.ops;
  } else if (algorithm == "kruskal") {
    report.mst_weight = kruskal_mst(g, x);
  } else if (algorithm == "maggs-plotkin") {
    report.mst_weight = maggs_plotkin_mst(g, x);
  } else {
    report.mst_weight = bruteforce_mst(g, x);
  }
  const auto stop = std::chrono::steady_clock::now();
  report.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

// Integral weights are written as JSON integers.
json weight_json(Weight w) {
  if (w == std::floor(w) && std::fabs(w) <= 9007199254740992.0) {
    return static_cast<std::int64_t>(w);
  }
  return w;
}

json ops_json(const OpCounts& ops) {
  return json{{"min", ops.min_count},
              {"max", ops.max_count},
              {"add", ops.add_count},
              {"total", ops.total()}};
}

json report_json(const RunReport& r, const Graph& g) {
  json out;
  out["algorithm"] = r.algorithm;
  out["mst_weight"] = weight_json(r.mst_weight);
  out["ops"] = r.ops ? ops_json(*r.ops) : json(nullptr);
  if (r.decomposition) {
    json terms = json::array();
    for (const auto& term : r.decomposition->terms) {
      const auto [u, v] = g.edge(term.edge);
      terms.push_back(json{{"edge", term.edge},
                           {"u", u + 1},
                           {"v", v + 1},
                           {"distance", weight_json(term.distance)}});
    }
    out["decomposition"] = std::move(terms);
  } else {
    out["decomposition"] = nullptr;
  }
  out["time_ms"] = r.time_ms;
  return out;
}

void write_report_text(std::ostream& out, const RunReport& r, const Graph& g) {
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << '\n';
  };
  row("algorithm", r.algorithm);
  row("mst_weight", format_weight(r.mst_weight));
  if (r.ops) {
    row("ops.min", std::to_string(r.ops->min_count));
    row("ops.max", std::to_string(r.ops->max_count));
    row("ops.add", std::to_string(r.ops->add_count));
    row("ops.total", std::to_string(r.ops->total()));
  }
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << r.time_ms;
  row("time_ms", ms.str());
  if (r.decomposition) {
    out << "decomposition\n";
    for (const auto& term : r.decomposition->terms) {
      const auto [u, v] = g.edge(term.edge);
      out << "  " << std::left << std::setw(8) << term.edge << std::setw(12)
          << ("{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}")
          << format_weight(term.distance) << '\n';
    }
  }
}

// Maps library exceptions to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_solve(const std::string& path, const std::string& algorithm, const std::string& format,
              bool with_decomposition, std::ostream& out) {
  const Instance inst = load_graph(path);
  RunReport report = run_algorithm(algorithm, inst);
  if (with_decomposition && (algorithm == "puredp" || algorithm == "puredp-naive")) {
    report.decomposition = mst_decomposition(inst.graph, inst.weights, fix_spanning_tree(inst.graph));
  }
  if (format == "text") {
    write_report_text(out, report, inst.graph);
  } else {
    out << report_json(report, inst.graph).dump(2) << '\n';
  }
  return kOk;
}

int cmd_compare(const std::string& path, std::ostream& out) {
  const Instance inst = load_graph(path);
  std::optional<Weight> reference;
  bool agree = true;
  for (const auto& algorithm : kAlgorithms) {
    std::string skipped;
    if (algorithm == "maggs-plotkin" && !has_distinct_weights(inst.weights)) {
      skipped = "skipped (duplicate weights)";
    } else if (algorithm == "bruteforce" && inst.graph.vertex_count() > kBruteforceMaxVertices) {
      skipped = "skipped (more than " + std::to_string(kBruteforceMaxVertices) + " vertices)";
    }
    out << std::left << std::setw(16) << algorithm;
    if (!skipped.empty()) {
      out << skipped << '\n';
      continue;
    }
    const Weight w = run_algorithm(algorithm, inst).mst_weight;
    out << format_weight(w) << '\n';
    if (!reference) reference = w;
    agree = agree && w == *reference;
  }
  out << (agree ? "AGREE" : "DISAGREE") << '\n';
  return agree ? kOk : kDisagreement;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  for (std::size_t n : sizes) {
    if (n < 2) throw PreconditionError("bench sizes must be at least 2");
  }
  out << "n,mst_weight,ops_puredp,ops_naive,puredp_per_n3,naive_per_n4\n";
  Rng rng(seed);
  int status = kOk;
  for (std::size_t n : sizes) {
    const Graph g = random_connected_graph(n, 1.0, rng);
    const Weighting x = random_weights(g.edge_count(), kDefaultMaxWeight, rng);
    const MstResult fast = mst_puredp(g, x);
    const MstResult naive = mst_puredp_naive(g, x);
    if (fast.weight != naive.weight) {
      err << "error: n=" << n << ": puredp " << format_weight(fast.weight) << " != naive "
          << format_weight(naive.weight) << '\n';
      status = kDisagreement;
    }
    const double n3 = std::pow(static_cast<double>(n), 3);
    std::ostringstream line;
    line << n << ',' << format_weight(fast.weight) << ',' << fast.ops.total() << ','
         << naive.ops.total() << ',' << std::fixed << std::setprecision(6)
         << static_cast<double>(fast.ops.total()) / n3 << ','
         << static_cast<double>(naive.ops.total()) / (n3 * static_cast<double>(n));
    out << line.str() << '\n';
  }
  return status;
}

int cmd_gen(std::size_t n, double density, std::uint64_t max_weight, std::uint64_t seed,
            std::ostream& out) {
  if (n < 1) throw PreconditionError("--n must be at least 1");
  if (!(density >= 0 && density <= 1)) throw PreconditionError("--density must lie in [0, 1]");
  Rng rng(seed);
  Graph g = random_connected_graph(n, density, rng);
  Weighting x = random_weights(g.edge_count(), max_weight, rng);
  out << "# mstdp gen --n " << n << " --density " << density << " --max-weight " << max_weight
      << " --seed " << seed << '\n';
  write_graph(out, Instance{std::move(g), std::move(x)});
  return kOk;
}

int cmd_emit_circuit(const std::string& path, std::ostream& out) {
  const Instance inst = load_graph(path);
  write_circuit(out, compile_mst_circuit(inst.graph));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum spanning tree weight by a branch-free (min, max, +) dynamic program"};
  app.name("mstdp");
  app.require_subcommand(1);

  std::string path;
  std::string algorithm = "puredp";
  std::string format = "json";
  bool decomposition = false;
  auto* solve = app.add_subcommand("solve", "Compute the MST weight of an edge-list file");
  solve->add_option("file", path, "Edge-list file")->required();
  solve->add_option("--algorithm", algorithm, "Algorithm to run")
      ->check(CLI::IsMember(kAlgorithms));
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  solve->add_flag("--decomposition", decomposition, "Include the per-tree-edge terms (pure DP only)");

  auto* compare = app.add_subcommand("compare", "Run every applicable algorithm and compare");
  compare->add_option("file", path, "Edge-list file")->required();

  std::vector<std::size_t> sizes;
  std::uint64_t seed = kDefaultSeed;
  auto* bench = app.add_subcommand("bench", "Operation counts of both pure-DP solvers on random K_n");
  bench->add_option("--sizes", sizes, "Comma-separated vertex counts")->required()->delimiter(',');
  bench->add_option("--seed", seed, "Random seed");

  std::size_t n = 0;
  double density = 0;
  std::uint64_t max_weight = kDefaultMaxWeight;
  auto* gen = app.add_subcommand("gen", "Write a random connected weighted graph");
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--density", density, "Probability of each non-tree pair");
  gen->add_option("--max-weight", max_weight, "Weights are integers in [0, W]");
  gen->add_option("--seed", seed, "Random seed");

  auto* emit = app.add_subcommand("emit-circuit", "Print the straight-line program for a graph");
  emit->add_option("file", path, "Edge-list file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  return guarded(err, [&]() -> int {
    if (*solve) return cmd_solve(path, algorithm, format, decomposition, out);
    if (*compare) return cmd_compare(path, out);
    if (*bench) return cmd_bench(sizes, seed, out, err);
    if (*gen) {
      // Parameter errors here are input errors, not algorithm preconditions.
      try {
        return cmd_gen(n, density, max_weight, seed, out);
      } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
      }
    }
    return cmd_emit_circuit(path, out);
  });
}

}  // namespace mstdp::cli
