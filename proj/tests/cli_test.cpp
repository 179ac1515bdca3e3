#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mstdp/circuit.hpp"
#include "mstdp/graph_io.hpp"
#include "mstdp/random.hpp"

namespace mstdp {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_tool(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mstdp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::filesystem::path dir_;
};

const char* kTriangle = "3 3\n1 2 1\n1 3 3\n2 3 2\n";

TEST_F(CliTest, SolveJsonReport) {
  const auto r = run_tool({"solve", write("tri.el", kTriangle), "--algorithm", "puredp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["algorithm"], "puredp");
  EXPECT_EQ(report["mst_weight"], 3);
  EXPECT_EQ(report["ops"]["min"], 15);
  EXPECT_EQ(report["ops"]["max"], 17);
  EXPECT_EQ(report["ops"]["add"], 2);
  EXPECT_EQ(report["ops"]["total"], 34);
  EXPECT_TRUE(report["decomposition"].is_null());
  EXPECT_TRUE(report["time_ms"].is_number());
  std::vector<std::string> keys;
  for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"algorithm", "decomposition", "mst_weight", "ops", "time_ms"}));
}

TEST_F(CliTest, SolveWithDecompositionAndOracles) {
  const auto path = write("tri.el", kTriangle);
  auto r = run_tool({"solve", path, "--decomposition"});
  ASSERT_EQ(r.code, 0);
  auto report = nlohmann::json::parse(r.out);
  ASSERT_EQ(report["decomposition"].size(), 2U);
  EXPECT_EQ(report["decomposition"][0]["u"], 1);
  EXPECT_EQ(report["decomposition"][0]["v"], 2);
  EXPECT_EQ(report["decomposition"][1]["distance"], 2);

  for (std::string algorithm : {"puredp-naive", "kruskal", "maggs-plotkin", "bruteforce"}) {
    r = run_tool({"solve", path, "--algorithm", algorithm});
    ASSERT_EQ(r.code, 0) << algorithm << ": " << r.err;
    report = nlohmann::json::parse(r.out);
    EXPECT_EQ(report["mst_weight"], 3) << algorithm;
    EXPECT_EQ(report["ops"].is_null(), algorithm != "puredp-naive") << algorithm;
  }
}

TEST_F(CliTest, SolveTextFormat) {
  const auto r = run_tool({"solve", write("tri.el", kTriangle), "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mst_weight    3\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ops.total     34\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_tool({"solve", write("dup.el", "3 3\n1 2 1\n1 3 1\n2 3 2\n"), "--algorithm",
                      "maggs-plotkin"}).code, 2);
  std::ostringstream k9;
  k9 << "9 8\n";
  for (int v = 2; v <= 9; ++v) k9 << "1 " << v << " " << v << "\n";
  EXPECT_EQ(run_tool({"solve", write("k9.el", k9.str()), "--algorithm", "bruteforce"}).code, 2);

  const auto bad = run_tool({"solve", write("bad.el", "3 2\n1 2 1\n1 3 -4\n")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
  EXPECT_EQ(run_tool({"solve", (dir_ / "missing.el").string()}).code, 1);
  EXPECT_EQ(run_tool({"solve", write("tri.el", kTriangle), "--algorithm", "dijkstra"}).code, 1);
  EXPECT_EQ(run_tool({}).code, 1);
  EXPECT_EQ(run_tool({"--help"}).code, 0);
}

TEST_F(CliTest, CompareAgreesAndSkipsInapplicableOracles) {
  auto r = run_tool({"compare", write("tri.el", kTriangle)});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("AGREE"), std::string::npos);
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);

  r = run_tool({"compare", write("tree.el", "4 3\n1 2 5\n2 3 5\n2 4 1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("maggs-plotkin   skipped"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("kruskal         11\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("AGREE"), std::string::npos);

  EXPECT_EQ(run_tool({"compare", write("broken.el", "3 3\n1 2 1\n")}).code, 1);
}

TEST_F(CliTest, BenchIsDeterministicCsv) {
  const auto a = run_tool({"bench", "--sizes", "8,16", "--seed", "5"});
  const auto b = run_tool({"bench", "--sizes", "8,16", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,mst_weight,ops_puredp,ops_naive,puredp_per_n3,naive_per_n4");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("8,", 0), 0U);
  EXPECT_NE(line.find(",1154,3170,2.253906,0.773926"), std::string::npos) << line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("16,", 0), 0U);
  EXPECT_FALSE(std::getline(lines, line));

  EXPECT_EQ(run_tool({"bench", "--sizes", "1"}).code, 2);
}

TEST_F(CliTest, BenchOnSingleEdgeReportsThatWeight) {
  const auto r = run_tool({"bench", "--sizes", "2", "--seed", "3"});
  ASSERT_EQ(r.code, 0);
  // K_2 has one edge; regenerate it with the same seed to find its weight.
  Rng rng(3);
  const Graph g = random_connected_graph(2, 1.0, rng);
  const Weighting x = random_weights(g.edge_count(), 1'000'000, rng);
  EXPECT_NE(r.out.find("\n2," + format_weight(x[0]) + ",5,5,0.625000,0.312500\n"), std::string::npos)
      << r.out;
}

TEST_F(CliTest, GenProducesParsableDeterministicGraphs) {
  const auto tree = run_tool({"gen", "--n", "5", "--density", "0", "--seed", "4"});
  ASSERT_EQ(tree.code, 0);
  EXPECT_EQ(parse_graph(tree.out).graph.edge_count(), 4U);

  const auto k5 = run_tool({"gen", "--n", "5", "--density", "1", "--seed", "4"});
  EXPECT_EQ(parse_graph(k5.out).graph.edge_count(), 10U);

  const auto again = run_tool({"gen", "--n", "5", "--density", "1", "--seed", "4"});
  EXPECT_EQ(k5.out, again.out);

  const auto bounded = parse_graph(run_tool({"gen", "--n", "30", "--density", "0.5", "--max-weight",
                                             "3", "--seed", "9"}).out);
  for (Weight w : bounded.weights.values()) EXPECT_LE(w, 3);

  EXPECT_EQ(run_tool({"gen", "--n", "0"}).code, 1);
  EXPECT_EQ(run_tool({"gen", "--n", "4", "--density", "1.5"}).code, 1);
  EXPECT_EQ(run_tool({"gen"}).code, 1);
}

TEST_F(CliTest, EmitCircuit) {
  const auto path = write("tri.el", kTriangle);
  const auto first = run_tool({"emit-circuit", path});
  const auto second = run_tool({"emit-circuit", path});
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, to_text(compile_mst_circuit(parse_graph(kTriangle).graph)));
  const Circuit c = compile_mst_circuit(parse_graph(kTriangle).graph);
  EXPECT_EQ(evaluate(c, parse_graph(kTriangle).weights), 3);

  const auto edge = run_tool({"emit-circuit", write("edge.el", "2 1\n1 2 4\n")});
  std::size_t inputs = 0;
  for (std::size_t pos = 0; (pos = edge.out.find("= input", pos)) != std::string::npos; ++pos) ++inputs;
  EXPECT_EQ(inputs, 1U);

  EXPECT_EQ(run_tool({"emit-circuit", write("bad.el", "2 1\n1 1 4\n")}).code, 1);
}

TEST_F(CliTest, InstalledBinaryRuns) {
  const std::string cmd = std::string(MSTDP_TOOL_PATH) + " solve " + write("tri.el", kTriangle) +
                          " --format text > " + (dir_ / "out.txt").string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(dir_ / "out.txt");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("mst_weight    3"), std::string::npos);
}

}  // namespace
}  // namespace mstdp
