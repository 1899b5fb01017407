#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcn/generators.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcn-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }

  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream out(path(name));
    out << text;
  }

  std::string slurp(const std::string& name = "stdout.txt") const {
    std::ifstream in(path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the CLI, captures stdout into `out_name`, returns the exit code.
  int run(const std::string& args, const std::string& out_name = "stdout.txt") const {
    std::string cmd = std::string(GCN_CLI_PATH) + " " + args + " > " +
                      path(out_name) + " 2> " + path("stderr.txt");
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  fs::path dir_;
};

TEST_F(CliTest, MetricsProfileOnCompleteGraph) {
  write("k4.el", gcn::serialise_graph(gcn::complete_graph(4)));
  ASSERT_EQ(run("metrics --in " + path("k4.el") + " --r 1 --out " + path("prof.json")),
            0);
  json prof = json::parse(slurp("prof.json"));
  EXPECT_EQ(prof.at("wcol"), 4);
  EXPECT_EQ(prof.at("col"), 4);
  EXPECT_EQ(prof.at("per_vertex").size(), 4u);
}

TEST_F(CliTest, MetricsAcceptsExplicitOrder) {
  write("p4.el", gcn::serialise_graph(gcn::path_graph(4)));
  write("ord.txt", "3\n2\n1\n0\n");
  ASSERT_EQ(run("metrics --in " + path("p4.el") + " --order " + path("ord.txt") +
                " --r 2 --out " + path("prof.json")),
            0);
  EXPECT_EQ(json::parse(slurp("prof.json")).at("wcol"), 3);
}

TEST_F(CliTest, OracleCycleWcol) {
  write("c5.el", gcn::serialise_graph(gcn::cycle_graph(5)));
  ASSERT_EQ(run("oracle --in " + path("c5.el") + " --r 1 --metric wcol"), 0);
  json out = json::parse(slurp());
  EXPECT_EQ(out.at("value"), 3);
  EXPECT_EQ(out.at("witness").size(), 5u);
}

TEST_F(CliTest, OracleRejectsOversizeGraph) {
  write("big.el", gcn::serialise_graph(gcn::path_graph(12)));
  EXPECT_EQ(run("oracle --in " + path("big.el") + " --r 1 --metric wcol"), 2);
}

TEST_F(CliTest, GreedyOrderFeedsBackIn) {
  write("grid.el", gcn::serialise_graph(gcn::grid_graph(3, 3)));
  ASSERT_EQ(run("greedy-order --in " + path("grid.el") + " --r 2 --out " +
                path("ord.txt")),
            0);
  EXPECT_EQ(run("metrics --in " + path("grid.el") + " --order " + path("ord.txt") +
                " --r 2 --out " + path("prof.json")),
            0);
}

TEST_F(CliTest, OrderAndVerifyRoundTrip) {
  write("grid.el", gcn::serialise_graph(gcn::grid_graph(3, 4)));
  ASSERT_EQ(run("order --in " + path("grid.el") + " --variant successor --out " +
                path("trace.json") + " --order-out " + path("ord.txt")),
            0);
  EXPECT_EQ(run("verify-order --in " + path("grid.el") + " --trace " +
                path("trace.json")),
            0);
  EXPECT_NE(slurp("ord.txt").find('\n'), std::string::npos);
}

TEST_F(CliTest, VerifyOrderRejectsTamperedTrace) {
  write("grid.el", gcn::serialise_graph(gcn::grid_graph(3, 3)));
  ASSERT_EQ(run("order --in " + path("grid.el") + " --variant plain --out " +
                path("trace.json")),
            0);
  json doc = json::parse(slurp("trace.json"));
  // Swap the recorded root of the final step to a wrong vertex.
  auto& steps = doc.at("trace").at("steps");
  auto& last = steps.back();
  last["m"] = last.at("m").get<int>() + 1;
  write("bad.json", doc.dump(2));
  EXPECT_EQ(run("verify-order --in " + path("grid.el") + " --trace " +
                path("bad.json")),
            1);
}

TEST_F(CliTest, ScatterStarFixture) {
  write("star.el", gcn::serialise_graph(gcn::star_graph(16)));
  // Identity order puts the centre first, matching the hand-checked trace.
  std::string ord;
  for (int v = 0; v <= 16; ++v) ord += std::to_string(v) + "\n";
  write("ord.txt", ord);
  ASSERT_EQ(run("scatter --in " + path("star.el") + " --r 2 --m 2 --order " +
                path("ord.txt") + " --out " + path("scat.json")),
            0);
  json out = json::parse(slurp("scat.json"));
  EXPECT_EQ(out.at("c"), 2);
  EXPECT_EQ(out.at("S"), json::array({0}));
  EXPECT_TRUE(out.at("audit").at("ok").get<bool>());
}

TEST_F(CliTest, ScatterPicksLargestFeasibleM) {
  write("tree.el", gcn::serialise_graph(gcn::random_tree(64, 4)));
  ASSERT_EQ(run("scatter --in " + path("tree.el") + " --r 1 --out " +
                path("scat.json")),
            0);
  json out = json::parse(slurp("scat.json"));
  int c = out.at("c").get<int>();
  int m = out.at("m").get<int>();
  EXPECT_GE(m, 0);
  // Largest feasible: doubling once more would overshoot 64 vertices.
  EXPECT_LE((c + 1) * (1 << m), 64);
  EXPECT_GT((c + 1) * (1 << (m + 1)), 64);
}

TEST_F(CliTest, SplitterWinsOnCycle) {
  write("c6.el", gcn::serialise_graph(gcn::cycle_graph(6)));
  ASSERT_EQ(run("splitter --in " + path("c6.el") + " --r 1 --out " + path("t.json")),
            0);
  json out = json::parse(slurp("t.json"));
  EXPECT_EQ(out.at("winner"), "splitter");
  EXPECT_EQ(out.at("order_file"), "greedy-order@2r");
}

TEST_F(CliTest, SplitterHonoursConnectorChoice) {
  write("grid.el", gcn::serialise_graph(gcn::grid_graph(3, 3)));
  for (const std::string& connector : {"max-ball", "random", "first"})
    EXPECT_EQ(run("splitter --in " + path("grid.el") + " --r 1 --connector " +
                  connector + " --seed 5 --out " + path("t.json")),
              0)
        << connector;
}

TEST_F(CliTest, AugmentWritesAllArtifacts) {
  gcn::Graph g = gcn::disjoint_union(gcn::path_graph(2), gcn::path_graph(2));
  write("g.el", gcn::serialise_graph(g));
  ASSERT_EQ(run("augment --in " + path("g.el") + " --r 1 --out " + path("aug")), 0);
  for (const std::string& name :
       {"h.el", "added.el", "order.txt", "trace.json", "spanning.json",
        "charges.json", "claims.json"})
    EXPECT_TRUE(fs::exists(dir_ / "aug" / name)) << name;

  json spanning = json::parse(slurp("aug/spanning.json"));
  EXPECT_EQ(spanning.at("parent").size(), 4u);
  json claims = json::parse(slurp("aug/claims.json"));
  EXPECT_TRUE(claims.at("ok").get<bool>());
  // The two components were bridged by one added edge.
  gcn::ParsedGraph added = gcn::parse_graph(slurp("aug/added.el"));
  EXPECT_EQ(added.graph.edge_count(), 1);
  gcn::ParsedGraph h = gcn::parse_graph(slurp("aug/h.el"));
  EXPECT_EQ(h.graph.edge_count(), 3);
}

TEST_F(CliTest, VerifyClaimsStandalone) {
  write("p4.el", gcn::serialise_graph(gcn::path_graph(4)));
  ASSERT_EQ(run("verify-claims --in " + path("p4.el") + " --r 2"), 0);
  EXPECT_TRUE(json::parse(slurp()).at("ok").get<bool>());
}

TEST_F(CliTest, GenGridToStdout) {
  ASSERT_EQ(run("gen --family grid --rows 3 --cols 3"), 0);
  std::string out = slurp();
  EXPECT_NE(out.find("p 9 12"), std::string::npos);
  EXPECT_EQ(out.rfind("# family=grid", 0), 0u) << "seed header comes first";
}

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(run("gen --family tree --n 10 --seed 3", "a.txt"), 0);
  ASSERT_EQ(run("gen --family tree --n 10 --seed 3", "b.txt"), 0);
  EXPECT_EQ(slurp("a.txt"), slurp("b.txt"));
  ASSERT_EQ(run("gen --family tree --n 10 --seed 4", "c.txt"), 0);
  EXPECT_NE(slurp("a.txt"), slurp("c.txt"));
}

TEST_F(CliTest, GenCorpusWritesParseableFiles) {
  ASSERT_EQ(run("gen-corpus --out " + path("corpus") + " --seed 2 --sizes 12 "
                "--families path tree"),
            0);
  int count = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "corpus")) {
    std::ifstream in(entry.path());
    std::ostringstream ss;
    ss << in.rdbuf();
    gcn::ParsedGraph parsed = gcn::parse_graph(ss.str());
    EXPECT_GT(parsed.graph.vertex_count(), 0);
    EXPECT_NE(ss.str().find("seed=2"), std::string::npos);
    ++count;
  }
  EXPECT_EQ(count, 2);
}

TEST_F(CliTest, MissingInputFileFails) {
  EXPECT_EQ(run("metrics --in " + path("nope.el") + " --r 1"), 2);
}

TEST_F(CliTest, BadMetricNameRejected) {
  write("k4.el", gcn::serialise_graph(gcn::complete_graph(4)));
  EXPECT_NE(run("oracle --in " + path("k4.el") + " --r 1 --metric bogus"), 0);
}

}  // namespace
