#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

std::string env(const char* name) {
  const char* v = std::getenv(name);
  return v ? v : "";
}

CliRun sgeo(const std::string& args) {
  const std::string cmd = env("SGEO_CLI") + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& file) { return env("SGEO_DATA") + "/" + file; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    if (env("SGEO_CLI").empty() || env("SGEO_DATA").empty()) GTEST_SKIP() << "SGEO_CLI / SGEO_DATA not set";
  }
};

}  // namespace

TEST_F(Cli, Help) { EXPECT_EQ(sgeo("--help").code, 0); }

TEST_F(Cli, Steiner) {
  const CliRun r = sgeo("steiner --graph " + data("k5_hierarchy.json") + " --terminals 1,2,3,4");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["distance"], "8");
  EXPECT_EQ(j["tree_edges"], json::parse("[0,1,2,3]"));
}

TEST_F(Cli, GeodesicCheck) {
  const std::string base = "geodesic-check --graph " + data("k5_hierarchy.json") + " --subgraph-edges 4,5,6,7,8,9";
  EXPECT_EQ(sgeo(base + " --k 3").code, 0);
  const CliRun r = sgeo(base + " --k 4");
  ASSERT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["witness"], json::parse(R"(["1","2","3","4"])"));
  EXPECT_EQ(j["gap"], json::parse(R"(["8","9"])"));
  EXPECT_EQ(j["shortcut_tree"]["valid"], true);
  EXPECT_EQ(sgeo(base + " --full").code, 1);
}

TEST_F(Cli, SctVerify) {
  const CliRun ok = sgeo("sct-verify --instance " + data("sct_triangle_star.json"));
  ASSERT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)["margin"], "1");
  const CliRun bad = sgeo("sct-verify --instance " + data("sct_triangle_long.json"));
  ASSERT_EQ(bad.code, 1);
  EXPECT_EQ(json::parse(bad.out)["sct3"], false);
}

TEST_F(Cli, SctSearch) {
  const CliRun found = sgeo("sct-search --graph " + data("triangle.json") + " --max-leaves 3");
  ASSERT_EQ(found.code, 1);
  EXPECT_GE(json::parse(found.out)["found"].get<int>(), 1);
  const CliRun none = sgeo("sct-search --graph " + data("path.json") +
                        " --min-leaves 3 --max-leaves 4 --free-lengths --samples 3 --seed 2");
  ASSERT_EQ(none.code, 0);
  EXPECT_EQ(json::parse(none.out)["found"], 0);
}

TEST_F(Cli, CycleSpace) {
  const CliRun r = sgeo("cycle-space --graph " + data("k4.json"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["cycles"].size(), 7u);
  EXPECT_EQ(j["fully_geodesic"].size(), 4u);
  EXPECT_EQ(j["fully_geodesic_rank"], 3);
  EXPECT_EQ(j["verdict"], "spans");
}

TEST_F(Cli, PaperVerifyFamilies) {
  EXPECT_EQ(sgeo("paper-verify --family hierarchy --k 3").code, 0);
  EXPECT_EQ(sgeo("paper-verify --family k22k --k 2").code, 0);
  const CliRun r = sgeo("paper-verify --suite hierarchy --json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["seed"], 1);
}

TEST_F(Cli, PaperVerifyIsReproducible) {
  const std::string args = "paper-verify --suite cyclespace --seed 4 --json --graph " + data("k4.json");
  const CliRun a = sgeo(args);
  const CliRun b = sgeo(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, sgeo("paper-verify --suite cyclespace --seed 5 --json --graph " + data("k4.json")).out);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(sgeo("paper-verify --suite all --graph " + data("empty.json")).code, 2);
  EXPECT_EQ(sgeo("paper-verify --suite all --graph " + data("empty_graph.json")).code, 2);
  EXPECT_EQ(sgeo("paper-verify --suite nonsense").code, 2);
  EXPECT_EQ(sgeo("steiner --graph " + data("loop.json") + " --terminals a").code, 2);
  EXPECT_EQ(sgeo("steiner --graph " + data("zero_length.json") + " --terminals a,b").code, 2);
  EXPECT_EQ(sgeo("steiner --graph " + data("not_json.json") + " --terminals a").code, 2);
  EXPECT_EQ(sgeo("steiner --graph " + data("missing.json") + " --terminals a").code, 2);
  EXPECT_EQ(sgeo("steiner --graph " + data("k4.json") + " --terminals 0,zz").code, 2);
  EXPECT_EQ(sgeo("geodesic-check --graph " + data("k4.json") + " --subgraph-edges 0,99 --k 2").code, 2);
  EXPECT_EQ(sgeo("geodesic-check --graph " + data("k4.json") + " --subgraph-edges 0,1 --k 1").code, 2);
  EXPECT_EQ(sgeo("sct-search --graph " + data("k4.json") + " --max-leaves 9").code, 2);
  EXPECT_EQ(sgeo("frobnicate").code, 2);
  EXPECT_EQ(sgeo("").code, 2);
}
