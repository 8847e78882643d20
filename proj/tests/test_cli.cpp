#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "test_support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LPEMBED_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(LPEMBED_TEST_DATA) + "/" + name; }

std::string temp(const std::string& name) { return ::testing::TempDir() + "lpembed_cli_" + name; }

bool has_line(const std::string& out, const std::string& line) {
  std::istringstream in(out);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

TEST(CliVerify, CatalogFramePasses) {
  const auto r = run("verify " + data("rational_r2p4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "verdict: pass")) << r.out;
  EXPECT_TRUE(has_line(r.out, "n: 4"));
  EXPECT_TRUE(has_line(r.out, "dim: 5"));
  EXPECT_TRUE(has_line(r.out, "bound: 4"));
  EXPECT_TRUE(has_line(r.out, "residual_terms: 0"));
}

TEST(CliVerify, PerturbedWeightFails) {
  const auto r = run("verify " + data("perturbed_r2p4.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has_line(r.out, "verdict: fail"));
  EXPECT_TRUE(has_line(r.out, "residual: [(4,0): -1/6]")) << r.out;
}

TEST(CliVerify, TruncatedFileIsMalformed) {
  EXPECT_EQ(run("verify " + data("truncated_r2p4.json")).code, 2);
  EXPECT_EQ(run("verify /nonexistent.json").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("--mode fuzzy verify " + data("rational_r2p4.json")).code, 2);
}

TEST(CliVerify, FloatMode) {
  const auto r = run("--mode float --tolerance 1e-12 verify " + data("rational_r2p4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "mode: float"));
  EXPECT_TRUE(has_line(r.out, "tolerance: 1e-12")) << r.out;
}

TEST(CliVerify, JsonMirrorsText) {
  const auto text = run("verify " + data("rational_r2p4.json"));
  const auto js = run("--output json verify " + data("rational_r2p4.json"));
  ASSERT_EQ(js.code, 0);
  const auto j = nlohmann::ordered_json::parse(js.out);
  std::istringstream in(text.out);
  auto it = j.begin();
  for (std::string line; std::getline(in, line); ++it) {
    ASSERT_NE(it, j.end());
    const std::string value = it->is_string() ? it->get<std::string>() : it->dump();
    EXPECT_EQ(line, it.key() + ": " + value);
  }
  EXPECT_EQ(it, j.end());
}

TEST(CliDim, Rows) {
  auto r = run("dim R 2 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "dim: 5"));
  EXPECT_TRUE(has_line(r.out, "bound: 4"));
  r = run("dim C 2 4");
  EXPECT_TRUE(has_line(r.out, "dim: 9"));
  EXPECT_TRUE(has_line(r.out, "bound: 8"));
  r = run("dim H 1 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "dim: 1"));
  EXPECT_TRUE(has_line(r.out, "bound: refused (m=1: the minimal n is 1)")) << r.out;
  EXPECT_EQ(run("dim Q 2 4").code, 2);
  EXPECT_EQ(run("dim R 2 3").code, 2);
  EXPECT_EQ(run("dim R 0 4").code, 2);
}

TEST(CliReduce, DuplicateHeavyFile) {
  const std::string out = temp("dedup.json");
  const auto r = run("--out " + out + " reduce " + data("duplicate_heavy_r2p4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "n_in: 12"));
  EXPECT_TRUE(has_line(r.out, "n_out: 4")) << r.out;
  EXPECT_TRUE(has_line(r.out, "result: reduced"));
  EXPECT_TRUE(has_line(r.out, "verdict: pass"));
  const auto back = lpembed::read_frame_file(out);
  EXPECT_TRUE(lpembed::verify(std::get<lpembed::WeightedFrame>(back)).pass);
  EXPECT_EQ(run("verify " + out).code, 0);
}

TEST(CliReduce, IndependentFrameUnchanged) {
  const std::string out = temp("same.json");
  const auto r = run("--out " + out + " reduce " + data("rational_r2p4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "result: no dependence"));
  EXPECT_EQ(lpembed::read_frame_file(out), lpembed::read_frame_file(data("rational_r2p4.json")));
}

TEST(CliReduce, UnverifiedFrameRefused) {
  const auto r = run("reduce " + data("perturbed_r2p4.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has_line(r.out, "result: refused: input frame does not verify"));
}

TEST(CliScaleReduce, ReducibleFrame) {
  const std::string out = temp("scaled.json");
  const auto r = run("--out " + out + " scale-reduce " + data("reducible_r2p4.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has_line(r.out, "n_in: 5"));
  EXPECT_TRUE(has_line(r.out, "n_out: 4")) << r.out;
  const auto back = lpembed::read_frame_file(out);
  ASSERT_TRUE(std::holds_alternative<lpembed::FloatFrame>(back));
  EXPECT_LE(lpembed::verify(std::get<lpembed::FloatFrame>(back), 1e-8).max_residual, 1e-8);
}

TEST(CliScaleReduce, OrthonormalIsNone) {
  const auto r = run("scale-reduce " + data("orthonormal_c2p2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "result: none"));
}

TEST(CliScaleReduce, BudgetExhausted) {
  const auto r = run("--grid 2 --budget 3 scale-reduce " + data("reducible_r2p4.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(has_line(r.out, "result: budget exhausted"));
}

TEST(CliCatalog, RoundTripsThroughVerify) {
  for (const std::string args : {"R 2 4 real2-rational-p4", "R 2 4 real2-equiangular", "H 3 2 orthonormal-p2"}) {
    const std::string out = temp("catalog.json");
    const auto w = run("--out " + out + " catalog " + args);
    ASSERT_EQ(w.code, 0) << args;
    const auto v = run("verify " + out);
    EXPECT_EQ(v.code, 0) << args << "\n" << v.out;
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(lpembed::serialize_frame(lpembed::parse_frame(text.str())), text.str());
  }
  EXPECT_EQ(run("catalog R 2 4 simplex").code, 2);
  EXPECT_EQ(run("catalog C 2 4 real2-rational-p4").code, 1);
}

TEST(Cli, RerunsAreByteIdentical) {
  for (const std::string args : {"scale-reduce " + data("reducible_r2p4.json"),
                                 "--output json reduce " + data("duplicate_heavy_r2p4.json"),
                                 "--seed 7 verify " + data("perturbed_r2p4.json")}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
