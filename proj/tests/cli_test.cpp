#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "satorder/generators.hpp"
#include "satorder/io.hpp"
#include "satorder/representation.hpp"

using namespace satorder;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(SATORDER_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("satorder_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    write("tpt.poset", R"({"n": 4, "strict": [[0, 1], [2, 3]]})");
    write("chain3.poset", R"({"n": 3, "strict": [[0, 1], [1, 2]]})");
    write("cycle.poset", R"({"n": 2, "strict": [[0, 1], [1, 0]]})");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) { std::ofstream(path(name)) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, Check) {
  auto r = run("check " + path("tpt.poset"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "not saturated\n");
  r = run("check " + path("chain3.poset"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "saturated\n");
  for (const char* method : {"oracle", "exhaustive", "fast"}) {
    r = run(std::string("check --method ") + method + " " + path("tpt.poset"));
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.out, "not saturated\n");
  }
  EXPECT_EQ(run("check --method bogus " + path("tpt.poset")).exit_code, 2);
  r = run("check " + path("cycle.poset"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("CycleDetected"), std::string::npos);
}

TEST_F(CliTest, WitnessNotSaturated) {
  const auto r = run("witness " + path("tpt.poset"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("B0: {0, 1} max 1"), std::string::npos);
  EXPECT_NE(r.out.find("B1: {2, 3} max 3"), std::string::npos);
  EXPECT_NE(r.out.find("q* = 4"), std::string::npos);
  std::istringstream in(r.out);
  const auto rep = io::read_representation(in);
  EXPECT_EQ(rep, (SetRepresentation{5, {{0}, {0, 4}, {2}, {2, 4}}}));
  EXPECT_TRUE(is_parsimonious(gen::two_plus_two(), rep));
  EXPECT_FALSE(alpha_of(gen::two_plus_two(), rep).injective());
}

TEST_F(CliTest, WitnessSaturated) {
  const auto r = run("witness " + path("chain3.poset"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("saturated; no witness\n", 0), 0u);
  EXPECT_NE(r.out.find("2: (2, 2)"), std::string::npos);

  const auto missing = run("witness " + path("missing.poset"));
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_NE(missing.out.find("ParseError"), std::string::npos);
}

TEST_F(CliTest, GenerateFigure1) {
  const auto r = run("generate figure1 --k 2 -o " + path("f.poset"));
  EXPECT_EQ(r.exit_code, 0);
  const auto file = io::load_poset(path("f.poset"));
  EXPECT_EQ(file.poset.size(), 8u);
  EXPECT_EQ(file.poset, gen::figure1_truncation(2));
  EXPECT_EQ(file.names, gen::figure1_names(2));
  EXPECT_EQ(run("check --method exhaustive " + path("f.poset")).exit_code, 0);
}

TEST_F(CliTest, GenerateOtherKinds) {
  EXPECT_EQ(run("generate chain --n 4").out, "{\"n\":4,\"strict\":[[0,1],[1,2],[2,3]]}\n");
  EXPECT_EQ(run("generate topped-two-two -o " + path("t.poset")).exit_code, 0);
  EXPECT_EQ(io::load_poset(path("t.poset")).poset, gen::topped_two_two());
  const auto a = run("generate random --n 6 --density 0.4 --seed 3");
  const auto b = run("generate random --n 6 --density 0.4 --seed 3");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::parse_poset(a.out).poset, gen::random(6, 0.4, 3));
  EXPECT_EQ(run("generate hexagon").exit_code, 2);
}

TEST_F(CliTest, Reps) {
  const auto r = run("reps " + path("tpt.poset"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out,
            "2 canonical parsimonious alpha maps\n"
            "0: 0 1 2 1  non-injective\n"
            "1: 0 1 2 3\n");
  EXPECT_EQ(run("reps " + path("chain3.poset")).exit_code, 0);
}

TEST_F(CliTest, Verify) {
  const auto r = run("verify --n-max 5 --json " + path("report.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("mismatches 0\n"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(path("report.json")));
  const auto again = run("verify --n-max 5");
  EXPECT_EQ(again.out, r.out);
  EXPECT_EQ(run("verify").exit_code, 2);
}

TEST_F(CliTest, ExportDot) {
  const auto r = run("export-dot " + path("chain3.poset"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "digraph poset {\n  rankdir=BT;\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n"
            "  n2 [label=\"2\"];\n  n0 -> n1;\n  n1 -> n2;\n}\n");
  EXPECT_EQ(run("export-dot " + path("missing.poset")).exit_code, 2);
}

TEST_F(CliTest, Usage) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}
