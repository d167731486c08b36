#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#ifndef FOXCOLOR_CLI
#error "FOXCOLOR_CLI must name the command-line binary"
#endif

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(FOXCOLOR_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "foxcolor-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, Det) {
  auto r = run("det trefoil");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  r = run("--json det figure-eight");
  EXPECT_EQ(nlohmann::json::parse(r.out)["determinant"], "5");
}

TEST(Cli, Solve) {
  auto r = run("solve trefoil -p 3 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 2);
  EXPECT_EQ(run("solve trefoil -p 9").code, 4);
}

TEST(Cli, SolveFromFile) {
  auto path = scratch("fig8.pd");
  std::ofstream(path) << "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]\n";
  auto r = run("--json solve " + path.string() + " -p 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("solve trefoil").code, 1);
  EXPECT_EQ(run("det no-such-knot").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, EliminateThenVerify) {
  auto report = scratch("t211.json");
  auto r = run("eliminate 'T(2,11)' -p 11 -o " + report.string());
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("final palette"), std::string::npos);
  auto j = nlohmann::json::parse(std::ifstream(report));
  for (long f : {10, 9, 5})
    EXPECT_EQ(std::count(j["final_palette"].begin(), j["final_palette"].end(), f), 0);
  EXPECT_EQ(run("verify " + report.string()).code, 0);

  // byte-identical on a second run
  auto again = scratch("t211b.json");
  ASSERT_EQ(run("eliminate 'T(2,11)' -p 11 -o " + again.string()).code, 0);
  std::ifstream a(report), b(again);
  EXPECT_EQ(std::string(std::istreambuf_iterator<char>(a), {}), std::string(std::istreambuf_iterator<char>(b), {}));

  j["traces"][0]["steps"][0]["diagram_hash_after"] = "0000000000000000";
  auto bad = scratch("bad.json");
  std::ofstream(bad) << j.dump();
  auto v = run("--json verify " + bad.string());
  EXPECT_EQ(v.code, 2);
  EXPECT_FALSE(nlohmann::json::parse(v.out)["ok"].get<bool>());
}

TEST(Cli, EliminateWithColoring) {
  auto col = scratch("coloring.json");
  // 6_2 mod 11, arcs 0..5, taken from the solver's first non-trivial vector
  std::string solved = run("--json solve 6_2 -p 11").out;
  auto basis = nlohmann::json::parse(solved)["basis"];
  ASSERT_GE(basis.size(), 2u);
  nlohmann::json c{{"p", 11}, {"assignment", nlohmann::json::object()}};
  for (size_t i = 0; i < basis[1].size(); ++i) c["assignment"][std::to_string(i)] = basis[1][i];
  std::ofstream(col) << c.dump();
  auto r = run("--json eliminate 6_2 -p 11 --coloring " + col.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["ok"].get<bool>());
}

TEST(Cli, MathPreconditions) {
  EXPECT_EQ(run("eliminate trefoil -p 7").code, 4);
  EXPECT_EQ(run("eliminate 'T(2,7)' -p 7").code, 4);
  EXPECT_EQ(run("eliminate 'T(2,11)' -p 15").code, 4);
  EXPECT_EQ(run("eliminate 'T(2,11)' -p 21").code, 4);
  EXPECT_EQ(run("eliminate trefoil -p 11").code, 4);  // only trivial colorings exist

  auto col = scratch("trivial.json");
  nlohmann::json c{{"p", 11}, {"assignment", nlohmann::json::object()}};
  for (int i = 0; i < 11; ++i) c["assignment"][std::to_string(i)] = 4;
  std::ofstream(col) << c.dump();
  EXPECT_EQ(run("eliminate 'T(2,11)' -p 11 --coloring " + col.string()).code, 4);
}

TEST(Cli, AuditRejectsSmallPrime) {
  EXPECT_EQ(run("audit --p-min 7 --p-max 7").code, 4);
}

TEST(Cli, AuditSmallRange) {
  auto r = run("--json audit --p-min 11 --p-max 13");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["primes"].size(), 2u);
}

TEST(Cli, CorpusList) {
  auto r = run("--json corpus list");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), 7u);
  std::set<std::string> names;
  for (auto& e : j) names.insert(e["name"]);
  for (auto n : {"trefoil", "figure-eight", "T(2,7)", "T(2,11)", "T(2,13)", "6_2", "6_3"}) EXPECT_TRUE(names.count(n));
}
