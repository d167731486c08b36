#include <gtest/gtest.h>

#include <random>

#include "foxcolor/corpus.hpp"
#include "foxcolor/elimination.hpp"
#include "foxcolor/oracle.hpp"
#include "fuzz.hpp"
#include "oracles.hpp"

using namespace foxcolor;

namespace {

json report_for(const std::string& name, int p) {
  Diagram d = load_diagram(name);
  return eliminate_all(d, *first_nontrivial(solve(d, p))).to_json();
}

bool has_reason(const oracle::VerificationVerdict& v, const std::string& needle) {
  for (auto& f : v.failures)
    if (f.reason.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(BruteForce, Counts) {
  EXPECT_EQ(oracle::brute_force_colorings(load_diagram("trefoil"), 3).size(), 9u);
  EXPECT_EQ(oracle::brute_force_colorings(load_diagram("trefoil"), 5).size(), 5u);
  EXPECT_EQ(oracle::brute_force_colorings(load_diagram("figure-eight"), 5).size(), 25u);
  for (auto& e : load_corpus()) {
    Diagram d = parse_pd(e.pd);
    if (derive_arcs(d).size() > 6) continue;
    for (int p : {3, 5, 7}) {
      auto all = oracle::brute_force_colorings(d, p);
      long trivial = std::count_if(all.begin(), all.end(), [](auto& c) { return is_trivial(c); });
      EXPECT_EQ(trivial, p) << e.name;
      EXPECT_EQ(static_cast<long>(all.size()), oracles::brute_count(oracles::present(e.pd), p)) << e.name;
    }
  }
}

TEST(BruteForce, Budget) {
  try {
    oracle::brute_force_colorings(load_diagram("T(2,11)"), 11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Witness, FixedDiagram) {
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{{"T(2,11)", 11}, {"T(2,13)", 13}, {"6_2", 11}, {"6_3", 13}}) {
    Diagram d = load_diagram(name);
    Modulus m(p);
    std::set<Color> bad{m.forbidden(0), m.forbidden(1), m.forbidden(2)};
    bool exists = false;
    for (auto& c : enumerate(solve(d, p))) {
      bool clean = true;
      for (Color x : c.assignment) clean = clean && !bad.count(x);
      exists = exists || (clean && !is_trivial(c));
    }
    auto w = oracle::fixed_diagram_witness(d, p);
    EXPECT_EQ(w.has_value(), exists) << name;
    if (w) {
      EXPECT_TRUE(is_valid(d, *w));
      EXPECT_FALSE(is_trivial(*w));
      for (Color x : w->assignment) EXPECT_FALSE(bad.count(x));
    }
  }
  // only trivial colorings mod 11 on the trefoil
  EXPECT_FALSE(oracle::fixed_diagram_witness(load_diagram("trefoil"), 11));
}

TEST(Verify, UntamperedReportIsOk) {
  json rep = report_for("6_2", 11);
  auto v = oracle::verify_report(rep);
  EXPECT_TRUE(v.ok());
  EXPECT_TRUE(v.to_json()["ok"].get<bool>());
}

TEST(Verify, EditedStepColour) {
  json rep = report_for("T(2,11)", 11);
  auto& col = rep["traces"][0]["steps"][0]["coloring_after"]["assignment"]["0"];
  col = (col.get<long>() + 1) % 11;
  auto v = oracle::verify_report(rep);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(has_reason(v, "Fox relation violated"));
  EXPECT_EQ(v.failures.front().step, 0);
}

TEST(Verify, DeletedMoves) {
  json rep = report_for("T(2,11)", 11);
  rep["traces"][1]["steps"][0]["moves"] = json::array();
  auto v = oracle::verify_report(rep);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(has_reason(v, "hash chain broken"));
}

TEST(Verify, ForbiddenColourInOutput) {
  json rep = report_for("6_3", 13);
  rep["final_palette"].push_back(12);
  EXPECT_TRUE(has_reason(oracle::verify_report(rep), "final palette misreported"));
}

TEST(Verify, WrongStartingDiagram) {
  json rep = report_for("6_2", 11);
  Diagram other = load_diagram("T(2,11)");
  auto v = oracle::verify_report(other, *first_nontrivial(solve(other, 11)), rep);
  EXPECT_TRUE(has_reason(v, "input diagram differs"));
}

TEST(Verify, Garbage) {
  EXPECT_FALSE(oracle::verify_report(json{{"schema", "trace-v1"}, {"p", 11}}).ok());
  EXPECT_FALSE(oracle::verify_report(json::array()).ok());
}

TEST(Verify, FuzzedMutantsAllDetected) {
  std::vector<json> reports{report_for("6_2", 11), report_for("6_3", 13)};
  std::mt19937 rng(5);
  int n = 0;
  for (int kind = 0; kind < 4; ++kind)
    for (int i = 0; i < 15; ++i) {
      auto m = fuzz::mutate(reports[i % 2], kind, rng);
      EXPECT_FALSE(oracle::verify_report(m.report).ok()) << m.what;
      ++n;
    }
  EXPECT_EQ(n, 60);
}
