#include <gtest/gtest.h>

#include <chrono>

#include "foxcolor/corpus.hpp"
#include "foxcolor/elimination.hpp"
#include "foxcolor/oracle.hpp"

using namespace foxcolor;

namespace {

struct Run {
  std::string name;
  int p;
};

const std::vector<Run> kRuns = {{"T(2,11)", 11}, {"T(2,13)", 13}, {"6_2", 11}, {"6_3", 13}};

Coloring start(const Diagram& d, int p) { return *first_nontrivial(solve(d, p)); }

}  // namespace

class EndToEnd : public ::testing::TestWithParam<Run> {};

TEST_P(EndToEnd, RemovesThreeColoursAndVerifies) {
  auto [name, p] = GetParam();
  Diagram d = load_diagram(name);
  Coloring c = start(d, p);
  auto t0 = std::chrono::steady_clock::now();
  EliminationReport rep = eliminate_all(d, c);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 30.0);

  long k = (p - 1) / 2;
  auto pal = rep.final_palette();
  for (long f : {2 * k, 2 * k - 1, k}) EXPECT_FALSE(pal.count(f)) << f;
  EXPECT_TRUE(is_valid(rep.output_d, rep.output_c));
  EXPECT_FALSE(is_trivial(rep.output_c));
  EXPECT_EQ(component_count(rep.output_d), component_count(d));
  EXPECT_TRUE(is_connected(rep.output_d));
  EXPECT_EQ(determinant(rep.output_d), determinant(d));

  auto v = oracle::verify_report(d, c, rep.to_json());
  for (auto& f : v.failures) ADD_FAILURE() << "step " << f.step << ": " << f.reason;
}

TEST_P(EndToEnd, MeasureStrictlyDecreases) {
  auto [name, p] = GetParam();
  Diagram d = load_diagram(name);
  EliminationReport rep = eliminate_all(d, start(d, p));
  ASSERT_EQ(rep.traces.size(), 3u);
  for (auto& t : rep.traces) {
    Measure prev = t.initial;
    for (auto& s : t.steps) {
      EXPECT_TRUE(s.measure_after < prev) << s.rule;
      EXPECT_FALSE(s.moves.empty());
      prev = s.measure_after;
    }
    EXPECT_TRUE(prev.zero());
  }
}

TEST_P(EndToEnd, Deterministic) {
  auto [name, p] = GetParam();
  Diagram d = load_diagram(name);
  Coloring c = start(d, p);
  EXPECT_EQ(eliminate_all(d, c).to_json().dump(), eliminate_all(d, c).to_json().dump());
}

TEST_P(EndToEnd, Idempotent) {
  auto [name, p] = GetParam();
  Diagram d = load_diagram(name);
  Coloring c = start(d, p);
  Modulus m(p);
  EdgeColoring ec = to_edge_coloring(d, c);
  std::vector<Color> removed;
  for (int i = 0; i < 3; ++i) {
    Color t = m.forbidden(i);
    ColorResult r = eliminate_color(d, ec, t, removed);
    ColorResult again = eliminate_color(r.d, r.c, t, removed);
    EXPECT_TRUE(again.trace.steps.empty());
    EXPECT_EQ(diagram_hash(again.d), diagram_hash(r.d));
    d = r.d;
    ec = r.c;
    removed.push_back(t);
  }
}

TEST_P(EndToEnd, EquivariantUnderAffineRecolouring) {
  auto [name, p] = GetParam();
  Diagram d = load_diagram(name);
  Coloring c = start(d, p);
  for (long alpha : {1L, 2L, static_cast<long>(p - 1)})
    for (long beta = 0; beta < p; ++beta) {
      Coloring img = c;
      for (auto& x : img.assignment) x = mod(alpha * x + beta, p);
      EXPECT_NO_THROW({
        auto rep = eliminate_all(d, img);
        EXPECT_TRUE(oracle::verify_report(rep.to_json()).ok());
      }) << name << " alpha=" << alpha << " beta=" << beta;
    }
}

INSTANTIATE_TEST_SUITE_P(Corpus, EndToEnd, ::testing::ValuesIn(kRuns), [](const auto& info) {
  std::string s = info.param.name + "_p" + std::to_string(info.param.p);
  for (char& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  return s;
});

// Success does not depend on which affine image of the coloring we start from.
TEST(Preconditions, SmallModulus) {
  Diagram d = load_diagram("T(2,7)");
  Coloring c = start(d, 7);
  try {
    eliminate_all(d, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModulusTooSmall);
  }
}

TEST(Preconditions, TrivialColoring) {
  Diagram d = load_diagram("T(2,11)");
  Coloring c{Modulus(11), std::vector<Color>(derive_arcs(d).size(), 3)};
  try {
    eliminate_all(d, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TrivialColoring);
  }
}

TEST(Preconditions, InvalidColoring) {
  Diagram d = load_diagram("T(2,11)");
  Coloring c = start(d, 11);
  c.assignment[0] = (c.assignment[0] + 1) % 11;
  EXPECT_THROW(eliminate_all(d, c), Error);
}

TEST(Preconditions, WrongTarget) {
  Diagram d = load_diagram("T(2,11)");
  EdgeColoring ec = to_edge_coloring(d, start(d, 11));
  EXPECT_THROW(eliminate_color(d, ec, 3, {}), Error);
}

TEST(Measure, CountsOnCorpus) {
  Diagram d = load_diagram("T(2,11)");
  EdgeColoring ec = to_edge_coloring(d, start(d, 11));
  // every crossing of the 2-braid has three distinct colours
  Measure m = measure(d, ec, 10);
  EXPECT_EQ(m.mono, 0);
  EXPECT_GT(m.over + m.under, 0);
  EXPECT_EQ(phase_of(m), m.over ? Phase::Over : Phase::Under);
}

TEST(Options, StepBound) {
  Diagram d = load_diagram("T(2,11)");
  EliminationOptions opt;
  opt.max_steps = 1;
  try {
    eliminate_all(d, start(d, 11), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchExhausted);
  }
}
