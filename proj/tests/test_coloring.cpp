#include <gtest/gtest.h>

#include <random>

#include "foxcolor/corpus.hpp"
#include "foxcolor/oracle.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace foxcolor;

namespace {

long span_size(const ColoringSpace& s) {
  long n = 1;
  for (int i = 0; i < s.dimension; ++i) n *= s.modulus.p;
  return n;
}

}  // namespace

TEST(CheckCrossing, Examples) {
  Modulus m(11);
  EXPECT_TRUE(check_crossing(m, 3, 3, 3));
  EXPECT_TRUE(check_crossing(m, 7, 3, 0));
  EXPECT_FALSE(check_crossing(m, 0, 1, 2));
}

TEST(Solve, CountsMatchBruteForce) {
  struct Case {
    std::string name;
    int p;
  };
  for (auto [name, p] : std::vector<Case>{{"trefoil", 3}, {"trefoil", 5}, {"figure-eight", 5}}) {
    Diagram d = load_diagram(name);
    long expected = oracles::brute_count(oracles::present(find_corpus(name)->pd), p);
    EXPECT_EQ(span_size(solve(d, p)), expected) << name << " p=" << p;
  }
  EXPECT_EQ(solve(load_diagram("trefoil"), 3).dimension, 2);
  EXPECT_EQ(solve(load_diagram("trefoil"), 5).dimension, 1);
  EXPECT_EQ(solve(load_diagram("figure-eight"), 5).dimension, 2);
}

TEST(Solve, EnumerationEqualsOracleOnSmallDiagrams) {
  for (auto& e : load_corpus()) {
    Diagram d = parse_pd(e.pd);
    if (derive_arcs(d).size() > 5) continue;
    for (int p : {3, 5, 7, 11, 13}) {
      auto mine = enumerate(solve(d, p));
      std::sort(mine.begin(), mine.end());
      EXPECT_EQ(mine, oracle::brute_force_colorings(d, p)) << e.name << " p=" << p;
    }
  }
}

TEST(Solve, NonPrimeRejected) {
  EXPECT_THROW(solve(load_diagram("trefoil"), 9), Error);
  EXPECT_THROW(solve(load_diagram("trefoil"), 2), Error);
}

TEST(Enumerate, Filters) {
  auto s = solve(load_diagram("trefoil"), 3);
  EXPECT_EQ(enumerate(s).size(), 9u);
  EXPECT_EQ(enumerate(s, [](const Coloring& c) { return !is_trivial(c); }).size(), 6u);
  auto avoid = enumerate(s, [](const Coloring& c) {
    auto pal = palette(c);
    return !pal.count(2) && !pal.count(1);
  });
  ASSERT_EQ(avoid.size(), 1u);
  EXPECT_TRUE(is_trivial(avoid[0]));
  EXPECT_EQ(palette(avoid[0]), std::set<Color>{0});
}

TEST(Enumerate, BudgetExceeded) {
  auto s = solve(load_diagram("T(2,11)"), 11);
  try {
    enumerate(s, nullptr, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Trivial, Predicates) {
  Coloring c{Modulus(11), {4, 4, 4}};
  EXPECT_TRUE(is_trivial(c));
  EXPECT_EQ(palette(c), std::set<Color>{4});
  Coloring t{Modulus(3), {0, 1, 2}};
  EXPECT_TRUE(is_valid(load_diagram("trefoil"), t));
  EXPECT_FALSE(is_trivial(t));
  EXPECT_EQ(palette(t), (std::set<Color>{0, 1, 2}));
}

TEST(Determinant, CorpusAgainstRationalCofactor) {
  for (auto& e : load_corpus()) {
    auto ref = oracles::cofactor(oracles::present(e.pd));
    EXPECT_EQ(determinant(parse_pd(e.pd)), BigInt(ref)) << e.name;
    EXPECT_EQ(ref, e.determinant) << e.name;
  }
  EXPECT_EQ(determinant(load_diagram("trefoil")), 3);
  EXPECT_EQ(determinant(load_diagram("figure-eight")), 5);
  EXPECT_EQ(determinant(load_diagram("T(2,11)")), 11);
  EXPECT_EQ(determinant(load_diagram("T(2,13)")), 13);
}

TEST(Determinant, PredictsNontrivialColorings) {
  for (auto& e : load_corpus())
    for (int p : {3, 5, 7, 11, 13}) {
      int dim = solve(parse_pd(e.pd), p).dimension;
      EXPECT_EQ(dim > 1, e.determinant % p == 0) << e.name << " p=" << p;
    }
}

TEST(Affine, ImageOfValidColoringIsValid) {
  Diagram d = load_diagram("6_2");
  auto s = solve(d, 11);
  auto c = *first_nontrivial(s);
  for (long alpha = 1; alpha < 11; ++alpha)
    for (long beta = 0; beta < 11; ++beta) {
      Coloring img = c;
      for (auto& x : img.assignment) x = mod(alpha * x + beta, 11);
      EXPECT_TRUE(is_valid(d, img));
      EXPECT_FALSE(is_trivial(img));
      std::set<Color> expect;
      for (Color x : palette(c)) expect.insert(mod(alpha * x + beta, 11));
      EXPECT_EQ(palette(img), expect);
    }
}

TEST(Invariance, RandomMovesKeepDeterminantAndDimension) {
  std::mt19937 rng(20261016);
  for (auto& e : load_corpus()) {
    Diagram d = parse_pd(e.pd);
    BigInt det = determinant(d);
    std::map<int, int> dims;
    for (int p : {3, 5, 7, 11, 13}) dims[p] = solve(d, p).dimension;
    int applied = 0;
    for (int i = 0; i < 100; ++i) {
      auto m = foxcolor::testing::random_move(d, rng);
      ASSERT_TRUE(m) << e.name;
      d = apply_move(d, *m);
      ++applied;
      ASSERT_EQ(determinant(d), det) << e.name << " after " << applied << " moves";
      for (auto [p, dim] : dims) ASSERT_EQ(solve(d, p).dimension, dim) << e.name << " p=" << p;
    }
    EXPECT_EQ(applied, 100);
  }
}

TEST(Transport, ColoringFollowsMoves) {
  std::mt19937 rng(7);
  Diagram d = load_diagram("T(2,11)");
  EdgeColoring c = to_edge_coloring(d, *first_nontrivial(solve(d, 11)));
  for (int i = 0; i < 60; ++i) {
    auto m = foxcolor::testing::random_move(d, rng);
    ASSERT_TRUE(m);
    MoveOutcome out = apply_move_detailed(d, *m);
    c = transport(c, out);
    d = out.diagram;
    ASSERT_TRUE(is_valid(d, c)) << "move " << i;
  }
}
