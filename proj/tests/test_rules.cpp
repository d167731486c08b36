#include <gtest/gtest.h>

#include "foxcolor/catalog_data.hpp"
#include "foxcolor/rules.hpp"
#include "oracles.hpp"

using namespace foxcolor;

namespace {

std::vector<long> primes_between(long lo, long hi) {
  std::vector<long> out;
  for (long p = lo; p <= hi; ++p)
    if (oracles::prime(p)) out.push_back(p);
  return out;
}

const AuditRow* find_row(const Catalog& cat, const std::string& table, const std::string& eq) {
  for (auto& t : cat.tables)
    if (t.id == table)
      for (auto& r : t.rows)
        if (r.eq.text == eq) return &r;
  return nullptr;
}

const Table* find_table(const Catalog& cat, const std::string& id) {
  for (auto& t : cat.tables)
    if (t.id == id) return &t;
  return nullptr;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  if (at == std::string::npos) throw std::runtime_error("mutation anchor missing: " + from);
  return s.replace(at, from.size(), to);
}

bool catalog_clean(const Catalog& cat) {
  for (long p : primes_between(11, 101)) {
    if (!audit_tables(p, cat).ok()) return false;
    if (!soundness_sweep(p, cat).ok()) return false;
  }
  return true;
}

}  // namespace

TEST(Expr, ParseAndEvaluate) {
  Params q{13, 6, 4, 3, 0};
  EXPECT_EQ(AffineExpr::parse("-2-a").eval(q), oracles::solve_linear(1, -5, 13)[0]);
  EXPECT_EQ(AffineExpr::parse("3a+2").eval(q), 11);
  EXPECT_EQ(AffineExpr::parse("2k-1").eval(q), 11);
  EXPECT_EQ(AffineExpr::parse("l-1").eval(q), 3);
  EXPECT_THROW(AffineExpr::parse("2x"), Error);
  EXPECT_THROW(Equation::parse("a=b=c"), Error);
}

TEST(Catalog, Loads) {
  const Catalog& cat = catalog();
  EXPECT_GT(cat.rules.size(), 50u);
  EXPECT_GT(cat.tables.size(), 40u);
  EXPECT_NE(cat.find("fig:eps1"), nullptr);
  EXPECT_EQ(cat.find("fig:nope"), nullptr);
  EXPECT_THROW(cat.rule("fig:nope"), Error);
}

// Replacement labels of the over-arc cover: -2-a and 3a+2 next to a, both
// forced by the Fox relation.
TEST(Catalog, OverCoverLabels) {
  const RewriteRule& r = catalog().rule("fig:eps2");
  std::set<std::string> labels;
  for (auto& e : r.fresh) labels.insert(e.str());
  EXPECT_TRUE(labels.count("-a-2"));
  EXPECT_TRUE(labels.count("3a+2"));
  for (long p : primes_between(11, 31))
    for (long a = 0; a < p; ++a) {
      long k = (p - 1) / 2;
      long x = ((-2 - a) % p + p) % p, y = (3 * a + 2) % p;
      EXPECT_EQ(((2 * a - y) % p + p) % p, x);
      EXPECT_EQ(((2 * a - x) % p + p) % p, y);
      EXPECT_EQ(((2 * a - 2 * k) % p + p) % p, (2 * a + 1) % p);
    }
}

TEST(Audit, RowThreeAPlusTwoAtThirteen) {
  const Catalog& cat = catalog();
  const Table* t = find_table(cat, "Ta:fig:red6b2a+1");
  ASSERT_NE(t, nullptr);
  const AuditRow* row = find_row(cat, t->id, "3a+2=2k-1");
  ASSERT_NE(row, nullptr);
  // 3a + 2 = 11 mod 13
  auto sol = oracles::solve_linear(3, 9, 13);
  ASSERT_EQ(sol, std::vector<long>{3});
  long l = 4;  // 13 = 3*4 + 1
  EXPECT_EQ(sol[0], l - 1);
  auto res = audit_row(*t, *row, 13);
  EXPECT_TRUE(res.pass) << res.note;
  EXPECT_EQ(res.solutions, 1);
}

// a = l-1 when p = 4l+1, a = 3l+1 when p = 4l+3, for 2a - k = -2.
TEST(Audit, QuarterClassSplit) {
  const Catalog& cat = catalog();
  const AuditRow* row = nullptr;
  const Table* table = nullptr;
  for (auto& t : cat.tables)
    for (auto& r : t.rows)
      if (r.eq.text == "2a-k=-2" && r.alts.size() == 2) row = &r, table = &t;
  ASSERT_NE(row, nullptr);
  for (long p : primes_between(11, 101)) {
    long k = (p - 1) / 2;
    auto sol = oracles::solve_linear(2, k - 2, p);
    ASSERT_EQ(sol.size(), 1u);
    long l = p / 4;
    long expect = p % 4 == 1 ? l - 1 : 3 * l + 1;
    EXPECT_EQ(sol[0], ((expect % p) + p) % p) << p;
    auto res = audit_row(*table, *row, p);
    EXPECT_TRUE(res.pass) << "p=" << p << " " << res.note;
  }
}

TEST(Audit, AllPrimesUpTo101) {
  long rows = 0;
  for (long p : primes_between(11, 101)) {
    AuditReport rep = audit_tables(p);
    for (auto& r : rep.rows) EXPECT_TRUE(r.pass) << "p=" << p << " " << r.table << " " << r.equation << ": " << r.note;
    rows += static_cast<long>(rep.rows.size());
  }
  EXPECT_GT(rows, 0);
}

TEST(Audit, RejectsBadModuli) {
  try {
    audit_tables(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModulusTooSmall);
  }
  try {
    audit_tables(15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrime);
  }
}

TEST(Soundness, AllPrimesUpTo101) {
  long bindings = 0;
  for (long p : primes_between(11, 101)) {
    SoundnessReport rep = soundness_sweep(p);
    for (auto& v : rep.violations) ADD_FAILURE() << "p=" << p << " " << v.rule << " a=" << v.a << ": " << v.what;
    bindings += rep.bindings;
  }
  EXPECT_GT(bindings, 0);
}

TEST(Soundness, EveryExecutableRuleHasBindings) {
  for (auto& r : catalog().rules) {
    if (!r.executable()) continue;
    bool any = false;
    for (long p : primes_between(11, 101)) {
      auto l = case_l(r, p);
      if (!l) continue;
      for_each_binding(r, p, *l, r.uses_b(), [&](const Params& q) { any = any || guards_pass(r, q); });
      if (any) break;
    }
    EXPECT_TRUE(any) << r.id;
  }
}

TEST(Soundness, GuardedBindingAvoidsTarget) {
  const RewriteRule& r = catalog().rule("fig:eps1");
  for (long a = 0; a < 11; ++a) {
    Binding b{a, std::nullopt};
    if (!applicable(r, 11, b)) {
      EXPECT_EQ(a, 10);  // the arc a cannot already carry 2k
      continue;
    }
    for (Color c : new_colors(r, 11, b)) EXPECT_NE(c, 10);
  }
}

TEST(Mutation, BrokenFoxRelationCaught) {
  std::string figs = replace_once(catalog_text::figures, "fox 2a+1 : a ; 2k\n  make cover a\n",
                                  "fox 2a+1 : a ; 2k-1\n  make cover a\n");
  Catalog cat = Catalog::parse(figs, catalog_text::tables);
  EXPECT_FALSE(catalog_clean(cat));
}

TEST(Mutation, WrongForbiddenValueCaught) {
  std::string tabs = replace_once(catalog_text::tables, "  2a=2k-1 => X a=-1\n  3a+2=2k => X a=-1\n",
                                  "  2a=2k-1 => X a=-2\n  3a+2=2k => X a=-1\n");
  Catalog cat = Catalog::parse(catalog_text::figures, tabs);
  EXPECT_FALSE(catalog_clean(cat));
}

TEST(Mutation, WrongClassSplitCaught) {
  std::string tabs = replace_once(catalog_text::tables, "R a=l-1 @3l+1 | a=2l @3l+2 -> fig:red8, fig:red9",
                                  "R a=l @3l+1 | a=2l @3l+2 -> fig:red8, fig:red9");
  Catalog cat = Catalog::parse(catalog_text::figures, tabs);
  EXPECT_FALSE(catalog_clean(cat));
}

TEST(Mutation, DroppedLetCaught) {
  std::string figs = replace_once(catalog_text::figures, "  class 3l+1\n  let a=l-1\n", "  class 3l+1\n  let a=l\n");
  Catalog cat = Catalog::parse(figs, catalog_text::tables);
  EXPECT_FALSE(catalog_clean(cat));
}

TEST(Catalog, JsonExport) {
  nlohmann::json j = catalog_json();
  EXPECT_TRUE(j.is_object() || j.is_array());
  EXPECT_FALSE(j.empty());
}
