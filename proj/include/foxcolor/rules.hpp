#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "foxcolor/catalog_data.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/modular.hpp"

namespace foxcolor {

// ---------------------------------------------------------------------------
// Affine expressions in the parameters a, b, k, l.

struct Params {
  long p = 0, k = 0, l = 0, a = 0, b = 0;
};

struct AffineExpr {
  long ca = 0, cb = 0, ck = 0, cl = 0, c0 = 0;

  static AffineExpr parse(const std::string& text) {
    AffineExpr e;
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(ErrorCode::MalformedToken, "empty expression");
    size_t i = 0;
    while (i < s.size()) {
      long sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        throw Error(ErrorCode::MalformedToken, "bad expression '" + text + "'");
      }
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      bool has_num = j > i;
      long num = has_num ? std::stol(s.substr(i, j - i)) : 1;
      i = j;
      char var = 0;
      if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) var = s[i++];
      if (!has_num && !var) throw Error(ErrorCode::MalformedToken, "bad expression '" + text + "'");
      long v = sign * num;
      switch (var) {
        case 0: e.c0 += v; break;
        case 'a': e.ca += v; break;
        case 'b': e.cb += v; break;
        case 'k': e.ck += v; break;
        case 'l': e.cl += v; break;
        default: throw Error(ErrorCode::MalformedToken, "unknown parameter in '" + text + "'");
      }
    }
    return e;
  }

  long eval(const Params& q) const {
    return mod(mod(ca, q.p) * q.a + mod(cb, q.p) * q.b + mod(ck, q.p) * q.k +
                   mod(cl, q.p) * q.l + c0,
               q.p);
  }

  bool uses_a() const { return ca != 0; }
  bool uses_b() const { return cb != 0; }
  bool uses_l() const { return cl != 0; }
  bool constant() const { return !ca && !cb && !ck && !cl; }

  AffineExpr operator-(const AffineExpr& o) const {
    return {ca - o.ca, cb - o.cb, ck - o.ck, cl - o.cl, c0 - o.c0};
  }
  bool operator==(const AffineExpr&) const = default;

  std::string str() const {
    std::string out;
    auto term = [&](long c, const char* v) {
      if (c == 0) return;
      if (c < 0) out += '-';
      else if (!out.empty()) out += '+';
      long m = c < 0 ? -c : c;
      if (m != 1 || !*v) out += std::to_string(m);
      out += v;
    };
    term(ca, "a"); term(cb, "b"); term(ck, "k"); term(cl, "l"); term(c0, "");
    return out.empty() ? "0" : out;
  }
};

struct Equation {
  AffineExpr lhs, rhs;
  std::string text;

  static Equation parse(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos || s.find('=', eq + 1) != std::string::npos)
      throw Error(ErrorCode::MalformedToken, "expected one '=' in '" + s + "'");
    return {AffineExpr::parse(s.substr(0, eq)), AffineExpr::parse(s.substr(eq + 1)), s};
  }
  bool holds(const Params& q) const { return lhs.eval(q) == rhs.eval(q); }
  bool uses_b() const { return lhs.uses_b() || rhs.uses_b(); }
  bool uses_l() const { return lhs.uses_l() || rhs.uses_l(); }
};

// p = m*l + r; m == 0 means "no case split".
struct ModClass {
  int m = 0, r = 0;

  static ModClass parse(const std::string& s) {
    auto pos = s.find("l+");
    if (pos == std::string::npos || pos == 0) throw Error(ErrorCode::MalformedToken, "bad class '" + s + "'");
    ModClass c{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    if (c.m != 3 && c.m != 4 && c.m != 6 && c.m != 8)
      throw Error(ErrorCode::MalformedToken, "class modulus must be 3, 4, 6 or 8: " + s);
    if (std::gcd(c.m, c.r) != 1) throw Error(ErrorCode::MalformedToken, "class residue not coprime: " + s);
    return c;
  }
  bool present() const { return m != 0; }
  bool matches(long p) const { return !present() || (p % m == r && p >= r); }
  long l_of(long p) const { return present() ? (p - r) / m : 0; }
  std::string str() const { return present() ? std::to_string(m) + "l+" + std::to_string(r) : ""; }
};

enum class Target { TwoK, TwoKMinus1, K };
enum class Phase { Mono, Over, Under };

inline const char* to_string(Target t) {
  return t == Target::TwoK ? "2k" : t == Target::TwoKMinus1 ? "2k-1" : "k";
}
inline const char* to_string(Phase ph) {
  return ph == Phase::Mono ? "mono" : ph == Phase::Over ? "over" : "under";
}

inline Color target_color(Target t, long p) {
  long k = (p - 1) / 2;
  return static_cast<Color>(t == Target::TwoK ? 2 * k : t == Target::TwoKMinus1 ? 2 * k - 1 : k);
}

// Target plus the colours already removed before it.
inline std::vector<Color> avoided_colors(Target t, long p) {
  std::vector<Color> out{target_color(Target::TwoK, p)};
  if (t != Target::TwoK) out.push_back(target_color(Target::TwoKMinus1, p));
  if (t == Target::K) out.push_back(target_color(Target::K, p));
  return out;
}

struct FoxTriple {
  AffineExpr label, over, under;
  std::string text;
};

enum class Make { None, Cover, Slide, Reverse, Pair };

struct Construction {
  Make kind = Make::None;
  AffineExpr helper;  // Cover / Pair: colour of the covering strand
};

struct Exclusion {
  Equation eq;
  std::string redirect;
};

// ---------------------------------------------------------------------------
// Table rows.

enum class Consequence { Reduction, ForbiddenColor, Modulus, Ordering, Admissible };

inline const char* to_string(Consequence c) {
  switch (c) {
    case Consequence::Reduction: return "reduction";
    case Consequence::ForbiddenColor: return "forbidden-color";
    case Consequence::Modulus: return "modulus";
    case Consequence::Ordering: return "ordering";
    case Consequence::Admissible: return "admissible";
  }
  return "?";
}

struct Condition {
  std::optional<Equation> eq;   // congruence
  std::optional<long> p_equals; // literal "p=11"
};

struct Alternative {
  std::vector<Condition> conds;
  ModClass cls;
};

struct AuditRow {
  std::string table, figure;
  int index = 0;
  Equation eq;
  Consequence kind = Consequence::Ordering;
  std::vector<Alternative> alts;  // Reduction
  std::vector<std::string> targets;
  std::optional<Equation> value;  // X E=v / V E=v
  std::vector<long> moduli;       // X! claims naming a modulus
  std::string claim;              // text after the marker
  bool from_chain = false;
};

struct Table {
  std::string id, figure;
  std::vector<Equation> when;
  bool chain = false;
  long lmin = 0;
  std::vector<AuditRow> rows;
};

struct RewriteRule {
  std::string id, parent;
  Target target = Target::TwoK;
  Phase phase = Phase::Mono;
  ModClass cls;
  std::optional<long> only_l;
  std::optional<AffineExpr> let_a, let_b;
  std::vector<Equation> when;  // disjunction
  std::vector<std::string> labels;
  std::vector<AffineExpr> pattern, fresh;
  std::vector<FoxTriple> fox;
  Construction make;
  std::vector<Exclusion> excludes;
  long lmin = 0;
  std::vector<const AuditRow*> reductions;  // guards: bindings hitting these are handled elsewhere

  bool executable() const { return make.kind != Make::None; }
  bool uses_b() const {
    if (let_b) return true;
    for (const auto& e : pattern) if (e.uses_b()) return true;
    for (const auto& e : fresh) if (e.uses_b()) return true;
    return false;
  }
};

// ---------------------------------------------------------------------------
// Catalog parsing.

namespace detail {

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return out;
}

inline bool starts_with(const std::string& s, const std::string& pre) { return s.rfind(pre, 0) == 0; }

inline Condition parse_condition(const std::string& s) {
  if (starts_with(s, "p=")) return {std::nullopt, std::stol(s.substr(2))};
  return {Equation::parse(s), std::nullopt};
}

inline AuditRow parse_row(const std::string& line, const Table& t, int index) {
  AuditRow row;
  row.table = t.id;
  row.figure = t.figure;
  row.index = index;
  auto arrow = line.find("=>");
  if (arrow == std::string::npos) throw Error(ErrorCode::MalformedToken, "row without '=>': " + line);
  row.eq = Equation::parse(trim(line.substr(0, arrow)));
  std::string rest = trim(line.substr(arrow + 2));
  if (starts_with(rest, "R ")) {
    row.kind = Consequence::Reduction;
    std::string body = rest.substr(2);
    auto to = body.find("->");
    if (to != std::string::npos) {
      for (auto& tg : split(body.substr(to + 2), ",")) row.targets.push_back(tg);
      body = body.substr(0, to);
    }
    for (auto& alt_text : split(body, "|")) {
      Alternative alt;
      std::string conds = alt_text;
      auto at = alt_text.find('@');
      if (at != std::string::npos) {
        alt.cls = ModClass::parse(trim(alt_text.substr(at + 1)));
        conds = trim(alt_text.substr(0, at));
      }
      for (auto& c : split(conds, "&")) alt.conds.push_back(parse_condition(c));
      row.alts.push_back(alt);
    }
  } else if (starts_with(rest, "X!")) {
    row.claim = trim(rest.substr(2));
    for (auto& c : split(row.claim, "|")) {
      if (c.size() > 2 && (c[0] == 'p' || c[0] == 'l') && c[1] == '=' &&
          c.find_first_not_of("0123456789", 2) == std::string::npos) {
        long v = std::stol(c.substr(2));
        if (c[0] == 'p') row.moduli.push_back(v);
        else row.moduli.push_back(-1 - v);  // l=v, resolved against the figure's class
      }
    }
    row.kind = row.moduli.empty() ? Consequence::Ordering : Consequence::Modulus;
  } else if (starts_with(rest, "X ")) {
    row.kind = Consequence::ForbiddenColor;
    row.value = Equation::parse(trim(rest.substr(2)));
  } else if (starts_with(rest, "V ")) {
    row.kind = Consequence::Admissible;
    row.value = Equation::parse(trim(rest.substr(2)));
  } else {
    throw Error(ErrorCode::MalformedToken, "unknown consequence: " + line);
  }
  return row;
}

}  // namespace detail

class Catalog {
 public:
  std::vector<RewriteRule> rules;
  std::vector<Table> tables;

  Catalog() = default;
  Catalog(const Catalog&) = delete;  // rules point into tables
  Catalog(Catalog&&) = default;

  static Catalog parse(const std::string& figures, const std::string& tables_text) {
    Catalog cat;
    cat.parse_figures(figures);
    cat.parse_tables(tables_text);
    cat.link();
    return cat;
  }

  const RewriteRule* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &rules[it->second];
  }

  const RewriteRule& rule(const std::string& id) const {
    const RewriteRule* r = find(id);
    if (!r) throw Error(ErrorCode::NotFound, "no rule " + id);
    return *r;
  }

 private:
  std::map<std::string, size_t> index_;

  void parse_figures(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    RewriteRule* cur = nullptr;
    while (std::getline(in, raw)) {
      std::string line = detail::trim(raw);
      if (line.empty()) continue;
      if (detail::starts_with(line, "figure ")) {
        rules.emplace_back();
        cur = &rules.back();
        cur->id = detail::trim(line.substr(7));
        continue;
      }
      if (!cur) throw Error(ErrorCode::MalformedToken, "stanza line outside a figure: " + line);
      auto sp = line.find(' ');
      std::string key = line.substr(0, sp), val = detail::trim(line.substr(sp + 1));
      if (key == "target") {
        cur->target = val == "2k" ? Target::TwoK : val == "2k-1" ? Target::TwoKMinus1 : Target::K;
        if (val != "2k" && val != "2k-1" && val != "k") throw Error(ErrorCode::MalformedToken, "target " + val);
      } else if (key == "phase") {
        if (val == "mono") cur->phase = Phase::Mono;
        else if (val == "over") cur->phase = Phase::Over;
        else if (val == "under") cur->phase = Phase::Under;
        else throw Error(ErrorCode::MalformedToken, "phase " + val);
      } else if (key == "parent") {
        cur->parent = val;
      } else if (key == "class") {
        cur->cls = ModClass::parse(val);
      } else if (key == "only") {
        cur->only_l = std::stol(val.substr(2));
      } else if (key == "let") {
        Equation e = Equation::parse(val);
        if (val[0] == 'a') cur->let_a = e.rhs;
        else if (val[0] == 'b') cur->let_b = e.rhs;
        else throw Error(ErrorCode::MalformedToken, "let " + val);
      } else if (key == "when") {
        for (auto& w : detail::split(val, "|")) cur->when.push_back(Equation::parse(w));
      } else if (key == "labels") {
        cur->labels = detail::split(val, ";");
      } else if (key == "pattern") {
        for (auto& s : detail::split(val, ";")) cur->pattern.push_back(AffineExpr::parse(s));
      } else if (key == "new") {
        for (auto& s : detail::split(val, ";")) cur->fresh.push_back(AffineExpr::parse(s));
      } else if (key == "fox") {
        auto colon = val.find(':');
        auto parts = detail::split(val.substr(colon + 1), ";");
        cur->fox.push_back({AffineExpr::parse(val.substr(0, colon)), AffineExpr::parse(parts.at(0)),
                            AffineExpr::parse(parts.at(1)), val});
      } else if (key == "make") {
        auto parts = detail::split(val, " ");
        const std::string& kind = parts[0];
        if (kind == "cover") cur->make.kind = Make::Cover;
        else if (kind == "slide") cur->make.kind = Make::Slide;
        else if (kind == "reverse") cur->make.kind = Make::Reverse;
        else if (kind == "pair") cur->make.kind = Make::Pair;
        else throw Error(ErrorCode::MalformedToken, "make " + val);
        if (parts.size() > 1) cur->make.helper = AffineExpr::parse(parts[1]);
      } else if (key == "exclude") {
        auto to = val.find("->");
        cur->excludes.push_back({Equation::parse(detail::trim(val.substr(0, to))),
                                 detail::trim(val.substr(to + 2))});
      } else {
        throw Error(ErrorCode::MalformedToken, "unknown key " + key);
      }
    }
    for (size_t i = 0; i < rules.size(); ++i) {
      if (!index_.emplace(rules[i].id, i).second)
        throw Error(ErrorCode::MalformedToken, "duplicate figure " + rules[i].id);
    }
  }

  void parse_tables(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    Table* cur = nullptr;
    while (std::getline(in, raw)) {
      std::string line = detail::trim(raw);
      if (line.empty()) continue;
      bool is_table = detail::starts_with(line, "table ");
      if (is_table || detail::starts_with(line, "chain ")) {
        tables.emplace_back();
        cur = &tables.back();
        cur->chain = !is_table;
        auto words = detail::split(line, " ");
        cur->id = words.at(1);
        if (words.at(2) != "on") throw Error(ErrorCode::MalformedToken, line);
        cur->figure = words.at(3);
        for (size_t i = 4; i + 1 < words.size(); i += 2) {
          if (words[i] == "lmin") cur->lmin = std::stol(words[i + 1]);
          else if (words[i] == "when") {
            std::string w = line.substr(line.find(" when ") + 6);
            for (auto& alt : detail::split(w, "|")) cur->when.push_back(Equation::parse(alt));
            break;
          }
        }
        continue;
      }
      if (!cur) throw Error(ErrorCode::MalformedToken, "row outside a table: " + line);
      if (cur->chain) {
        chain_rows(*cur, line);
      } else {
        cur->rows.push_back(detail::parse_row(line, *cur, static_cast<int>(cur->rows.size()) + 1));
      }
    }
  }

  // A chain "e1 < e2 <= e3 ..." certifies that no element meets the target or
  // an already-removed colour; expand it into one ordering row per pair.
  void chain_rows(Table& t, const std::string& line) {
    const RewriteRule* r = find(t.figure);
    if (!r) throw Error(ErrorCode::NotFound, "chain on unknown figure " + t.figure);
    std::string s = line;
    for (size_t pos; (pos = s.find("<=")) != std::string::npos;) s.replace(pos, 2, "<");
    std::vector<std::string> values{to_string(r->target)};
    if (r->target != Target::TwoK) values.push_back("2k");
    if (r->target == Target::K) values.push_back("2k-1");
    int idx = 0;
    for (auto& elem : detail::split(s, "<")) {
      AffineExpr e = AffineExpr::parse(elem);
      if (e.constant() && e.c0 >= 0) continue;
      // Landmarks identically equal to an avoided colour mark the arc being
      // removed; only the remaining elements are certified labels.
      bool landmark = false;
      for (auto& v : values)
        if (identically_equal(*r, e, AffineExpr::parse(v))) landmark = true;
      if (landmark) continue;
      for (auto& v : values) {
        AuditRow row;
        row.table = t.id;
        row.figure = t.figure;
        row.index = ++idx;
        row.eq = Equation::parse(elem + "=" + v);
        row.kind = Consequence::Ordering;
        row.claim = line;
        row.from_chain = true;
        t.rows.push_back(row);
      }
    }
  }

  static bool identically_equal(const RewriteRule& r, const AffineExpr& x, const AffineExpr& y) {
    if (!r.cls.present()) return x == y;
    for (long l = 40; l < 48; ++l) {
      long p = r.cls.m * l + r.cls.r;
      if (p % 2 == 0) continue;
      Params q{p, (p - 1) / 2, l, 0, 0};
      if (x.eval(q) != y.eval(q)) return false;
    }
    return true;
  }

  void link() {
    for (auto& t : tables) {
      RewriteRule* r = const_cast<RewriteRule*>(find(t.figure));
      if (!r) throw Error(ErrorCode::NotFound, "table " + t.id + " on unknown figure " + t.figure);
      if (t.chain && t.lmin) r->lmin = std::max(r->lmin, t.lmin);
      for (auto& row : t.rows)
        for (auto& tg : row.targets)
          if (!find(tg)) throw Error(ErrorCode::NotFound, "row " + t.id + " reduces to unknown " + tg);
    }
    for (auto& r : rules) {
      if (!r.parent.empty() && !find(r.parent))
        throw Error(ErrorCode::NotFound, r.id + " has unknown parent " + r.parent);
      for (auto& x : r.excludes)
        if (!find(x.redirect)) throw Error(ErrorCode::NotFound, r.id + " excludes into unknown " + x.redirect);
    }
    for (auto& t : tables)
      for (auto& row : t.rows)
        if (row.kind == Consequence::Reduction && t.when.empty())
          const_cast<RewriteRule*>(find(t.figure))->reductions.push_back(&row);
  }
};

inline const Catalog& catalog() {
  static const Catalog cat = Catalog::parse(catalog_text::figures, catalog_text::tables);
  return cat;
}

inline const RewriteRule* find_rule(const std::string& id) { return catalog().find(id); }

// ---------------------------------------------------------------------------
// Guards and binding enumeration.

// Case parameter l for p under the rule's class; nullopt if p is outside it.
inline std::optional<long> case_l(const RewriteRule& r, long p) {
  if (!r.cls.matches(p)) return std::nullopt;
  long l = r.cls.l_of(p);
  if (r.only_l && *r.only_l != l) return std::nullopt;
  return l;
}

inline bool in_avoided(Color v, Target t, long p) {
  for (Color f : avoided_colors(t, p))
    if (f == v) return true;
  return false;
}

// Pattern arcs exist in the diagram being rewritten, so none of them can
// carry the target or an already-removed colour.
inline bool standing_ok(const RewriteRule& r, const Params& q) {
  for (const auto& e : r.pattern)
    if (in_avoided(static_cast<Color>(e.eval(q)), r.target, q.p)) return false;
  return true;
}

inline bool when_ok(const std::vector<Equation>& when, const Params& q) {
  if (when.empty()) return true;
  for (const auto& w : when)
    if (w.holds(q)) return true;
  return false;
}

inline bool reduction_hit(const AuditRow& row, const Params& q) { return row.eq.holds(q); }

// Full guard: class, lets, alternatives, standing assumptions, ordering
// threshold and every sub-instance handed off to another figure.
inline bool guards_pass(const RewriteRule& r, const Params& q) {
  auto l = case_l(r, q.p);
  if (!l || *l != q.l) return false;
  if (r.cls.present() && q.l < r.lmin) return false;
  if (r.let_a && r.let_a->eval(q) != q.a) return false;
  if (r.let_b && r.let_b->eval(q) != q.b) return false;
  if (!when_ok(r.when, q)) return false;
  if (!standing_ok(r, q)) return false;
  for (const auto* row : r.reductions)
    if (reduction_hit(*row, q)) return false;
  for (const auto& x : r.excludes)
    if (x.eq.holds(q)) return false;
  return true;
}

// Calls f(Params) for every binding of (a, b) consistent with the lets.
template <class F>
void for_each_binding(const RewriteRule& r, long p, long l, bool with_b, F&& f) {
  Params q{p, (p - 1) / 2, l, 0, 0};
  auto inner = [&](long a) {
    q.a = a;
    if (r.let_b) {
      q.b = r.let_b->eval(q);
      f(q);
    } else if (with_b) {
      for (long b = 0; b < p; ++b) {
        q.b = b;
        f(q);
      }
    } else {
      q.b = 0;
      f(q);
    }
  };
  if (r.let_a) {
    q.a = 0;
    inner(r.let_a->eval(q));
  } else {
    for (long a = 0; a < p; ++a) inner(a);
  }
}

struct Binding {
  long a = 0;
  std::optional<long> b;
};

inline Params params_for(const RewriteRule& r, long p, const Binding& bind) {
  long l = r.cls.present() && r.cls.matches(p) ? r.cls.l_of(p) : 0;
  return Params{p, (p - 1) / 2, l, mod(bind.a, p), bind.b ? mod(*bind.b, p) : 0};
}

inline bool applicable(const RewriteRule& r, long p, const Binding& bind) {
  if (r.uses_b() && !bind.b) return false;
  return guards_pass(r, params_for(r, p, bind));
}

inline std::vector<Color> new_colors(const RewriteRule& r, long p, const Binding& bind) {
  Params q = params_for(r, p, bind);
  std::vector<Color> out;
  for (const auto& e : r.fresh) out.push_back(static_cast<Color>(e.eval(q)));
  return out;
}

// ---------------------------------------------------------------------------
// Table audit.

struct AuditRowResult {
  std::string table, figure, equation, consequence;
  int index = 0;
  bool applicable = false;
  bool pass = true;
  long solutions = 0;
  std::string note;
};

struct AuditReport {
  long p = 0;
  std::vector<AuditRowResult> rows;
  long failures() const {
    return std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
  }
  bool ok() const { return failures() == 0; }

  nlohmann::json to_json() const {
    nlohmann::json j{{"p", p}, {"ok", ok()}, {"failures", failures()}, {"rows", nlohmann::json::array()}};
    for (const auto& r : rows)
      j["rows"].push_back({{"table", r.table}, {"figure", r.figure}, {"row", r.index},
                           {"equation", r.equation}, {"consequence", r.consequence},
                           {"applicable", r.applicable}, {"pass", r.pass},
                           {"solutions", r.solutions}, {"note", r.note}});
    return j;
  }
};

namespace detail {

// Values of l with p = m*l + r hitting the fixed small modulus q; every l if
// the figure has no class.
inline bool claim_satisfiable(const RewriteRule& r, const Equation& eq, long q) {
  if (q < 2) return true;  // l = 0: every congruence holds mod 1
  std::vector<long> ls;
  if (r.cls.present() && q >= r.cls.r && (q - r.cls.r) % r.cls.m == 0) {
    ls.push_back((q - r.cls.r) / r.cls.m);
  } else if (r.cls.present()) {
    for (long l = 0; l < q; ++l) ls.push_back(l);  // q outside the class: l is unconstrained mod q
  } else {
    ls.push_back(0);
  }
  for (long l : ls) {
    bool hit = false;
    for_each_binding(r, q, l, eq.uses_b() || r.uses_b(), [&](const Params& b) {
      if (!hit && eq.holds(b)) hit = true;
    });
    if (hit) return true;
  }
  return false;
}

inline bool value_in(long v, const std::vector<Color>& set) {
  return std::find(set.begin(), set.end(), static_cast<Color>(v)) != set.end();
}

// True if `e` evaluates to the same residue as one of the figure's pattern
// labels at every binding in `sols`.
inline bool is_pattern_label(const RewriteRule& r, const AffineExpr& e, const std::vector<Params>& sols) {
  for (const auto& pat : r.pattern) {
    bool all = true;
    for (const auto& q : sols)
      if (pat.eval(q) != e.eval(q)) { all = false; break; }
    if (all) return true;
  }
  return false;
}

}  // namespace detail

inline AuditRowResult audit_row(const Table& t, const AuditRow& row, long p, const Catalog& cat = catalog()) {
  const RewriteRule& r = cat.rule(t.figure);
  AuditRowResult res{t.id, t.figure, row.eq.text, to_string(row.kind), row.index, false, true, 0, ""};
  if (row.from_chain) res.consequence = "ordering (chain)";
  auto l = case_l(r, p);
  if (!l) {
    res.note = "outside case class";
    return res;
  }
  if (row.from_chain) {
    if (*l < r.lmin) {
      res.note = "below chain threshold";
      return res;
    }
    Params probe{p, (p - 1) / 2, *l, 0, 0};
    for (const auto& x : r.excludes) {
      if (!x.eq.uses_l() || x.eq.lhs.uses_a() || x.eq.rhs.uses_a()) continue;
      if (x.eq.holds(probe)) {
        res.note = "fix-up " + x.redirect;
        return res;
      }
    }
  }
  res.applicable = true;
  const auto& when = t.when.empty() ? r.when : t.when;
  bool with_b = row.eq.uses_b() || r.uses_b();
  std::vector<Params> sols;
  for_each_binding(r, p, *l, with_b, [&](const Params& q) {
    if (!when_ok(when, q)) return;
    if (row.from_chain && !standing_ok(r, q)) return;
    if (row.eq.holds(q)) sols.push_back(q);
  });
  res.solutions = static_cast<long>(sols.size());
  auto fail = [&](const std::string& why) {
    res.pass = false;
    res.note = why;
  };
  std::vector<Color> avoided = avoided_colors(r.target, p);

  switch (row.kind) {
    case Consequence::Reduction: {
      for (const auto& q : sols) {
        bool any = false;
        for (const auto& alt : row.alts) {
          if (alt.cls.present() && !alt.cls.matches(p)) continue;
          Params qa = q;
          if (alt.cls.present()) qa.l = alt.cls.l_of(p);
          bool all = true;
          for (const auto& c : alt.conds) {
            if (c.p_equals) all = all && *c.p_equals == p;
            else all = all && c.eq->holds(qa);
          }
          if (all) { any = true; break; }
        }
        if (!any) {
          fail("binding a=" + std::to_string(q.a) + " b=" + std::to_string(q.b) + " matches no alternative");
          break;
        }
        // ... and some target figure must take that binding as its own.
        bool taken = row.targets.empty();
        for (const auto& id : row.targets) {
          const RewriteRule* t = cat.find(id);
          if (!t) continue;
          auto tl = case_l(*t, p);
          if (!tl) continue;
          Params qt = q;
          qt.l = *tl;
          if (t->let_a && t->let_a->eval(qt) != qt.a) continue;
          if (t->let_b && t->let_b->eval(qt) != qt.b) continue;
          taken = true;
          break;
        }
        if (!taken) {
          fail("binding a=" + std::to_string(q.a) + " b=" + std::to_string(q.b) + " is not the domain of " +
               (row.targets.empty() ? std::string("any target") : row.targets.front()));
          break;
        }
      }
      break;
    }
    case Consequence::ForbiddenColor: {
      long v = row.value->rhs.eval(Params{p, (p - 1) / 2, *l, 0, 0});
      if (!row.value->rhs.constant() && row.value->rhs.uses_a())
        fail("forbidden value depends on a");
      else if (!detail::value_in(v, avoided))
        fail("value " + std::to_string(v) + " is not a forbidden colour");
      else if (!sols.empty() && !detail::is_pattern_label(r, row.value->lhs, sols))
        fail(row.value->lhs.str() + " is not an arc of the figure");
      else
        for (const auto& q : sols)
          if (!row.value->holds(q)) {
            fail("a=" + std::to_string(q.a) + " does not force " + row.value->text);
            break;
          }
      break;
    }
    case Consequence::Modulus: {
      if (!sols.empty()) {
        fail("equation has " + std::to_string(sols.size()) + " solutions at p");
        break;
      }
      bool some = false;
      for (long m : row.moduli) {
        long q = m >= 0 ? m : (r.cls.present() ? r.cls.m * (-1 - m) + r.cls.r : -1);
        if (q == 1) {  // l = 0 contradicts l >= 1
          some = true;
          continue;
        }
        if (q < 2) continue;
        if (is_prime(q) && q > 7) {
          fail("claimed modulus " + std::to_string(q) + " is an admissible prime");
          break;
        }
        if (detail::claim_satisfiable(r, row.eq, q)) some = true;
      }
      if (res.pass && !some) fail("no claimed modulus admits the equation");
      break;
    }
    case Consequence::Ordering:
      if (!sols.empty()) fail("equation has " + std::to_string(sols.size()) + " solutions at p");
      break;
    case Consequence::Admissible: {
      for (const auto& q : sols) {
        long v = row.value->rhs.eval(q);
        if (!row.value->holds(q)) { fail("value not forced"); break; }
        if (detail::value_in(v, avoided)) { fail("admissible value is forbidden"); break; }
      }
      break;
    }
  }
  return res;
}

inline AuditReport audit_tables(long p, const Catalog& cat = catalog()) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p <= 7) throw Error(ErrorCode::ModulusTooSmall, "audit needs p > 7");
  AuditReport rep;
  rep.p = p;
  for (const auto& t : cat.tables)
    for (const auto& row : t.rows) rep.rows.push_back(audit_row(t, row, p, cat));
  return rep;
}

// ---------------------------------------------------------------------------
// Symbolic soundness and guard completeness.

struct SoundnessViolation {
  std::string rule;
  long p = 0, a = 0, b = 0;
  std::string what;
};

struct SoundnessReport {
  long p = 0;
  long rules_checked = 0, bindings = 0;
  std::vector<SoundnessViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline SoundnessReport soundness_sweep(long p, const Catalog& cat = catalog()) {
  SoundnessReport rep;
  rep.p = p;
  for (const auto& r : cat.rules) {
    auto l = case_l(r, p);
    if (!l) continue;
    ++rep.rules_checked;
    std::vector<Color> avoided = avoided_colors(r.target, p);
    for_each_binding(r, p, *l, r.uses_b(), [&](const Params& q) {
      if (!guards_pass(r, q)) return;
      ++rep.bindings;
      for (const auto& e : r.fresh) {
        long v = e.eval(q);
        if (detail::value_in(v, avoided))
          rep.violations.push_back({r.id, p, q.a, q.b, "label " + e.str() + " = " + std::to_string(v)});
      }
      for (const auto& f : r.fox) {
        if (f.label.eval(q) != mod(2 * f.over.eval(q) - f.under.eval(q), p))
          rep.violations.push_back({r.id, p, q.a, q.b, "fox relation " + f.text});
      }
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON export.

inline nlohmann::json catalog_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : catalog().rules) {
    nlohmann::json guards = nlohmann::json::array();
    if (r.cls.present()) guards.push_back({{"kind", "class"}, {"require", "p=" + r.cls.str()}});
    if (r.only_l) guards.push_back({{"kind", "only"}, {"require", "l=" + std::to_string(*r.only_l)}});
    if (r.lmin) guards.push_back({{"kind", "lmin"}, {"require", "l>=" + std::to_string(r.lmin)}});
    if (r.let_a) guards.push_back({{"kind", "let"}, {"require", "a=" + r.let_a->str()}});
    if (r.let_b) guards.push_back({{"kind", "let"}, {"require", "b=" + r.let_b->str()}});
    for (const auto& w : r.when) guards.push_back({{"kind", "when"}, {"require", w.text}});
    for (const auto& e : r.pattern) guards.push_back({{"kind", "pattern"}, {"forbid", e.str() + " in avoided"}});
    for (const auto* row : r.reductions)
      guards.push_back({{"kind", "reduction"}, {"forbid", row->eq.text}, {"table", row->table}, {"to", row->targets}});
    for (const auto& x : r.excludes)
      guards.push_back({{"kind", "exclude"}, {"forbid", x.eq.text}, {"to", x.redirect}});
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& e : r.fresh) labels.push_back(e.str());
    static const char* makes[] = {"none", "cover", "slide", "reverse", "pair"};
    out.push_back({{"ruleId", r.id}, {"figure", r.id}, {"parent", r.parent},
                   {"targetColor", to_string(r.target)}, {"phase", to_string(r.phase)},
                   {"guards", guards}, {"replacementLabels", labels},
                   {"construction", makes[static_cast<int>(r.make.kind)]}});
  }
  return out;
}

}  // namespace foxcolor
