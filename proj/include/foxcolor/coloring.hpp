#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "foxcolor/diagram.hpp"
#include "foxcolor/modular.hpp"
#include "foxcolor/moves.hpp"

namespace foxcolor {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000ULL;

// Colors indexed by ArcId of derive_arcs(d) for the diagram it belongs to.
struct Coloring {
  Modulus modulus;
  std::vector<Color> assignment;
  bool operator==(const Coloring&) const = default;
  bool operator<(const Coloring& o) const { return assignment < o.assignment; }
};

struct ColoringSpace {
  Modulus modulus;
  int dimension = 0;
  std::vector<std::vector<Color>> basis;
};

// Per-edge view used while rewriting; free loops carry their own colors.
struct EdgeColoring {
  Modulus modulus;
  std::map<EdgeId, Color> edge;
  std::vector<Color> loops;
};

inline bool check_crossing(const Modulus& m, Color over, Color u1, Color u2) {
  return m.reduce(static_cast<long>(u1) + u2 - 2L * over) == 0;
}

struct CrossingColors {
  Color over, u1, u2;
};

inline CrossingColors crossing_colors(const Diagram& d, const EdgeColoring& c, CrossingId x) {
  const Crossing& cr = d.crossing(x);
  auto get = [&](int port) {
    auto it = c.edge.find(cr.ports[port]);
    if (it == c.edge.end())
      throw Error(ErrorCode::MissingColor, "edge " + std::to_string(cr.ports[port]) + " uncolored");
    return it->second;
  };
  auto o = cr.over_ports();
  auto u = cr.under_ports();
  return {get(o[0]), get(u[0]), get(u[1])};
}

inline bool check_crossing(const Diagram& d, const EdgeColoring& c, CrossingId x) {
  auto cc = crossing_colors(d, c, x);
  const Crossing& cr = d.crossing(x);
  auto o = cr.over_ports();
  if (c.edge.at(cr.ports[o[0]]) != c.edge.at(cr.ports[o[1]])) return false;
  return check_crossing(c.modulus, cc.over, cc.u1, cc.u2);
}

inline EdgeColoring to_edge_coloring(const Diagram& d, const Coloring& c) {
  auto arcs = derive_arcs(d);
  EdgeColoring ec{c.modulus, {}, {}};
  for (auto& a : arcs) {
    if (static_cast<std::size_t>(a.id) >= c.assignment.size())
      throw Error(ErrorCode::MissingColor, "arc " + std::to_string(a.id) + " uncolored");
    Color col = c.modulus.reduce(c.assignment[a.id]);
    if (a.edges.empty())
      ec.loops.push_back(col);
    else
      for (EdgeId e : a.edges) ec.edge[e] = col;
  }
  return ec;
}

// Fails with MissingColor if the edge colors along an arc disagree.
inline Coloring to_arc_coloring(const Diagram& d, const EdgeColoring& ec) {
  auto arcs = derive_arcs(d);
  Coloring c{ec.modulus, std::vector<Color>(arcs.size(), 0)};
  std::size_t loop = 0;
  for (auto& a : arcs) {
    if (a.edges.empty()) {
      if (loop >= ec.loops.size()) throw Error(ErrorCode::MissingColor, "free loop uncolored");
      c.assignment[a.id] = ec.loops[loop++];
      continue;
    }
    auto it = ec.edge.find(a.edges.front());
    if (it == ec.edge.end()) throw Error(ErrorCode::MissingColor, "edge uncolored");
    for (EdgeId e : a.edges)
      if (ec.edge.at(e) != it->second) throw Error(ErrorCode::MissingColor, "arc colors disagree");
    c.assignment[a.id] = it->second;
  }
  return c;
}

inline bool is_valid(const Diagram& d, const EdgeColoring& c) {
  for (auto& [x, cr] : d.crossings())
    if (!check_crossing(d, c, x)) return false;
  return true;
}

inline bool is_valid(const Diagram& d, const Coloring& c) {
  if (c.assignment.size() != derive_arcs(d).size()) return false;
  return is_valid(d, to_edge_coloring(d, c));
}

inline bool is_trivial(const Coloring& c) {
  for (Color x : c.assignment)
    if (x != c.assignment.front()) return false;
  return true;
}

inline std::set<Color> palette(const Coloring& c) { return {c.assignment.begin(), c.assignment.end()}; }

inline std::set<Color> palette(const EdgeColoring& c) {
  std::set<Color> s(c.loops.begin(), c.loops.end());
  for (auto& [e, x] : c.edge) s.insert(x);
  return s;
}

// Row per crossing: +2 at the over arc, -1 at each under arc.
inline std::vector<std::vector<long>> coloring_matrix(const Diagram& d, const std::vector<Arc>& arcs) {
  auto arc_of = arc_of_edges(arcs);
  std::vector<std::vector<long>> rows;
  for (auto& [x, c] : d.crossings()) {
    std::vector<long> row(arcs.size(), 0);
    auto o = c.over_ports();
    auto u = c.under_ports();
    row[arc_of.at(c.ports[o[0]])] += 2;
    row[arc_of.at(c.ports[u[0]])] -= 1;
    row[arc_of.at(c.ports[u[1]])] -= 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

// Null space mod p; pivots chosen as the first nonzero entry scanning rows in
// order for each column.
inline ColoringSpace solve(const Diagram& d, int p) {
  Modulus m(p);
  require_valid(d);
  auto arcs = derive_arcs(d);
  auto a = coloring_matrix(d, arcs);
  const std::size_t cols = arcs.size();
  for (auto& row : a)
    for (auto& x : row) x = mod(x, p);
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pr = r;
    while (pr < a.size() && a[pr][c] == 0) ++pr;
    if (pr == a.size()) continue;
    std::swap(a[pr], a[r]);
    long inv = inverse_mod(a[r][c], p);
    for (auto& x : a[r]) x = mod(x * inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      long f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  ColoringSpace space{m, 0, {}};
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Color> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = m.reduce(-a[i][f]);
    space.basis.push_back(std::move(v));
  }
  space.dimension = static_cast<int>(space.basis.size());
  return space;
}

// |cofactor| of the integer coloring matrix (last row and column removed),
// by fraction-free Bareiss elimination.
inline BigInt determinant(const Diagram& d) {
  require_valid(d);
  auto arcs = derive_arcs(d);
  const std::size_t n = d.crossing_count();
  if (n == 0) return d.free_loops() <= 1 ? 1 : 0;
  // A closed arc or free loop beside crossings means a component lying
  // entirely above the rest: the link splits and the determinant vanishes.
  if (arcs.size() != n) return 0;
  auto rows = coloring_matrix(d, arcs);
  const std::size_t m = n - 1;
  if (m == 0) return 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = rows[i][j];
  BigInt prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < m && a[s][k] == 0) ++s;
      if (s == m) return 0;
      std::swap(a[s], a[k]);
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[m - 1][m - 1];
  return det < 0 ? BigInt(-det) : det;
}

inline std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > budget / base) return budget + 1;
    r *= base;
  }
  return r;
}

// Visits every vector of the span once: coefficient vectors counted in base
// p with the first basis vector least significant.
inline void for_each_coloring(const ColoringSpace& s, const std::function<bool(const Coloring&)>& visit,
                              std::uint64_t budget = kDefaultBudget) {
  const int p = s.modulus.p;
  std::uint64_t total = checked_power(static_cast<std::uint64_t>(p), s.dimension, budget);
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(p) + "^" + std::to_string(s.dimension) +
                                               " colorings exceed the budget of " + std::to_string(budget));
  const std::size_t n = s.basis.empty() ? 0 : s.basis.front().size();
  std::vector<int> coef(s.dimension, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    Coloring c{s.modulus, std::vector<Color>(n, 0)};
    for (int i = 0; i < s.dimension; ++i)
      if (coef[i])
        for (std::size_t j = 0; j < n; ++j)
          c.assignment[j] = s.modulus.reduce(c.assignment[j] + static_cast<long>(coef[i]) * s.basis[i][j]);
    if (!visit(c)) return;
    for (int i = 0; i < s.dimension; ++i) {
      if (++coef[i] < p) break;
      coef[i] = 0;
    }
  }
}

inline std::vector<Coloring> enumerate(const ColoringSpace& s,
                                       const std::function<bool(const Coloring&)>& filter = nullptr,
                                       std::uint64_t budget = kDefaultBudget) {
  std::vector<Coloring> out;
  for_each_coloring(
      s,
      [&](const Coloring& c) {
        if (!filter || filter(c)) out.push_back(c);
        return true;
      },
      budget);
  return out;
}

// First non-trivial coloring in enumeration order, if any. With two or more
// basis vectors the first one is already non-trivial (it vanishes on the
// second free column), so scanning two vectors is enough.
inline std::optional<Coloring> first_nontrivial(const ColoringSpace& s) {
  ColoringSpace head = s;
  if (head.dimension > 2) {
    head.basis.resize(2);
    head.dimension = 2;
  }
  std::optional<Coloring> found;
  for_each_coloring(head, [&](const Coloring& c) {
    if (is_trivial(c)) return true;
    found = c;
    return false;
  });
  return found;
}

// Fills uncolored edges from the Fox relation until nothing changes.
inline void propagate(const Diagram& d, EdgeColoring& c) {
  const Modulus& m = c.modulus;
  long half = inverse_mod(2, m.p);
  // Only crossings with an uncolored port can change.
  std::vector<const Crossing*> open;
  for (auto& [x, cr] : d.crossings())
    for (EdgeId e : cr.ports)
      if (!c.edge.count(e)) {
        open.push_back(&cr);
        break;
      }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Crossing* crp : open) {
      const Crossing& cr = *crp;
      auto o = cr.over_ports();
      auto u = cr.under_ports();
      EdgeId eo0 = cr.ports[o[0]], eo1 = cr.ports[o[1]], eu0 = cr.ports[u[0]], eu1 = cr.ports[u[1]];
      auto has = [&](EdgeId e) { return c.edge.count(e) != 0; };
      if (has(eo0) != has(eo1)) {
        if (has(eo0)) c.edge[eo1] = c.edge[eo0]; else c.edge[eo0] = c.edge[eo1];
        changed = true;
      }
      bool ho = has(eo0), h0 = has(eu0), h1 = has(eu1);
      if (ho && h0 && !h1) { c.edge[eu1] = m.reflect(c.edge[eo0], c.edge[eu0]); changed = true; }
      else if (ho && h1 && !h0) { c.edge[eu0] = m.reflect(c.edge[eo0], c.edge[eu1]); changed = true; }
      else if (!ho && h0 && h1) {
        Color o2 = m.reduce((static_cast<long>(c.edge[eu0]) + c.edge[eu1]) % m.p * half);
        c.edge[eo0] = c.edge[eo1] = o2;
        changed = true;
      }
    }
  }
}

// Carries an edge coloring across one applied move; new colours are forced.
inline EdgeColoring transport(const EdgeColoring& before, const MoveOutcome& out) {
  EdgeColoring after{before.modulus, {}, before.loops};
  const Diagram& d = out.diagram;
  for (auto& [e, en] : d.edges()) {
    auto it = before.edge.find(e);
    if (it != before.edge.end()) after.edge[e] = it->second;
  }
  for (auto& [ne, old] : out.inherits) after.edge[ne] = before.edge.at(old);
  for (EdgeId old : out.new_loops) after.loops.push_back(before.edge.at(old));
  propagate(d, after);
  for (auto& [e, en] : d.edges())
    if (!after.edge.count(e)) throw Error(ErrorCode::MissingColor, "edge " + std::to_string(e) + " not forced by the move");
  return after;
}

inline json to_json(const Coloring& c) {
  json a = json::object();
  for (std::size_t i = 0; i < c.assignment.size(); ++i) a[std::to_string(i)] = c.assignment[i];
  return json{{"p", c.modulus.p}, {"assignment", a}};
}

inline Coloring coloring_from_json(const json& j) {
  Coloring c{Modulus(j.at("p").get<int>()), {}};
  const auto& a = j.at("assignment");
  c.assignment.assign(a.size(), 0);
  for (auto it = a.begin(); it != a.end(); ++it) {
    std::size_t id = std::stoul(it.key());
    if (id >= a.size()) throw Error(ErrorCode::InvalidInput, "arc ids must be 0..n-1");
    c.assignment[id] = c.modulus.reduce(it.value().get<long>());
  }
  return c;
}

inline json to_json(const ColoringSpace& s) {
  return json{{"p", s.modulus.p}, {"dimension", s.dimension}, {"basis", s.basis}};
}

}  // namespace foxcolor
