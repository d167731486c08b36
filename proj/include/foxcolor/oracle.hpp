#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/moves.hpp"

// Independent checks. Everything here works from the JSON forms of diagrams
// and colorings; only move replay and hashing are shared with the library.

namespace foxcolor::oracle {

// Diagram as read back from JSON.
struct PlainDiagram {
  std::map<int, std::array<int, 4>> ports;
  std::map<int, int> over_first;  // lower over port (0 or 1)
  int free_loops = 0;

  static PlainDiagram from_json(const json& j) {
    PlainDiagram d;
    for (const auto& c : j.at("crossings")) {
      int id = c.at("id").get<int>();
      auto p = c.at("ports").get<std::vector<int>>();
      auto o = c.at("over").get<std::vector<int>>();
      if (p.size() != 4 || o.size() != 2) throw Error(ErrorCode::InvalidInput, "malformed crossing");
      d.ports[id] = {p[0], p[1], p[2], p[3]};
      d.over_first[id] = std::min(o[0], o[1]);
    }
    d.free_loops = j.value("free_loops", 0);
    return d;
  }

  std::set<int> edges() const {
    std::set<int> s;
    for (auto& [x, p] : ports) s.insert(p.begin(), p.end());
    return s;
  }
};

class UnionFind {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) return parent_[x] = x;
    if (it->second == x) return x;
    return it->second = find(it->second);
  }
  void join(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::map<int, int> parent_;
};

// Edge -> arc index. Arcs are the classes of edges glued through over
// ports, ordered by least edge id; free loops take the trailing indices.
struct ArcIndex {
  std::map<int, int> of_edge;
  int open_arcs = 0;
  int total = 0;
};

inline ArcIndex arcs_of(const PlainDiagram& d) {
  UnionFind uf;
  for (auto& [x, p] : d.ports) {
    int o = d.over_first.at(x);
    uf.join(p[o], p[o + 2]);
  }
  std::map<int, int> least;  // root -> least edge
  for (int e : d.edges()) {
    int r = uf.find(e);
    auto it = least.find(r);
    if (it == least.end() || e < it->second) least[r] = e;
  }
  std::vector<std::pair<int, int>> order;  // (least edge, root)
  for (auto& [r, e] : least) order.push_back({e, r});
  std::sort(order.begin(), order.end());
  std::map<int, int> idx;
  for (size_t i = 0; i < order.size(); ++i) idx[order[i].second] = static_cast<int>(i);
  ArcIndex a;
  for (int e : d.edges()) a.of_edge[e] = idx[uf.find(e)];
  a.open_arcs = static_cast<int>(order.size());
  a.total = a.open_arcs + d.free_loops;
  return a;
}

// Link components: classes of edges glued straight through every crossing.
inline int components_of(const PlainDiagram& d) {
  UnionFind uf;
  for (auto& [x, p] : d.ports) {
    uf.join(p[0], p[2]);
    uf.join(p[1], p[3]);
  }
  std::set<int> roots;
  for (int e : d.edges()) roots.insert(uf.find(e));
  return static_cast<int>(roots.size()) + d.free_loops;
}

inline long md(long x, long p) { return ((x % p) + p) % p; }

// Fox relation at every crossing for an arc assignment.
inline std::optional<int> first_bad_crossing(const PlainDiagram& d, const ArcIndex& a,
                                             const std::vector<long>& col, long p) {
  for (auto& [x, ports] : d.ports) {
    int o = d.over_first.at(x);
    long over = col.at(a.of_edge.at(ports[o]));
    long u1 = col.at(a.of_edge.at(ports[(o + 1) % 4]));
    long u2 = col.at(a.of_edge.at(ports[(o + 3) % 4]));
    if (md(u1 + u2 - 2 * over, p) != 0) return x;
  }
  return std::nullopt;
}

struct OracleMeasure {
  long mono = 0, over = 0, under = 0;
  auto operator<=>(const OracleMeasure&) const = default;
};

inline OracleMeasure measure_of(const PlainDiagram& d, const ArcIndex& a, const std::vector<long>& col, long t) {
  OracleMeasure m;
  for (auto& [x, ports] : d.ports) {
    int o = d.over_first.at(x);
    long over = col.at(a.of_edge.at(ports[o]));
    long u1 = col.at(a.of_edge.at(ports[(o + 1) % 4]));
    long u2 = col.at(a.of_edge.at(ports[(o + 3) % 4]));
    if (over == t) {
      ++m.over;
      if (u1 == t && u2 == t) ++m.mono;
    }
    m.under += (u1 == t) + (u2 == t);
  }
  return m;
}

// ---------------------------------------------------------------------------

inline std::vector<Coloring> brute_force_colorings(const Diagram& d, int p,
                                                   std::uint64_t budget = kDefaultBudget) {
  Modulus m(p);
  PlainDiagram pd = PlainDiagram::from_json(to_json(d));
  ArcIndex a = arcs_of(pd);
  std::uint64_t total = checked_power(static_cast<std::uint64_t>(p), a.total, budget);
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(p) + "^" + std::to_string(a.total) +
                                               " assignments exceed the budget of " + std::to_string(budget));
  std::vector<Coloring> out;
  std::vector<long> col(a.total, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!first_bad_crossing(pd, a, col, p)) {
      Coloring c{m, std::vector<Color>(col.begin(), col.end())};
      out.push_back(c);
    }
    for (int j = a.total - 1; j >= 0; --j) {  // odometer, last arc fastest
      if (++col[j] < p) break;
      col[j] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A non-trivial coloring of d itself avoiding 2k, 2k-1 and k, if the span
// contains one.
inline std::optional<Coloring> fixed_diagram_witness(const Diagram& d, int p,
                                                     std::uint64_t budget = kDefaultBudget) {
  ColoringSpace s = solve(d, p);
  Modulus m(p);
  std::set<Color> bad{m.forbidden(0), m.forbidden(1), m.forbidden(2)};
  PlainDiagram pd = PlainDiagram::from_json(to_json(d));
  ArcIndex a = arcs_of(pd);
  std::optional<Coloring> found;
  for_each_coloring(
      s,
      [&](const Coloring& c) {
        if (is_trivial(c)) return true;
        for (Color x : c.assignment)
          if (bad.count(x)) return true;
        std::vector<long> col(c.assignment.begin(), c.assignment.end());
        if (first_bad_crossing(pd, a, col, p)) return true;  // self-check
        found = c;
        return false;
      },
      budget);
  return found;
}

// ---------------------------------------------------------------------------

struct Failure {
  long step = -1;  // global step index, -1 for report-level problems
  std::string reason;
};

struct VerificationVerdict {
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }

  json to_json() const {
    json f = json::array();
    for (auto& x : failures) f.push_back({{"step", x.step}, {"reason", x.reason}});
    return json{{"ok", ok()}, {"failures", f}};
  }
};

namespace detail {

inline std::vector<long> read_assignment(const json& j, long p, int n) {
  if (j.at("p").get<long>() != p) throw Error(ErrorCode::InvalidInput, "coloring modulus differs");
  const auto& a = j.at("assignment");
  if (static_cast<int>(a.size()) != n) throw Error(ErrorCode::InvalidInput, "coloring has wrong number of arcs");
  std::vector<long> col(n, -1);
  for (auto it = a.begin(); it != a.end(); ++it) {
    int id = std::stoi(it.key());
    if (id < 0 || id >= n) throw Error(ErrorCode::InvalidInput, "arc id out of range");
    long v = it.value().get<long>();
    if (v < 0 || v >= p) throw Error(ErrorCode::InvalidInput, "colour out of range");
    col[id] = v;
  }
  return col;
}

inline std::map<int, long> edge_colors(const ArcIndex& a, const std::vector<long>& col) {
  std::map<int, long> m;
  for (auto& [e, arc] : a.of_edge) m[e] = col[arc];
  return m;
}

inline std::multiset<long> loop_colors(const ArcIndex& a, const std::vector<long>& col) {
  return {col.begin() + a.open_arcs, col.end()};
}

}  // namespace detail

inline VerificationVerdict verify_report(const json& report) {
  VerificationVerdict v;
  auto fail = [&](long step, const std::string& why) { v.failures.push_back({step, why}); };
  try {
    if (report.value("schema", "") != "trace-v1") fail(-1, "unknown schema");
    long p = report.at("p").get<long>();
    if (!is_prime(p) || p <= 7) {
      fail(-1, "modulus is not a prime above 7");
      return v;
    }
    long k = (p - 1) / 2;
    std::vector<long> forbidden{2 * k, 2 * k - 1, k};

    Diagram cur = diagram_from_json(report.at("input").at("diagram"));
    PlainDiagram pd = PlainDiagram::from_json(to_json(cur));
    ArcIndex arcs = arcs_of(pd);
    std::vector<long> col = detail::read_assignment(report.at("input").at("coloring"), p, arcs.total);
    if (first_bad_crossing(pd, arcs, col, p)) fail(-1, "input coloring: Fox relation violated");
    if (std::all_of(col.begin(), col.end(), [&](long x) { return x == col.front(); }))
      fail(-1, "input coloring is trivial");
    const int components = components_of(pd);

    const auto& traces = report.at("traces");
    if (traces.size() != 3) fail(-1, "expected three colour traces");
    long gstep = 0;
    std::vector<long> removed;
    for (size_t ti = 0; ti < traces.size(); ++ti) {
      const auto& tr = traces[ti];
      long target = tr.at("target").get<long>();
      if (ti < 3 && target != forbidden[ti]) fail(gstep, "colours removed out of order");
      auto declared = tr.at("already_removed").get<std::vector<long>>();
      if (declared != removed) fail(gstep, "already_removed does not match earlier traces");
      OracleMeasure prev = measure_of(pd, arcs, col, target);
      for (const auto& st : tr.at("steps")) {
        std::string before = diagram_hash(cur);
        if (st.at("diagram_hash_before").get<std::string>() != before) fail(gstep, "hash chain broken (before)");
        auto prev_edges = detail::edge_colors(arcs, col);
        auto prev_loops = detail::loop_colors(arcs, col);
        bool replay_ok = true;
        for (const auto& mj : st.at("moves")) {
          try {
            cur = apply_move(cur, move_from_json(mj));
          } catch (const Error& e) {
            fail(gstep, std::string("move does not replay: ") + e.what());
            replay_ok = false;
            break;
          }
        }
        if (st.at("moves").empty()) fail(gstep, "step without moves");
        if (!replay_ok) return v;
        if (st.at("diagram_hash_after").get<std::string>() != diagram_hash(cur))
          fail(gstep, "hash chain broken (after)");
        pd = PlainDiagram::from_json(to_json(cur));
        arcs = arcs_of(pd);
        if (components_of(pd) != components) fail(gstep, "component count changed");
        try {
          col = detail::read_assignment(st.at("coloring_after"), p, arcs.total);
        } catch (const Error& e) {
          fail(gstep, std::string("coloring_after unreadable: ") + e.what());
          return v;
        }
        if (auto x = first_bad_crossing(pd, arcs, col, p))
          fail(gstep, "Fox relation violated at crossing " + std::to_string(*x));
        // Moves are local: an edge that survives keeps its colour.
        auto now_edges = detail::edge_colors(arcs, col);
        for (auto& [e, c] : now_edges) {
          auto it = prev_edges.find(e);
          if (it != prev_edges.end() && it->second != c) {
            fail(gstep, "colour of surviving edge " + std::to_string(e) + " changed");
            break;
          }
        }
        auto now_loops = detail::loop_colors(arcs, col);
        if (now_loops.size() == prev_loops.size() && now_loops != prev_loops)
          fail(gstep, "free loop colour changed");
        for (long f : removed)
          if (std::count(col.begin(), col.end(), f)) fail(gstep, "removed colour " + std::to_string(f) + " reappeared");
        if (std::all_of(col.begin(), col.end(), [&](long x) { return x == col.front(); }))
          fail(gstep, "coloring became trivial");
        OracleMeasure m = measure_of(pd, arcs, col, target);
        if (!(m < prev)) fail(gstep, "measure did not decrease");
        if (st.contains("measure_after")) {
          auto ma = st.at("measure_after").get<std::vector<long>>();
          if (ma != std::vector<long>{m.mono, m.over, m.under}) fail(gstep, "recorded measure is wrong");
        }
        prev = m;
        ++gstep;
      }
      if (!(prev == OracleMeasure{})) fail(gstep, "target colour " + std::to_string(target) + " still in use");
      if (std::count(col.begin(), col.end(), target)) fail(gstep, "target colour " + std::to_string(target) + " still in palette");
      removed.push_back(target);
    }

    const auto& out = report.at("output");
    if (diagram_hash(diagram_from_json(out.at("diagram"))) != diagram_hash(cur))
      fail(-1, "output diagram differs from replay");
    std::vector<long> out_col;
    try {
      out_col = detail::read_assignment(out.at("coloring"), p, arcs.total);
    } catch (const Error& e) {
      fail(-1, std::string("output coloring unreadable: ") + e.what());
    }
    if (!out_col.empty() && out_col != col) fail(-1, "output coloring differs from last step");
    std::set<long> pal(col.begin(), col.end());
    auto declared = report.at("final_palette").get<std::vector<long>>();
    if (std::set<long>(declared.begin(), declared.end()) != pal) fail(-1, "final palette misreported");
    for (long f : forbidden)
      if (pal.count(f)) fail(-1, "final palette contains " + std::to_string(f));
  } catch (const std::exception& e) {
    fail(-1, std::string("malformed report: ") + e.what());
  }
  return v;
}

// Also checks that the report starts from the given diagram and coloring.
inline VerificationVerdict verify_report(const Diagram& input_d, const Coloring& input_c, const json& report) {
  VerificationVerdict v = verify_report(report);
  try {
    if (diagram_hash(diagram_from_json(report.at("input").at("diagram"))) != diagram_hash(input_d))
      v.failures.push_back({-1, "report input diagram differs"});
    if (report.at("input").at("coloring") != to_json(input_c))
      v.failures.push_back({-1, "report input coloring differs"});
  } catch (const std::exception& e) {
    v.failures.push_back({-1, std::string("malformed report: ") + e.what()});
  }
  return v;
}

}  // namespace foxcolor::oracle
