#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/construct.hpp"
#include "foxcolor/rules.hpp"

namespace foxcolor {

// Lexicographic termination measure for one colour.
struct Measure {
  long mono = 0, over = 0, under = 0;
  auto operator<=>(const Measure&) const = default;
  bool zero() const { return !mono && !over && !under; }
};

inline Measure measure(const Diagram& d, const EdgeColoring& c, Color t) {
  Measure m;
  for (auto& [x, cr] : d.crossings()) {
    auto cc = crossing_colors(d, c, x);
    if (cc.over == t) {
      ++m.over;
      if (cc.u1 == t && cc.u2 == t) ++m.mono;
    }
    m.under += (cc.u1 == t) + (cc.u2 == t);
  }
  return m;
}

inline Phase phase_of(const Measure& m) {
  return m.mono ? Phase::Mono : m.over ? Phase::Over : Phase::Under;
}

// A fully specified local rewrite. For covers, `x` is the covered crossing
// (and `x2` the second one for pair covers); for slides, the over strand of
// `x` travels along the under edge at `port` across `x2`.
struct Site {
  Phase phase = Phase::Mono;
  Make make = Make::Cover;
  CrossingId x = -1, x2 = -1;
  int port = -1;
  Dart helper{-1, 0};
  std::vector<Dart> hops;
  Dart entry{-1, 0};
  bool mirror = false;
  // Compound rewrite: cover `x` first, then slide along the under edge at
  // (x2, port); `from_far` slides from the crossing the cover created.
  bool compound = false;
  bool from_far = false;
};

inline json to_json(const Site& s) {
  static const char* makes[] = {"none", "cover", "slide", "reverse", "pair"};
  json j{{"phase", to_string(s.phase)}, {"construction", makes[static_cast<int>(s.make)]}, {"crossing", s.x}};
  if (s.x2 >= 0) j["crossing2"] = s.x2;
  if (s.port >= 0) j["port"] = s.port;
  if (s.helper.edge >= 0) j["helper_edge"] = s.helper.edge;
  if (!s.hops.empty()) j["hops"] = static_cast<int>(s.hops.size());
  if (s.make == Make::Slide || s.compound) j["mirror"] = s.mirror;
  if (s.compound) {
    j["construction"] = "cover+slide";
    j["slide_from"] = s.from_far ? "cover" : "anchor";
  }
  return j;
}

namespace detail {

inline Color over_color(const Diagram& d, const EdgeColoring& c, CrossingId x) {
  return crossing_colors(d, c, x).over;
}

inline bool touches(const Diagram& d, EdgeId e, CrossingId x) {
  if (x < 0) return false;
  const auto& en = d.ends(e);
  return en[0].crossing == x || en[1].crossing == x;
}

struct FaceMap {
  std::vector<std::vector<Dart>> faces;
  std::map<Dart, int> of;
  explicit FaceMap(const Diagram& d) : faces(foxcolor::faces(d)) {
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
      for (const Dart& dt : faces[i]) of[dt] = i;
  }
};

}  // namespace detail

// Cover candidates for crossing x: helpers on faces within `max_hops` face
// steps of a corner of x, nearest first. `avoid_x` edges are never crossed.
inline std::vector<Site> cover_sites(const Diagram& d, const detail::FaceMap& fm, CrossingId x, Phase ph,
                                     int max_hops, CrossingId second = -1, int second_port = -1) {
  const Crossing& cr = d.crossing(x);
  // Corner j lies between ports j and j+1; its face holds both edges.
  std::map<int, std::vector<Dart>> entries;  // face -> entry darts at x
  for (int j = 0; j < 4; ++j) {
    Dart in = dart_into(d, {x, j});
    Dart out = dart_from(d, {x, (j + 1) % 4});
    int f = fm.of.at(in);
    if (second >= 0) {
      // Pair covers must not enter through the edge joining the two crossings.
      if (cr.ports[j] != d.edge_at({second, second_port})) entries[f].push_back(in);
      if (cr.ports[(j + 1) % 4] != d.edge_at({second, second_port})) entries[f].push_back(out);
    } else {
      entries[f].push_back(in);
      entries[f].push_back(out);
    }
  }
  // BFS outwards; parent[g] = (face nearer x, dart on g crossing into it).
  std::map<int, std::pair<int, Dart>> parent;
  std::map<int, int> dist;  // faces reached so far
  std::vector<int> queue;
  for (auto& [f, es] : entries) {
    dist[f] = 0;
    queue.push_back(f);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    if (dist[f] >= max_hops) continue;
    for (const Dart& g : fm.faces[f]) {
      if (detail::touches(d, g.edge, x) || detail::touches(d, g.edge, second)) continue;
      int nb = fm.of.at(Dart{g.edge, 1 - g.end});
      if (dist.count(nb)) continue;
      dist[nb] = dist[f] + 1;
      // Moving from nb towards f crosses the reverse dart, which lies on nb.
      parent[nb] = {f, Dart{g.edge, 1 - g.end}};
      queue.push_back(nb);
    }
  }
  std::vector<Site> out;
  for (int f : queue) {
    std::vector<Dart> hops;
    int cur = f;
    while (dist[cur] > 0) {
      hops.push_back(parent[cur].second);
      cur = parent[cur].first;
    }
    std::set<EdgeId> used;
    for (auto& h : hops) used.insert(h.edge);
    for (const Dart& h : fm.faces[f]) {
      if (used.count(h.edge)) continue;
      for (const Dart& en : entries[cur]) {
        if (en.edge == h.edge || used.count(en.edge)) continue;
        Site s;
        s.phase = ph;
        s.make = second >= 0 ? Make::Pair : Make::Cover;
        s.x = x;
        s.x2 = second;
        s.port = second_port;
        s.helper = h;
        s.hops = hops;
        s.entry = en;
        out.push_back(s);
      }
    }
  }
  return out;
}

// Executes a site on a copy of the workspace.
inline Workspace realize(const Workspace& ws, const Site& s) {
  Workspace w = ws;
  if (s.compound) {
    cover(w, CoverPlan{s.helper, s.hops, s.entry, s.x, -1, -1});
    if (s.from_far) {
      Endpoint far = other_end(w.d, w.d.edge_at({s.x2, s.port}), {s.x2, s.port});
      slide(w, far.crossing, far.port, s.mirror);
    } else {
      slide(w, s.x2, s.port, s.mirror);
    }
  } else if (s.make == Make::Cover || s.make == Make::Pair) {
    int far_port = -1;
    if (s.make == Make::Pair) far_port = other_end(ws.d, ws.d.edge_at({s.x, s.port}), {s.x, s.port}).port;
    CoverPlan plan{s.helper, s.hops, s.entry, s.x, s.x2, far_port};
    cover(w, plan);
  } else {
    slide(w, s.x, s.port, s.mirror);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Matching sites against catalog rules.

// Parameter binding read off the diagram, or nullopt if the site does not
// have the rule's shape.
inline std::optional<Binding> bind(const RewriteRule& r, const Diagram& d, const EdgeColoring& c, const Site& s) {
  const long p = c.modulus.p;
  if (!r.executable() || r.phase != s.phase || !s.hops.empty() || s.compound) return std::nullopt;
  if (!d.has_crossing(s.x) || (s.x2 >= 0 && !d.has_crossing(s.x2))) return std::nullopt;
  Color t = target_color(r.target, p);
  Params q0{p, (p - 1) / 2, r.cls.present() && r.cls.matches(p) ? r.cls.l_of(p) : 0, 0, 0};
  auto solve_helper = [&](Color h) -> std::optional<long> {
    // E(a) = h with E affine in a
    const AffineExpr& e = r.make.helper;
    if (e.ca % p == 0) return std::nullopt;
    long rest = e.eval(q0);
    return mod((h - rest) * inverse_mod(mod(e.ca, p), p), p);
  };
  const Crossing& cr = d.crossing(s.x);
  auto cc = crossing_colors(d, c, s.x);
  switch (s.phase) {
    case Phase::Mono:
    case Phase::Over: {
      if (s.make != Make::Cover || r.make.kind != Make::Cover) return std::nullopt;
      if (!d.has_edge(s.helper.edge)) return std::nullopt;
      if (s.phase == Phase::Mono && !(cc.over == t && cc.u1 == t && cc.u2 == t)) return std::nullopt;
      if (s.phase == Phase::Over && cc.over != t) return std::nullopt;
      Color h = c.edge.at(s.helper.edge);
      if (s.phase == Phase::Over) {
        auto u = cr.under_ports();
        if (s.helper.edge != cr.ports[u[0]] && s.helper.edge != cr.ports[u[1]]) return std::nullopt;
      }
      auto a = solve_helper(h);
      if (!a) return std::nullopt;
      return Binding{*a, std::nullopt};
    }
    case Phase::Under: {
      if (d.is_over({s.x, s.port})) return std::nullopt;
      EdgeId e = cr.ports[s.port];
      if (c.edge.at(e) != t) return std::nullopt;
      Color ox = cc.over, ox2 = detail::over_color(d, c, s.x2);
      if (s.make == Make::Slide) {
        if (r.make.kind == Make::Slide) return Binding{ox, ox2};
        if (r.make.kind == Make::Reverse) return Binding{ox2, ox};
        return std::nullopt;
      }
      if (s.make == Make::Pair && r.make.kind == Make::Pair) {
        if (s.helper.edge != cr.ports[(s.port + 2) % 4]) return std::nullopt;
        Binding b{ox, ox2};
        Params q = params_for(r, p, b);
        if (r.make.helper.eval(q) != c.edge.at(s.helper.edge)) return std::nullopt;
        return b;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline bool applicable(const RewriteRule& r, const Diagram& d, const EdgeColoring& c, const Site& s) {
  try {
    auto b = bind(r, d, c, s);
    return b && applicable(r, c.modulus.p, *b);
  } catch (const Error&) {
    return false;
  }
}

struct Applied {
  Diagram d;
  EdgeColoring c;
  std::vector<Move> moves;
};

// Runs the rule's construction at the site. Every colour that appears is
// checked against the rule's arc labels.
inline Applied apply(const RewriteRule& r, const Diagram& d, const EdgeColoring& c, const Site& s,
                     const std::vector<Color>& avoid = {}) {
  auto b = bind(r, d, c, s);
  if (!b || !applicable(r, c.modulus.p, *b))
    throw Error(ErrorCode::GuardViolated, "rule " + r.id + " does not apply at this site");
  Workspace w = realize(Workspace{d, c, {}, avoid}, s);
  Params q = params_for(r, c.modulus.p, *b);
  std::set<Color> allowed = palette(c);
  for (const auto& e : r.fresh) allowed.insert(static_cast<Color>(e.eval(q)));
  for (const auto& lab : r.labels) allowed.insert(static_cast<Color>(AffineExpr::parse(lab).eval(q)));
  for (Color x : palette(w.c))
    if (!allowed.count(x))
      throw Error(ErrorCode::GuardViolated, "rule " + r.id + " produced unlabelled colour " + std::to_string(x));
  return {std::move(w.d), std::move(w.c), std::move(w.moves)};
}

// ---------------------------------------------------------------------------
// Engine.

struct Step {
  std::string rule;
  Site site;
  Binding binding;
  std::vector<Move> moves;
  std::string hash_before, hash_after;
  Coloring coloring_after;
  Measure measure_after;
};

struct Trace {
  Color target = 0;
  std::vector<Color> already_removed;
  Measure initial;
  std::vector<Step> steps;
};

struct EliminationOptions {
  int max_hops = 2;
  long max_steps = 0;  // 0: crossings x p
  bool staged = true;  // allow the two-stage push-then-rewrite fallback
  long staged_budget = 32;  // R2 pushes tried per step by the staged fallback
  // Called with the current state before SearchExhausted is thrown.
  std::function<void(const Diagram&, const EdgeColoring&)> on_stuck;
};

struct ColorResult {
  Diagram d;
  EdgeColoring c;
  Trace trace;
};

namespace detail {

inline std::vector<Site> sites_for(const Diagram& d, const EdgeColoring& c, Color t, Phase ph, int max_hops,
                                   const std::set<CrossingId>* only = nullptr) {
  FaceMap fm(d);
  std::vector<Site> out;
  auto add = [&](std::vector<Site> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (ph != Phase::Under) {
    for (auto& [x, cr] : d.crossings()) {
      if (only && !only->count(x)) continue;
      auto cc = crossing_colors(d, c, x);
      bool mono = cc.over == t && cc.u1 == t && cc.u2 == t;
      if ((ph == Phase::Mono && mono) || (ph == Phase::Over && cc.over == t && !mono))
        add(cover_sites(d, fm, x, ph, max_hops));
    }
    return out;
  }
  for (auto& [x, cr] : d.crossings()) {
    if (only && !only->count(x)) continue;
    for (int port : cr.under_ports()) {
      EdgeId e = cr.ports[port];
      if (c.edge.at(e) != t) continue;
      Endpoint far = other_end(d, e, {x, port});
      if (far.crossing == x || d.is_over(far)) continue;
      for (bool mirror : {false, true}) {
        Site s;
        s.phase = Phase::Under;
        s.make = Make::Slide;
        s.x = x;
        s.x2 = far.crossing;
        s.port = port;
        s.mirror = mirror;
        out.push_back(s);
      }
      for (auto& s : cover_sites(d, fm, x, Phase::Under, max_hops, far.crossing, far.port)) {
        // cover_sites records the far port; the engine needs the near one
        s.port = port;
        out.push_back(s);
      }
    }
  }
  return out;
}

// Cover one end of each target under-edge with a nearby strand, then slide.
inline std::vector<Site> compound_sites(const Diagram& d, const EdgeColoring& c, Color t, int max_hops,
                                        const std::set<CrossingId>* only = nullptr) {
  FaceMap fm(d);
  std::vector<Site> out;
  for (auto& [x, cr] : d.crossings()) {
    if (only && !only->count(x)) continue;
    for (int port : cr.under_ports()) {
      EdgeId e = cr.ports[port];
      if (c.edge.at(e) != t) continue;
      Endpoint far = other_end(d, e, {x, port});
      if (far.crossing == x || d.is_over(far)) continue;
      for (auto s : cover_sites(d, fm, x, Phase::Under, max_hops)) {
        s.compound = true;
        s.x2 = far.crossing;
        s.port = far.port;
        for (bool from_far : {true, false})
          for (bool mirror : {false, true}) {
            s.from_far = from_far;
            s.mirror = mirror;
            out.push_back(s);
          }
      }
    }
  }
  return out;
}

inline Applied run_generic(const Diagram& d, const EdgeColoring& c, const Site& s, const std::vector<Color>& avoid) {
  Workspace w = realize(Workspace{d, c, {}, avoid}, s);
  return {std::move(w.d), std::move(w.c), std::move(w.moves)};
}

}  // namespace detail

inline ColorResult eliminate_color(const Diagram& d0, const EdgeColoring& c0, Color target,
                                   const std::vector<Color>& already_removed,
                                   const EliminationOptions& opt = {}) {
  const Modulus mod_ = c0.modulus;
  mod_.require_elimination_range();
  if (is_trivial(to_arc_coloring(d0, c0))) throw Error(ErrorCode::TrivialColoring, "coloring is trivial");
  for (Color f : already_removed)
    if (palette(c0).count(f)) throw Error(ErrorCode::InvalidInput, "input uses removed colour " + std::to_string(f));
  Target tkind;
  if (target == mod_.forbidden(0)) tkind = Target::TwoK;
  else if (target == mod_.forbidden(1)) tkind = Target::TwoKMinus1;
  else if (target == mod_.forbidden(2)) tkind = Target::K;
  else throw Error(ErrorCode::InvalidInput, "target must be 2k, 2k-1 or k");

  ColorResult res{d0, c0, {target, already_removed, measure(d0, c0, target), {}}};
  long bound = opt.max_steps ? opt.max_steps : std::max<long>(1, d0.crossing_count()) * mod_.p;
  std::vector<Color> avoid = already_removed;

  while (true) {
    Measure m = measure(res.d, res.c, target);
    if (m.zero()) {
      if (std::count(res.c.loops.begin(), res.c.loops.end(), target))
        throw Error(ErrorCode::SearchExhausted, "an unlinked circle carries the target colour");
      break;
    }
    if (static_cast<long>(res.trace.steps.size()) >= bound)
      throw Error(ErrorCode::SearchExhausted, "step bound " + std::to_string(bound) + " reached");
    Phase ph = phase_of(m);
    auto sites = detail::sites_for(res.d, res.c, target, ph, opt.max_hops);

    // Pre-filter covers whose reflected colours would hit a removed colour.
    auto prefilter = [&](const Diagram& d, const EdgeColoring& c, const Site& s) {
      if (s.make != Make::Cover && s.make != Make::Pair) return true;
      long h = c.edge.at(s.helper.edge);
      std::vector<CrossingId> xs{s.x};
      if (s.x2 >= 0 && !s.compound) xs.push_back(s.x2);
      for (CrossingId x : xs)
        for (EdgeId e : d.crossing(x).ports)
          for (Color f : avoid)
            if (mod_.reduce(2 * h - c.edge.at(e)) == f) return false;
      for (const Dart& g : s.hops)
        for (Color f : avoid)
          if (mod_.reduce(2 * h - c.edge.at(g.edge)) == f) return false;
      return h != target;
    };

    std::optional<Step> chosen;
    std::optional<Applied> result;
    // Runs s (or rule r at s) on (d, c), which is the current state after the
    // moves in `prep`.
    auto attempt = [&](const Diagram& d, const EdgeColoring& c, const std::vector<Move>& prep, const Site& s,
                       const RewriteRule* r) -> bool {
      try {
        // The workspace rejects any move that lets a removed colour appear.
        Applied a = r ? apply(*r, d, c, s, avoid) : detail::run_generic(d, c, s, avoid);
        if (!(measure(a.d, a.c, target) < m)) return false;
        if (!is_valid(a.d, a.c)) return false;
        Step st;
        st.rule = r ? r->id
                    : s.compound            ? "generic:cover+slide"
                    : s.make == Make::Slide ? "generic:slide"
                    : s.make == Make::Pair  ? "generic:pair"
                                            : "generic:cover";
        if (!prep.empty()) st.rule = "generic:push+" + st.rule.substr(st.rule.find(':') + 1);
        st.site = s;
        if (r) st.binding = *bind(*r, d, c, s);
        st.moves = prep;
        st.moves.insert(st.moves.end(), a.moves.begin(), a.moves.end());
        a.moves = st.moves;
        result = std::move(a);
        chosen = std::move(st);
        return true;
      } catch (const Error&) {
        return false;
      }
    };

    for (const Site& s : sites) {
      if (!prefilter(res.d, res.c, s)) continue;
      // Rule first: the first catalog entry that binds with passing guards.
      const RewriteRule* match = nullptr;
      for (const auto& r : catalog().rules) {
        if (!r.executable() || r.target != tkind) continue;
        if (applicable(r, res.d, res.c, s)) {
          match = &r;
          break;
        }
      }
      if (match && attempt(res.d, res.c, {}, s, match)) break;
    }
    if (!chosen) {
      for (const Site& s : sites) {
        if (!prefilter(res.d, res.c, s)) continue;
        if (attempt(res.d, res.c, {}, s, nullptr)) break;
      }
    }
    if (!chosen && ph == Phase::Under) {
      for (const Site& s : detail::compound_sites(res.d, res.c, target, opt.max_hops)) {
        if (!prefilter(res.d, res.c, s)) continue;
        if (attempt(res.d, res.c, {}, s, nullptr)) break;
      }
    }
    // Staged fallback: the colour a cover needs may be missing near x. One R2
    // push in a face at x makes a short segment of colour 2h - y, which the
    // second stage can then use.
    long staged_trials = 0;
    if (!chosen && opt.staged) {
      std::set<CrossingId> anchors;
      for (const Site& s : sites) anchors.insert(s.x);
      detail::FaceMap fm(res.d);
      for (CrossingId x : anchors) {
        std::set<int> near;
        for (int j = 0; j < 4; ++j) near.insert(fm.of.at(dart_into(res.d, {x, j})));
        std::set<Color> local;  // colours already on the faces at x
        for (int f : near)
          for (const Dart& g : fm.faces[f]) local.insert(res.c.edge.at(g.edge));
        for (int f : near) {
          const auto& face = fm.faces[f];
          for (const Dart& mv : face)
            for (const Dart& tg : face) {
              if (mv.edge == tg.edge) continue;
              for (bool over : {true, false}) {
                Color h = res.c.edge.at(mv.edge), y = res.c.edge.at(tg.edge);
                Color made = over ? mod_.reduce(2L * h - y) : mod_.reduce(2L * y - h);
                if (made == target || std::count(avoid.begin(), avoid.end(), made) || local.count(made))
                  continue;
                if (++staged_trials > opt.staged_budget) break;
                Workspace w{res.d, res.c, {}, avoid};
                MoveOutcome out;
                try {
                  out = w.apply(Move::r2_push(mv, tg, over));
                } catch (const Error&) {
                  continue;
                }
                std::set<CrossingId> only{x};
                only.insert(out.created_crossings.begin(), out.created_crossings.end());
                Measure mw = measure(w.d, w.c, target);
                Phase pw = phase_of(mw);
                for (const Site& s : detail::sites_for(w.d, w.c, target, pw, opt.max_hops, &only)) {
                  if (!prefilter(w.d, w.c, s)) continue;
                  if (attempt(w.d, w.c, w.moves, s, nullptr)) break;
                }
                if (!chosen && pw == Phase::Under)
                  for (const Site& s : detail::compound_sites(w.d, w.c, target, opt.max_hops, &only)) {
                    if (!prefilter(w.d, w.c, s)) continue;
                    if (attempt(w.d, w.c, w.moves, s, nullptr)) break;
                  }
                if (chosen) break;
              }
              if (chosen) break;
            }
          if (chosen) break;
        }
        if (chosen) break;
      }
    }
    if (!chosen && opt.on_stuck) opt.on_stuck(res.d, res.c);
    if (!chosen)
      throw Error(ErrorCode::SearchExhausted, std::string("no measure-decreasing rewrite in ") + to_string(ph) +
                                                  " phase for colour " + std::to_string(target));
    chosen->hash_before = diagram_hash(res.d);
    res.d = std::move(result->d);
    res.c = std::move(result->c);
    chosen->hash_after = diagram_hash(res.d);
    chosen->coloring_after = to_arc_coloring(res.d, res.c);
    chosen->measure_after = measure(res.d, res.c, target);
    res.trace.steps.push_back(std::move(*chosen));
  }
  return res;
}

inline json to_json(const Step& s) {
  json moves = json::array();
  for (const Move& m : s.moves) moves.push_back(to_json(m));
  json binding = to_json(s.site);
  binding["a"] = s.binding.a;
  if (s.binding.b) binding["b"] = *s.binding.b;
  return json{{"ruleId", s.rule},
              {"binding", binding},
              {"moves", moves},
              {"diagram_hash_before", s.hash_before},
              {"diagram_hash_after", s.hash_after},
              {"coloring_after", to_json(s.coloring_after)},
              {"measure_after", {s.measure_after.mono, s.measure_after.over, s.measure_after.under}}};
}

struct EliminationReport {
  Diagram input_d, output_d;
  Coloring input_c, output_c;
  std::vector<Trace> traces;

  std::set<Color> final_palette() const { return palette(output_c); }

  long total_steps() const {
    long n = 0;
    for (auto& t : traces) n += static_cast<long>(t.steps.size());
    return n;
  }

  json to_json() const {
    json tr = json::array();
    long rule_steps = 0;
    for (const auto& t : traces) {
      json steps = json::array();
      for (const auto& s : t.steps) {
        steps.push_back(foxcolor::to_json(s));
        rule_steps += s.rule.rfind("generic:", 0) != 0;
      }
      tr.push_back({{"target", t.target},
                    {"already_removed", t.already_removed},
                    {"measure_before", {t.initial.mono, t.initial.over, t.initial.under}},
                    {"steps", steps}});
    }
    auto pal = final_palette();
    return json{{"schema", "trace-v1"},
                {"p", input_c.modulus.p},
                {"input", {{"diagram", foxcolor::to_json(input_d)}, {"coloring", foxcolor::to_json(input_c)}}},
                {"output", {{"diagram", foxcolor::to_json(output_d)}, {"coloring", foxcolor::to_json(output_c)}}},
                {"traces", tr},
                {"final_palette", std::vector<Color>(pal.begin(), pal.end())},
                {"stats",
                 {{"steps", total_steps()},
                  {"rule_steps", rule_steps},
                  {"generic_steps", total_steps() - rule_steps},
                  {"crossings_in", input_d.crossing_count()},
                  {"crossings_out", output_d.crossing_count()},
                  {"crossings_added",
                   static_cast<long>(output_d.crossing_count()) - static_cast<long>(input_d.crossing_count())}}}};
  }
};

inline EliminationReport eliminate_all(const Diagram& d, const Coloring& c, const EliminationOptions& opt = {}) {
  c.modulus.require_elimination_range();
  if (!is_valid(d, c)) throw Error(ErrorCode::InvalidInput, "input coloring violates the Fox relation");
  if (is_trivial(c)) throw Error(ErrorCode::TrivialColoring, "coloring is trivial");
  EliminationReport rep{d, d, c, c, {}};
  Diagram cur = d;
  EdgeColoring ec = to_edge_coloring(d, c);
  std::vector<Color> removed;
  for (int i = 0; i < 3; ++i) {
    Color t = c.modulus.forbidden(i);
    ColorResult r = eliminate_color(cur, ec, t, removed, opt);
    cur = std::move(r.d);
    ec = std::move(r.c);
    rep.traces.push_back(std::move(r.trace));
    removed.push_back(t);
  }
  rep.output_d = cur;
  rep.output_c = to_arc_coloring(cur, ec);
  return rep;
}

}  // namespace foxcolor
