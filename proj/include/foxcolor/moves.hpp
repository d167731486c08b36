#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "foxcolor/diagram.hpp"

namespace foxcolor {

enum class MoveType { R1Add, R1Remove, R2Push, R2Pull, R3Slide };

inline const char* to_string(MoveType t) {
  switch (t) {
    case MoveType::R1Add: return "R1_add";
    case MoveType::R1Remove: return "R1_remove";
    case MoveType::R2Push: return "R2_push";
    case MoveType::R2Pull: return "R2_pull";
    case MoveType::R3Slide: return "R3_slide";
  }
  return "?";
}

// Anchors per type:
//   R1_add    edge/end: the kink goes into the face walking that dart; over:
//             the strand entering first passes over.
//   R1_remove crossing: a crossing carrying a one-edge loop.
//   R2_push   edge/end: moving dart; target/target_end: a dart of the same
//             face; over: the moving strand passes over.
//   R2_pull   crossing, crossing2: the two corners of a bigon face.
//   R3_slide  edge/end: a dart of a triangular face.
struct Move {
  MoveType type = MoveType::R1Add;
  EdgeId edge = -1;
  int end = 0;
  EdgeId target = -1;
  int target_end = 0;
  bool over = true;
  CrossingId crossing = -1;
  CrossingId crossing2 = -1;

  bool operator==(const Move&) const = default;

  static Move r1_add(Dart d, bool over) { Move m; m.type = MoveType::R1Add; m.edge = d.edge; m.end = d.end; m.over = over; return m; }
  static Move r1_remove(CrossingId x) { Move m; m.type = MoveType::R1Remove; m.crossing = x; return m; }
  static Move r2_push(Dart moving, Dart target, bool over) {
    Move m;
    m.type = MoveType::R2Push;
    m.edge = moving.edge;
    m.end = moving.end;
    m.target = target.edge;
    m.target_end = target.end;
    m.over = over;
    return m;
  }
  static Move r2_pull(CrossingId u, CrossingId v) { Move m; m.type = MoveType::R2Pull; m.crossing = u; m.crossing2 = v; return m; }
  static Move r3_slide(Dart d) { Move m; m.type = MoveType::R3Slide; m.edge = d.edge; m.end = d.end; return m; }
};

struct MoveOutcome {
  Diagram diagram;
  std::vector<CrossingId> created_crossings;
  std::vector<EdgeId> created_edges;
  // New edge that continues the colour of an old edge on the same strand.
  std::vector<std::pair<EdgeId, EdgeId>> inherits;
  // For each free loop created: an old edge lying on it.
  std::vector<EdgeId> new_loops;
};

namespace detail {

inline Error not_applicable(const std::string& why) { return Error(ErrorCode::MoveNotApplicable, why); }

inline void set_port(Diagram& d, Endpoint ep, EdgeId e) {
  Crossing c = d.crossing(ep.crossing);
  c.ports[ep.port] = e;
  d.put_crossing(c);
}

// Deletes the crossings in `doomed`; strands run straight through them and
// are re-joined into fresh edges. Closed strands left over become free loops.
inline void splice_out(Diagram& d, const std::set<CrossingId>& doomed, MoveOutcome& out) {
  const Diagram old = d;
  std::set<Endpoint> visited;
  std::vector<std::pair<Endpoint, Endpoint>> joins;
  std::vector<EdgeId> first_edge;
  for (auto& [id, c] : old.crossings()) {
    if (doomed.count(id)) continue;
    for (int p = 0; p < 4; ++p) {
      Endpoint P{id, p};
      if (visited.count(P)) continue;
      EdgeId e = c.ports[p];
      Endpoint o = old.ends(e)[1 - old.end_index(e, P)];
      if (!doomed.count(o.crossing)) continue;
      visited.insert(P);
      Endpoint cur = o;
      while (doomed.count(cur.crossing)) {
        visited.insert(cur);
        Endpoint through{cur.crossing, (cur.port + 2) % 4};
        visited.insert(through);
        EdgeId f = old.edge_at(through);
        cur = old.ends(f)[1 - old.end_index(f, through)];
      }
      visited.insert(cur);
      joins.push_back({P, cur});
      first_edge.push_back(e);
    }
  }
  int loops = 0;
  for (CrossingId x : doomed) {
    for (int p = 0; p < 4; ++p) {
      Endpoint s{x, p};
      if (visited.count(s)) continue;
      ++loops;
      out.new_loops.push_back(old.edge_at(s));
      Endpoint cur = s;
      do {
        visited.insert(cur);
        Endpoint through{cur.crossing, (cur.port + 2) % 4};
        visited.insert(through);
        EdgeId f = old.edge_at(through);
        cur = old.ends(f)[1 - old.end_index(f, through)];
      } while (!visited.count(cur));
    }
  }
  for (CrossingId x : doomed) d.erase_crossing(x);
  for (std::size_t i = 0; i < joins.size(); ++i) {
    EdgeId ne = d.fresh_edge();
    set_port(d, joins[i].first, ne);
    set_port(d, joins[i].second, ne);
    out.created_edges.push_back(ne);
    out.inherits.push_back({ne, first_edge[i]});
  }
  d.set_free_loops(d.free_loops() + loops);
  d.reindex();
}

inline MoveOutcome r1_add(const Diagram& in, const Move& m) {
  if (!in.has_edge(m.edge)) throw Error(ErrorCode::AnchorNotFound, "R1_add: no edge " + std::to_string(m.edge));
  if (m.end != 0 && m.end != 1) throw Error(ErrorCode::AnchorNotFound, "R1_add: bad end");
  MoveOutcome out{in, {}, {}, {}, {}};
  Diagram& d = out.diagram;
  Endpoint P = in.ends(m.edge)[m.end], Q = in.ends(m.edge)[1 - m.end];
  Crossing z;
  z.id = d.fresh_crossing();
  EdgeId a = d.fresh_edge(), loop = d.fresh_edge(), b = d.fresh_edge();
  z.ports = {a, loop, loop, b};
  z.over_parity = m.over ? 0 : 1;
  d.put_crossing(z);
  set_port(d, P, a);
  set_port(d, Q, b);
  d.reindex();
  out.created_crossings = {z.id};
  out.created_edges = {a, loop, b};
  out.inherits = {{a, m.edge}, {loop, m.edge}, {b, m.edge}};
  return out;
}

inline MoveOutcome r1_remove(const Diagram& in, const Move& m) {
  if (!in.has_crossing(m.crossing)) throw Error(ErrorCode::AnchorNotFound, "R1_remove: no crossing");
  const Crossing& z = in.crossing(m.crossing);
  bool kink = false;
  for (int i = 0; i < 4; ++i) {
    EdgeId e = z.ports[i];
    if (e == z.ports[(i + 1) % 4]) {
      const auto& en = in.ends(e);
      if (en[0].crossing == z.id && en[1].crossing == z.id) kink = true;
    }
  }
  if (!kink) throw not_applicable("R1_remove: crossing " + std::to_string(z.id) + " has no kink loop");
  MoveOutcome out{in, {}, {}, {}, {}};
  splice_out(out.diagram, {z.id}, out);
  return out;
}

inline MoveOutcome r2_push(const Diagram& in, const Move& m) {
  if (!in.has_edge(m.edge) || !in.has_edge(m.target))
    throw Error(ErrorCode::AnchorNotFound, "R2_push: missing edge");
  if (m.edge == m.target) throw not_applicable("R2_push: moving edge equals target");
  Dart d1{m.edge, m.end}, d2{m.target, m.target_end};
  bool found = false;
  for (const Dart& x : face_of(in, d1))
    if (x == d2) found = true;
  if (!found) throw not_applicable("R2_push: target dart not on the moving dart's face");

  MoveOutcome out{in, {}, {}, {}, {}};
  Diagram& d = out.diagram;
  Endpoint A1 = in.dart_start(d1), B1 = in.dart_stop(d1);
  Endpoint A2 = in.dart_start(d2), B2 = in.dart_stop(d2);
  Crossing u, v;
  u.id = d.fresh_crossing();
  v.id = d.fresh_crossing();
  EdgeId e1a = d.fresh_edge(), m1 = d.fresh_edge(), e1b = d.fresh_edge();
  EdgeId e2a = d.fresh_edge(), m2 = d.fresh_edge(), e2b = d.fresh_edge();
  u.ports = {e1a, e2b, m1, m2};
  v.ports = {e1b, m2, m1, e2a};
  u.over_parity = v.over_parity = m.over ? 0 : 1;
  d.put_crossing(u);
  d.put_crossing(v);
  set_port(d, A1, e1a);
  set_port(d, B1, e1b);
  set_port(d, A2, e2a);
  set_port(d, B2, e2b);
  d.reindex();
  out.created_crossings = {u.id, v.id};
  out.created_edges = {e1a, m1, e1b, e2a, m2, e2b};
  out.inherits = {{e1a, m.edge}, {e1b, m.edge}, {e2a, m.target}, {e2b, m.target}};
  return out;
}

inline MoveOutcome r2_pull(const Diagram& in, const Move& m) {
  if (!in.has_crossing(m.crossing) || !in.has_crossing(m.crossing2))
    throw Error(ErrorCode::AnchorNotFound, "R2_pull: missing crossing");
  CrossingId u = m.crossing, v = m.crossing2;
  if (u == v) throw not_applicable("R2_pull: needs two crossings");
  const Crossing& cu = in.crossing(u);
  const Crossing& cv = in.crossing(v);
  bool ok = false;
  for (int i = 0; i < 4 && !ok; ++i) {
    EdgeId e = cu.ports[i];
    Endpoint o = in.ends(e)[1 - in.end_index(e, {u, i})];
    if (o.crossing != v) continue;
    int j = o.port;
    EdgeId f = cv.ports[(j + 1) % 4];
    Endpoint back = in.ends(f)[1 - in.end_index(f, {v, (j + 1) % 4})];
    if (back != Endpoint{u, (i + 3) % 4}) continue;
    if (cu.is_over(i) == cv.is_over(j)) ok = true;
  }
  if (!ok) throw not_applicable("R2_pull: crossings do not bound a removable bigon");
  MoveOutcome out{in, {}, {}, {}, {}};
  splice_out(out.diagram, {u, v}, out);
  return out;
}

inline MoveOutcome r3_slide(const Diagram& in, const Move& m) {
  if (!in.has_edge(m.edge)) throw Error(ErrorCode::AnchorNotFound, "R3_slide: no edge");
  auto tri = face_of(in, Dart{m.edge, m.end});
  if (tri.size() != 3) throw not_applicable("R3_slide: face is not a triangle");
  CrossingId V[3];
  int r[3];
  for (int t = 0; t < 3; ++t) {
    V[t] = in.dart_start(tri[t]).crossing;
    r[t] = in.dart_stop(tri[(t + 2) % 3]).port;
  }
  if (V[0] == V[1] || V[1] == V[2] || V[0] == V[2]) throw not_applicable("R3_slide: triangle corners coincide");

  auto at = [](CrossingId x, int p) { return Endpoint{x, ((p % 4) + 4) % 4}; };
  Endpoint B[6] = {at(V[0], r[0] + 2), at(V[0], r[0] + 3), at(V[2], r[2] + 2),
                   at(V[2], r[2] + 3), at(V[1], r[1] + 2), at(V[1], r[1] + 3)};
  bool o01 = in.is_over(B[0]);  // chord 0 over chord 1 at V0
  bool o02 = in.is_over(B[3]);  // chord 0 over chord 2 at V2
  bool o12 = in.is_over(B[4]);  // chord 1 over chord 2 at V1
  if ((o01 && o12 && !o02) || (!o01 && !o12 && o02))
    throw not_applicable("R3_slide: cyclic over-relation (not a Reidemeister III triangle)");

  EdgeId outer[6];
  for (int i = 0; i < 6; ++i) outer[i] = in.edge_at(B[i]);

  MoveOutcome out{in, {}, {}, {}, {}};
  Diagram& d = out.diagram;
  EdgeId i0 = d.fresh_edge(), i1 = d.fresh_edge(), i2 = d.fresh_edge();
  Crossing c01, c02, c12;
  c01.id = V[0];
  c02.id = V[2];
  c12.id = V[1];
  c01.ports = {i0, i1, outer[3], outer[4]};
  c02.ports = {outer[0], i2, i0, outer[5]};
  c12.ports = {outer[1], outer[2], i1, i2};
  c01.over_parity = o01 ? 0 : 1;
  c02.over_parity = o02 ? 0 : 1;
  c12.over_parity = o12 ? 0 : 1;
  d.put_crossing(c01);
  d.put_crossing(c02);
  d.put_crossing(c12);
  d.reindex();
  out.created_edges = {i0, i1, i2};
  return out;
}

}  // namespace detail

inline MoveOutcome apply_move_detailed(const Diagram& d, const Move& m) {
  switch (m.type) {
    case MoveType::R1Add: return detail::r1_add(d, m);
    case MoveType::R1Remove: return detail::r1_remove(d, m);
    case MoveType::R2Push: return detail::r2_push(d, m);
    case MoveType::R2Pull: return detail::r2_pull(d, m);
    case MoveType::R3Slide: return detail::r3_slide(d, m);
  }
  throw Error(ErrorCode::MoveNotApplicable, "unknown move");
}

inline Diagram apply_move(const Diagram& d, const Move& m) { return apply_move_detailed(d, m).diagram; }

inline json to_json(const Move& m) {
  json j{{"type", to_string(m.type)}};
  switch (m.type) {
    case MoveType::R1Add: j["edge"] = m.edge; j["end"] = m.end; j["over"] = m.over; break;
    case MoveType::R1Remove: j["crossing"] = m.crossing; break;
    case MoveType::R2Push:
      j["edge"] = m.edge; j["end"] = m.end; j["target"] = m.target; j["target_end"] = m.target_end; j["over"] = m.over;
      break;
    case MoveType::R2Pull: j["crossings"] = {m.crossing, m.crossing2}; break;
    case MoveType::R3Slide: j["edge"] = m.edge; j["end"] = m.end; break;
  }
  return j;
}

inline Move move_from_json(const json& j) {
  std::string t = j.at("type").get<std::string>();
  Move m;
  if (t == "R1_add") {
    m = Move::r1_add({j.at("edge").get<int>(), j.at("end").get<int>()}, j.at("over").get<bool>());
  } else if (t == "R1_remove") {
    m = Move::r1_remove(j.at("crossing").get<int>());
  } else if (t == "R2_push") {
    m = Move::r2_push({j.at("edge").get<int>(), j.at("end").get<int>()},
                      {j.at("target").get<int>(), j.at("target_end").get<int>()}, j.at("over").get<bool>());
  } else if (t == "R2_pull") {
    auto c = j.at("crossings").get<std::vector<int>>();
    if (c.size() != 2) throw Error(ErrorCode::InvalidInput, "R2_pull needs two crossings");
    m = Move::r2_pull(c[0], c[1]);
  } else if (t == "R3_slide") {
    m = Move::r3_slide({j.at("edge").get<int>(), j.at("end").get<int>()});
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown move type " + t);
  }
  return m;
}

}  // namespace foxcolor
