#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/moves.hpp"

// Composite detours built from R2 and R3 moves.
//
// cover: a strand s is pushed across one edge of a crossing X and then slid
// over X with one more R2 and an R3, so that s passes over a small disk
// containing X. Inside the disk every colour x turns into 2s - x.
//
// slide: the over strand at one end of a short under-arc is pushed along that
// arc and across the crossing at the other end; the bigon left behind is
// pulled away, taking the arc with it.

namespace foxcolor {

struct Workspace {
  Diagram d;
  EdgeColoring c;
  std::vector<Move> moves;
  std::vector<Color> avoid;  // colours that may not appear after any move

  MoveOutcome apply(const Move& m) {
    MoveOutcome out = apply_move_detailed(d, m);
    EdgeColoring next = transport(c, out);
    for (Color x : avoid) {
      bool hit = std::find(next.loops.begin(), next.loops.end(), x) != next.loops.end();
      for (auto& [e, col] : next.edge) hit = hit || col == x;
      if (hit) throw Error(ErrorCode::GuardViolated, "move would introduce removed colour " + std::to_string(x));
    }
    c = std::move(next);
    d = out.diagram;
    moves.push_back(m);
    return out;
  }

  Color color(EdgeId e) const { return c.edge.at(e); }
};

inline Endpoint other_end(const Diagram& d, EdgeId e, Endpoint here) {
  return d.ends(e)[1 - d.end_index(e, here)];
}

inline Dart dart_from(const Diagram& d, Endpoint ep) {
  EdgeId e = d.edge_at(ep);
  return Dart{e, d.end_index(e, ep)};
}

inline Dart dart_into(const Diagram& d, Endpoint ep) {
  EdgeId e = d.edge_at(ep);
  return Dart{e, 1 - d.end_index(e, ep)};
}

// Slides the over strand at w across the crossing Y at the far end of
// `piece` (an edge passing under at w). Returns false if neither corner works.
inline bool absorb(Workspace& ws, CrossingId w, EdgeId piece) {
  const Diagram& d = ws.d;
  const auto& en = d.ends(piece);
  Endpoint at_w = en[0].crossing == w ? en[0] : en[1];
  if (at_w.crossing != w || d.is_over(at_w)) return false;
  Endpoint at_y = other_end(d, piece, at_w);
  CrossingId y = at_y.crossing;
  if (y == w) return false;
  for (int side = 0; side < 2; ++side) {
    Workspace trial = ws;
    const Diagram& t = trial.d;
    try {
      if (side == 0) {
        Endpoint gport{w, (at_w.port + 3) % 4};
        Endpoint eport{y, (at_y.port + 1) % 4};
        if (t.edge_at(gport) == t.edge_at(eport) || t.edge_at(eport) == piece) continue;
        trial.apply(Move::r2_push(dart_into(t, gport), dart_from(t, eport), true));
        trial.apply(Move::r3_slide(Dart{piece, trial.d.end_index(piece, at_w)}));
      } else {
        Endpoint gport{w, (at_w.port + 1) % 4};
        Endpoint eport{y, (at_y.port + 3) % 4};
        if (t.edge_at(gport) == t.edge_at(eport) || t.edge_at(eport) == piece) continue;
        trial.apply(Move::r2_push(dart_from(t, gport), dart_into(t, eport), true));
        trial.apply(Move::r3_slide(Dart{piece, trial.d.end_index(piece, at_y)}));
      }
    } catch (const Error&) {
      continue;
    }
    ws = std::move(trial);
    return true;
  }
  return false;
}

// Pushes the moving dart over `target` (same face, moving strand over) and
// returns the new crossing next to `x` on the target edge with the edge
// piece joining them.
struct Entry {
  CrossingId w;
  EdgeId piece;
};

inline Entry enter(Workspace& ws, Dart moving, Dart target, CrossingId x) {
  Endpoint a2 = ws.d.dart_start(target);
  Endpoint b2 = ws.d.dart_stop(target);
  MoveOutcome out = ws.apply(Move::r2_push(moving, target, true));
  // created: u, v; edges e1a, m1, e1b, e2a, m2, e2b
  if (b2.crossing == x) return {out.created_crossings[0], out.created_edges[5]};
  if (a2.crossing == x) return {out.created_crossings[1], out.created_edges[3]};
  throw Error(ErrorCode::MoveNotApplicable, "entry edge does not touch the covered crossing");
}

// One finger hop: push the moving dart over `target`; returns the new tip
// dart, which lies on the face beyond `target`.
inline Dart hop(Workspace& ws, Dart moving, Dart target) {
  MoveOutcome out = ws.apply(Move::r2_push(moving, target, true));
  EdgeId m1 = out.created_edges[1];
  return Dart{m1, ws.d.end_index(m1, Endpoint{out.created_crossings[0], 2})};
}

struct CoverPlan {
  Dart helper;               // dart of the covering strand
  std::vector<Dart> hops;    // edges crossed on the way (each on the tip's face)
  Dart entry;                // dart of an edge at `first`, on the tip's face
  CrossingId first = -1;
  // Optional second crossing, reached through port `second_port` whose edge
  // leads back to `first`.
  CrossingId second = -1;
  int second_port = -1;
};

inline void cover(Workspace& ws, const CoverPlan& plan) {
  Dart tip = plan.helper;
  for (const Dart& t : plan.hops) tip = hop(ws, tip, t);
  Entry e = enter(ws, tip, plan.entry, plan.first);
  if (!absorb(ws, e.w, e.piece))
    throw Error(ErrorCode::MoveNotApplicable, "cannot slide across the first crossing");
  if (plan.second >= 0) {
    EdgeId piece = ws.d.edge_at({plan.second, plan.second_port});
    Endpoint far = other_end(ws.d, piece, {plan.second, plan.second_port});
    if (far.crossing == plan.second || ws.d.is_over(far))
      throw Error(ErrorCode::MoveNotApplicable, "second crossing not reached by the covering strand");
    if (!absorb(ws, far.crossing, piece))
      throw Error(ErrorCode::MoveNotApplicable, "cannot slide across the second crossing");
  }
}

// Slides the over strand of x1 along the under edge at (x1, port) and across
// the crossing at its other end, then removes the bigon left at x1.
// `mirror` selects the corner on the other side of the edge.
inline void slide(Workspace& ws, CrossingId x1, int port, bool mirror) {
  const Diagram& d = ws.d;
  if (d.is_over({x1, port})) throw Error(ErrorCode::MoveNotApplicable, "slide needs an under edge");
  EdgeId e = d.edge_at({x1, port});
  Endpoint far = other_end(d, e, {x1, port});
  if (far.crossing == x1) throw Error(ErrorCode::MoveNotApplicable, "slide edge is a loop");
  MoveOutcome out;
  Entry entry;
  if (!mirror) {
    Dart f = dart_into(d, {x1, (port + 3) % 4});
    Dart t{e, d.end_index(e, {x1, port})};
    out = ws.apply(Move::r2_push(f, t, true));
    entry = {out.created_crossings[0], out.created_edges[5]};  // u sits next to the far crossing
  } else {
    Dart f = dart_from(d, {x1, (port + 1) % 4});
    Dart t{e, d.end_index(e, far)};
    out = ws.apply(Move::r2_push(f, t, true));
    entry = {out.created_crossings[1], out.created_edges[3]};  // v sits next to the far crossing
  }
  CrossingId near = mirror ? out.created_crossings[0] : out.created_crossings[1];
  if (!absorb(ws, entry.w, entry.piece))
    throw Error(ErrorCode::MoveNotApplicable, "cannot slide across the far crossing");
  ws.apply(Move::r2_pull(x1, near));
}

}  // namespace foxcolor
