#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "foxcolor/error.hpp"

namespace foxcolor {

using CrossingId = int;
using EdgeId = int;
using ArcId = int;
using json = nlohmann::json;

// A port is a slot 0..3 around a crossing, numbered counterclockwise.
struct Endpoint {
  CrossingId crossing = -1;
  int port = -1;
  auto operator<=>(const Endpoint&) const = default;
};

struct Crossing {
  CrossingId id = -1;
  std::array<EdgeId, 4> ports{-1, -1, -1, -1};
  int over_parity = 1;  // over ports are {over_parity, over_parity + 2}

  bool is_over(int port) const { return (port & 1) == over_parity; }
  std::array<int, 2> over_ports() const { return {over_parity, over_parity + 2}; }
  std::array<int, 2> under_ports() const { return {1 - over_parity, 3 - over_parity}; }
};

// A dart is an edge traversed starting from ends[end].
struct Dart {
  EdgeId edge = -1;
  int end = 0;
  auto operator<=>(const Dart&) const = default;
};

struct Arc {
  ArcId id = 0;
  std::vector<EdgeId> edges;
  bool is_closed = false;
};

struct ValidationResult {
  std::vector<std::string> defects;
  std::vector<std::string> warnings;
  bool ok() const { return defects.empty(); }
};

class Diagram {
 public:
  Diagram() = default;

  // Builds from raw crossings; endpoint table is derived and may be
  // inconsistent for hand-written input (see validate()).
  static Diagram from_crossings(std::vector<Crossing> cs, int free_loops) {
    Diagram d;
    for (auto& c : cs) d.crossings_[c.id] = c;
    d.free_loops_ = free_loops;
    d.reindex();
    return d;
  }

  const std::map<CrossingId, Crossing>& crossings() const { return crossings_; }
  const std::map<EdgeId, std::array<Endpoint, 2>>& edges() const { return edges_; }
  int free_loops() const { return free_loops_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_crossing(CrossingId x) const { return crossings_.count(x) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }

  const Crossing& crossing(CrossingId x) const {
    auto it = crossings_.find(x);
    if (it == crossings_.end()) throw Error(ErrorCode::AnchorNotFound, "no crossing " + std::to_string(x));
    return it->second;
  }
  const std::array<Endpoint, 2>& ends(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw Error(ErrorCode::AnchorNotFound, "no edge " + std::to_string(e));
    return it->second;
  }
  EdgeId edge_at(Endpoint ep) const { return crossing(ep.crossing).ports[ep.port]; }
  bool is_over(Endpoint ep) const { return crossing(ep.crossing).is_over(ep.port); }

  // Which end of e sits at ep (0 or 1); for loop edges the exact port decides.
  int end_index(EdgeId e, Endpoint ep) const {
    const auto& en = ends(e);
    if (en[0] == ep) return 0;
    if (en[1] == ep) return 1;
    throw Error(ErrorCode::AnchorNotFound, "edge " + std::to_string(e) + " not at endpoint");
  }
  Endpoint dart_start(Dart d) const { return ends(d.edge)[d.end]; }
  Endpoint dart_stop(Dart d) const { return ends(d.edge)[1 - d.end]; }

  // Face walk: arrive at port j, leave through port j+1.
  Dart next_in_face(Dart d) const {
    Endpoint at = dart_stop(d);
    Endpoint out{at.crossing, (at.port + 1) % 4};
    EdgeId f = edge_at(out);
    return Dart{f, end_index(f, out)};
  }

  CrossingId next_crossing_id() const { return next_crossing_; }
  EdgeId next_edge_id() const { return next_edge_; }

  // Mutation hooks for the move implementations.
  void put_crossing(const Crossing& c) {
    crossings_[c.id] = c;
    next_crossing_ = std::max(next_crossing_, c.id + 1);
  }
  void erase_crossing(CrossingId x) { crossings_.erase(x); }
  void set_free_loops(int n) { free_loops_ = n; }
  CrossingId fresh_crossing() { return next_crossing_++; }
  EdgeId fresh_edge() { return next_edge_++; }
  void reindex() {
    edges_.clear();
    bad_edges_.clear();
    std::map<EdgeId, std::vector<Endpoint>> seen;
    for (const auto& [id, c] : crossings_) {
      next_crossing_ = std::max(next_crossing_, id + 1);
      for (int i = 0; i < 4; ++i) {
        seen[c.ports[i]].push_back({id, i});
        next_edge_ = std::max(next_edge_, c.ports[i] + 1);
      }
    }
    for (auto& [e, eps] : seen) {
      if (eps.size() == 2)
        edges_[e] = {eps[0], eps[1]};
      else
        bad_edges_[e] = static_cast<int>(eps.size());
    }
  }
  const std::map<EdgeId, int>& bad_edges() const { return bad_edges_; }

 private:
  std::map<CrossingId, Crossing> crossings_;
  std::map<EdgeId, std::array<Endpoint, 2>> edges_;
  std::map<EdgeId, int> bad_edges_;
  int free_loops_ = 0;
  CrossingId next_crossing_ = 0;
  EdgeId next_edge_ = 0;
};

// ---------------------------------------------------------------- parsing

inline Diagram parse_pd(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::MalformedToken, why + " at offset " + std::to_string(i));
  };

  std::string body = text;
  // Optional PD[...] wrapper.
  {
    std::size_t s = 0;
    while (s < body.size() && std::isspace(static_cast<unsigned char>(body[s]))) ++s;
    if (body.compare(s, 3, "PD[") == 0) {
      std::size_t e = body.find_last_of(']');
      if (e == std::string::npos || e < s + 3) throw Error(ErrorCode::MalformedToken, "unterminated PD[");
      body = body.substr(s + 3, e - s - 3);
    }
  }
  const std::string& t = body;
  std::vector<std::array<long, 4>> tokens;
  auto skip_t = [&] {
    while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',')) ++i;
  };
  skip_t();
  while (i < t.size()) {
    if (t[i] != 'X' || i + 1 >= t.size() || t[i + 1] != '[') throw fail("expected X[");
    i += 2;
    std::vector<long> labels;
    while (true) {
      while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
      std::size_t start = i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      if (start == i) throw fail("expected positive integer label");
      if (i - start > 9) throw fail("label too large");
      long v = std::stol(t.substr(start, i - start));
      if (v <= 0) throw fail("labels must be positive");
      labels.push_back(v);
      while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
      if (i < t.size() && t[i] == ',') { ++i; continue; }
      if (i < t.size() && t[i] == ']') { ++i; break; }
      throw fail("expected ',' or ']'");
    }
    if (labels.size() != 4) throw fail("crossing token needs 4 labels, got " + std::to_string(labels.size()));
    tokens.push_back({labels[0], labels[1], labels[2], labels[3]});
    skip_t();
  }
  if (tokens.empty()) throw Error(ErrorCode::EmptyInput, "no crossings in PD code");

  std::map<long, int> count;
  for (auto& tk : tokens)
    for (long l : tk) ++count[l];
  for (auto& [l, n] : count)
    if (n != 2)
      throw Error(ErrorCode::DanglingEdge,
                  "label " + std::to_string(l) + " appears " + std::to_string(n) + " times");

  std::map<long, EdgeId> ids;
  std::vector<Crossing> cs;
  for (std::size_t x = 0; x < tokens.size(); ++x) {
    Crossing c;
    c.id = static_cast<CrossingId>(x);
    for (int p = 0; p < 4; ++p) {
      auto [it, fresh] = ids.emplace(tokens[x][p], static_cast<EdgeId>(ids.size()));
      (void)fresh;
      c.ports[p] = it->second;
    }
    c.over_parity = 1;  // first entry is the incoming under-edge
    cs.push_back(c);
  }
  return Diagram::from_crossings(std::move(cs), 0);
}

// ---------------------------------------------------------------- structure

inline ValidationResult validate(const Diagram& d) {
  ValidationResult r;
  for (auto& [e, n] : d.bad_edges())
    r.defects.push_back("edge " + std::to_string(e) + " occupies " + std::to_string(n) +
                        " ports (expected 2)");
  for (auto& [id, c] : d.crossings()) {
    if (c.id != id) r.defects.push_back("crossing id mismatch at " + std::to_string(id));
    if (c.over_parity != 0 && c.over_parity != 1)
      r.defects.push_back("crossing " + std::to_string(id) + " has non-opposite over ports");
    for (int p = 0; p < 4; ++p)
      if (c.ports[p] < 0) r.defects.push_back("crossing " + std::to_string(id) + " has an empty port");
  }
  if (d.free_loops() < 0) r.defects.push_back("negative free loop count");
  if (!r.ok()) return r;

  // Connectivity of the underlying graph, free loops counted as pieces.
  std::size_t pieces = static_cast<std::size_t>(d.free_loops());
  if (!d.crossings().empty()) {
    std::map<CrossingId, CrossingId> parent;
    for (auto& [id, c] : d.crossings()) parent[id] = id;
    auto find = [&](CrossingId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto& [e, en] : d.edges()) parent[find(en[0].crossing)] = find(en[1].crossing);
    std::set<CrossingId> roots;
    for (auto& [id, c] : d.crossings()) roots.insert(find(id));
    pieces += roots.size();
  }
  if (pieces > 1) r.warnings.push_back("disconnected diagram (" + std::to_string(pieces) + " pieces)");
  return r;
}

inline void require_valid(const Diagram& d) {
  auto v = validate(d);
  if (!v.ok()) throw Error(ErrorCode::InvalidInput, "invalid diagram: " + v.defects.front());
}

inline bool is_connected(const Diagram& d) { return validate(d).warnings.empty(); }

// Number of link components (closed strands, including free loops).
inline int component_count(const Diagram& d) {
  std::set<Endpoint> seen;
  int comps = d.free_loops();
  for (auto& [e, en] : d.edges()) {
    Endpoint start = en[0];
    if (seen.count(start)) continue;
    ++comps;
    // Walk the strand: leave via edge, arrive at port j, continue from j+2.
    EdgeId cur = e;
    int from = 0;
    while (true) {
      Endpoint a = d.ends(cur)[from];
      Endpoint b = d.ends(cur)[1 - from];
      seen.insert(a);
      seen.insert(b);
      Endpoint nxt{b.crossing, (b.port + 2) % 4};
      EdgeId f = d.edge_at(nxt);
      int fi = d.end_index(f, nxt);
      if (f == e && fi == 0) break;
      cur = f;
      from = fi;
    }
  }
  return comps;
}

// Arcs: maximal strands whose interior passes over; ordered by least edge id,
// free loops appended as closed arcs without edges.
inline std::vector<Arc> derive_arcs(const Diagram& d) {
  std::vector<Arc> arcs;
  std::set<EdgeId> used;
  auto walk_from = [&](EdgeId e, int from) {
    // Follow through over-passes starting at ends[from] side going forward.
    std::vector<EdgeId> out;
    EdgeId cur = e;
    int f = from;
    while (true) {
      out.push_back(cur);
      used.insert(cur);
      Endpoint b = d.ends(cur)[1 - f];
      if (!d.is_over(b)) return std::make_pair(out, false);
      Endpoint nxt{b.crossing, (b.port + 2) % 4};
      EdgeId g = d.edge_at(nxt);
      int gi = d.end_index(g, nxt);
      if (g == e && gi == from) return std::make_pair(out, true);
      cur = g;
      f = gi;
    }
  };
  // Open arcs start at an under endpoint.
  for (auto& [e, en] : d.edges()) {
    if (used.count(e)) continue;
    for (int s = 0; s < 2; ++s) {
      if (!d.is_over(en[s])) {
        auto [edges, closed] = walk_from(e, s);
        Arc a;
        a.edges = std::move(edges);
        a.is_closed = closed;
        arcs.push_back(std::move(a));
        break;
      }
    }
  }
  // Whatever is left runs over at every crossing: closed arcs.
  for (auto& [e, en] : d.edges()) {
    if (used.count(e)) continue;
    auto [edges, closed] = walk_from(e, 0);
    Arc arc;
    arc.edges = std::move(edges);
    arc.is_closed = closed;
    arcs.push_back(std::move(arc));
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return *std::min_element(x.edges.begin(), x.edges.end()) <
           *std::min_element(y.edges.begin(), y.edges.end());
  });
  for (int i = 0; i < d.free_loops(); ++i) {
    Arc a;
    a.is_closed = true;
    arcs.push_back(a);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].id = static_cast<ArcId>(i);
  return arcs;
}

// Edge -> arc index for the given arc list.
inline std::map<EdgeId, ArcId> arc_of_edges(const std::vector<Arc>& arcs) {
  std::map<EdgeId, ArcId> m;
  for (auto& a : arcs)
    for (EdgeId e : a.edges) m[e] = a.id;
  return m;
}

// Faces as dart cycles, enumerated from the least unvisited dart.
inline std::vector<std::vector<Dart>> faces(const Diagram& d) {
  std::vector<std::vector<Dart>> out;
  std::set<Dart> seen;
  for (auto& [e, en] : d.edges()) {
    for (int s = 0; s < 2; ++s) {
      Dart start{e, s};
      if (seen.count(start)) continue;
      std::vector<Dart> f;
      Dart cur = start;
      do {
        seen.insert(cur);
        f.push_back(cur);
        cur = d.next_in_face(cur);
      } while (cur != start);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// The face containing a given dart, listed starting at that dart.
inline std::vector<Dart> face_of(const Diagram& d, Dart start) {
  std::vector<Dart> f;
  Dart cur = start;
  do {
    f.push_back(cur);
    cur = d.next_in_face(cur);
    if (f.size() > 4 * d.edge_count() + 4)
      throw Error(ErrorCode::InvalidInput, "face walk does not close");
  } while (cur != start);
  return f;
}

// ---------------------------------------------------------------- JSON

inline json to_json(const Diagram& d) {
  json cs = json::array();
  for (auto& [id, c] : d.crossings()) {
    cs.push_back({{"id", id},
                  {"ports", {c.ports[0], c.ports[1], c.ports[2], c.ports[3]}},
                  {"over", {c.over_parity, c.over_parity + 2}}});
  }
  return json{{"crossings", cs}, {"free_loops", d.free_loops()}};
}

inline Diagram diagram_from_json(const json& j) {
  std::vector<Crossing> cs;
  std::set<CrossingId> ids;
  for (auto& jc : j.at("crossings")) {
    Crossing c;
    c.id = jc.at("id").get<int>();
    if (c.id < 0 || !ids.insert(c.id).second)
      throw Error(ErrorCode::InvalidInput, "bad or duplicate crossing id");
    auto ports = jc.at("ports").get<std::vector<int>>();
    if (ports.size() != 4) throw Error(ErrorCode::InvalidInput, "crossing needs 4 ports");
    for (int p = 0; p < 4; ++p) c.ports[p] = ports[p];
    auto over = jc.at("over").get<std::vector<int>>();
    if (over.size() != 2) throw Error(ErrorCode::InvalidInput, "over needs 2 ports");
    std::sort(over.begin(), over.end());
    if (over[0] < 0 || over[1] > 3 || over[1] - over[0] != 2)
      c.over_parity = -1;  // reported by validate()
    else
      c.over_parity = over[0];
    cs.push_back(c);
  }
  return Diagram::from_crossings(std::move(cs), j.value("free_loops", 0));
}

// FNV-1a over the canonical JSON text.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
  return s;
}

inline std::string diagram_hash(const Diagram& d) { return hash_hex(stable_hash(to_json(d).dump())); }

// ---------------------------------------------------------------- isomorphism

// Isomorphism-invariant code: each connected piece is relabelled by BFS from
// every (crossing, rotation) start and the least code kept.
inline std::vector<std::vector<int>> canonical_code(const Diagram& d) {
  std::vector<std::vector<int>> pieces;
  std::set<CrossingId> done;
  for (auto& [root, rc] : d.crossings()) {
    if (done.count(root)) continue;
    std::vector<CrossingId> members;
    {
      std::vector<CrossingId> stack{root};
      done.insert(root);
      while (!stack.empty()) {
        CrossingId x = stack.back();
        stack.pop_back();
        members.push_back(x);
        for (EdgeId e : d.crossing(x).ports)
          for (auto& ep : d.ends(e))
            if (done.insert(ep.crossing).second) stack.push_back(ep.crossing);
      }
    }
    std::vector<int> best;
    for (CrossingId s : members) {
      for (int rot = 0; rot < 4; ++rot) {
        std::map<CrossingId, std::pair<int, int>> label;  // id -> (label, rotation)
        std::vector<CrossingId> order{s};
        label[s] = {0, rot};
        std::vector<int> code;
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
          CrossingId x = order[qi];
          auto [lx, rx] = label[x];
          const Crossing& c = d.crossing(x);
          code.push_back(c.is_over(rx) ? 1 : 0);
          for (int i = 0; i < 4; ++i) {
            int port = (i + rx) % 4;
            EdgeId e = c.ports[port];
            const auto& en = d.ends(e);
            Endpoint other = en[0] == Endpoint{x, port} ? en[1] : en[0];
            if (!label.count(other.crossing)) {
              label[other.crossing] = {static_cast<int>(order.size()), other.port};
              order.push_back(other.crossing);
            }
            auto [ly, ry] = label[other.crossing];
            code.push_back(ly);
            code.push_back(((other.port - ry) % 4 + 4) % 4);
          }
        }
        if (best.empty() || code < best) best = code;
      }
    }
    pieces.push_back(best);
  }
  std::sort(pieces.begin(), pieces.end());
  pieces.push_back({-1, d.free_loops()});
  return pieces;
}

inline bool isomorphic(const Diagram& a, const Diagram& b) {
  return a.crossing_count() == b.crossing_count() && a.edge_count() == b.edge_count() &&
         a.free_loops() == b.free_loops() && canonical_code(a) == canonical_code(b);
}

}  // namespace foxcolor
