#pragma once

#include <random>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/moves.hpp"

namespace foxcolor::testing {

// Every move of one type that applies to d.
inline std::vector<Move> applicable_moves(const Diagram& d, MoveType t) {
  std::vector<Move> out;
  auto works = [&](const Move& m) {
    try {
      apply_move(d, m);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  switch (t) {
    case MoveType::R1Add:
      for (auto& [e, en] : d.edges())
        for (int s = 0; s < 2; ++s)
          for (bool o : {true, false}) out.push_back(Move::r1_add({e, s}, o));
      break;
    case MoveType::R1Remove:
      for (auto& [x, c] : d.crossings())
        if (works(Move::r1_remove(x))) out.push_back(Move::r1_remove(x));
      break;
    case MoveType::R2Push:
      for (auto& f : faces(d))
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = 0; j < f.size(); ++j)
            if (f[i].edge != f[j].edge)
              for (bool o : {true, false}) out.push_back(Move::r2_push(f[i], f[j], o));
      break;
    case MoveType::R2Pull:
      for (auto& [x, c] : d.crossings())
        for (auto& [y, c2] : d.crossings())
          if (x < y && works(Move::r2_pull(x, y))) out.push_back(Move::r2_pull(x, y));
      break;
    case MoveType::R3Slide:
      for (auto& f : faces(d))
        if (f.size() == 3 && works(Move::r3_slide(f[0]))) out.push_back(Move::r3_slide(f[0]));
      break;
  }
  return out;
}

// Picks a random applicable move, favouring the rarer types when present.
inline std::optional<Move> random_move(const Diagram& d, std::mt19937& rng) {
  std::vector<MoveType> order{MoveType::R3Slide, MoveType::R2Pull, MoveType::R1Remove, MoveType::R2Push,
                              MoveType::R1Add};
  std::shuffle(order.begin(), order.end(), rng);
  for (MoveType t : order) {
    if ((t == MoveType::R2Push || t == MoveType::R1Add) && d.crossing_count() > 40) continue;
    auto ms = applicable_moves(d, t);
    if (ms.empty()) continue;
    return ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
  }
  return std::nullopt;
}

}  // namespace foxcolor::testing
