#pragma once

// Single-field mutations of a trace report.

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace fuzz {

using nlohmann::json;

struct Mutant {
  json report;
  std::string what;
};

inline std::vector<json*> all_steps(json& rep) {
  std::vector<json*> out;
  for (auto& t : rep["traces"])
    for (auto& s : t["steps"]) out.push_back(&s);
  return out;
}

template <class T>
T pick(std::mt19937& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

inline bool edit_color(json& col, long p, std::mt19937& rng) {
  auto& a = col["assignment"];
  if (a.empty()) return false;
  auto it = a.begin();
  std::advance(it, pick<long>(rng, 0, static_cast<long>(a.size()) - 1));
  *it = (it->get<long>() + pick<long>(rng, 1, p - 1)) % p;
  return true;
}

// kind: 0 colour, 1 hash, 2 deleted move, 3 edited move field
inline Mutant mutate(const json& original, int kind, std::mt19937& rng) {
  Mutant m{original, ""};
  json& rep = m.report;
  long p = rep["p"].get<long>();
  auto steps = all_steps(rep);
  json& st = *steps[pick<size_t>(rng, 0, steps.size() - 1)];
  switch (kind) {
    case 0: {
      int where = pick(rng, 0, 9);
      if (where == 0) {
        edit_color(rep["output"]["coloring"], p, rng);
        m.what = "output colour";
      } else if (where == 1) {
        edit_color(rep["input"]["coloring"], p, rng);
        m.what = "input colour";
      } else {
        edit_color(st["coloring_after"], p, rng);
        m.what = "step colour";
      }
      break;
    }
    case 1: {
      std::string key = pick(rng, 0, 1) ? "diagram_hash_before" : "diagram_hash_after";
      std::string h = st[key];
      size_t i = pick<size_t>(rng, 0, h.size() - 1);
      h[i] = h[i] == '0' ? '1' : '0';
      st[key] = h;
      m.what = key;
      break;
    }
    case 2: {
      auto& mv = st["moves"];
      mv.erase(mv.begin() + pick<long>(rng, 0, static_cast<long>(mv.size()) - 1));
      m.what = "deleted move";
      break;
    }
    default: {
      auto& mv = st["moves"][pick<size_t>(rng, 0, st["moves"].size() - 1)];
      std::vector<std::string> fields;
      for (auto& [k, v] : mv.items())
        if (k != "type") fields.push_back(k);
      std::string f = fields[pick<size_t>(rng, 0, fields.size() - 1)];
      json& v = mv[f];
      if (v.is_boolean()) v = !v.get<bool>();
      else if (v.is_array()) {
        int i = pick(rng, 0, 1);
        v[i] = v[i].get<int>() + pick(rng, 1, 5);
      }
      else if (f == "end" || f == "target_end") v = 1 - v.get<int>();
      else v = v.get<int>() + pick(rng, 1, 5);
      m.what = "move field " + f;
      break;
    }
  }
  return m;
}

}  // namespace fuzz
