#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"

namespace foxcolor {

struct CorpusEntry {
  std::string name;
  std::string pd;
  long determinant;  // recomputed and checked by load_corpus()
  std::string notes;
};

// Closed 2-braid with n crossings: X[2i-1, n+2i-1, 2i, n+2i], labels mod 2n.
inline std::string torus_2n_pd(int n) {
  auto lab = [n](int x) { return ((x - 1) % (2 * n) + 2 * n) % (2 * n) + 1; };
  std::ostringstream os;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) os << ' ';
    os << "X[" << lab(2 * i - 1) << ',' << lab(n + 2 * i - 1) << ',' << lab(2 * i) << ',' << lab(n + 2 * i) << ']';
  }
  return os.str();
}

inline const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"trefoil", torus_2n_pd(3), 3, "3_1 = T(2,3)"},
      {"figure-eight", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", 5, "4_1"},
      {"T(2,7)", torus_2n_pd(7), 7, "7_1"},
      {"T(2,11)", torus_2n_pd(11), 11, "closed 2-braid, 11 crossings"},
      {"T(2,13)", torus_2n_pd(13), 13, "closed 2-braid, 13 crossings"},
      {"6_2", "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]", 11,
       "6-crossing knot with determinant 11"},
      {"6_3", "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]", 13,
       "6-crossing knot with determinant 13"},
  };
  return entries;
}

// Parses every entry and checks its stored determinant.
inline const std::vector<CorpusEntry>& load_corpus() {
  static const bool checked = [] {
    for (auto& e : corpus_entries()) {
      BigInt det = determinant(parse_pd(e.pd));
      if (det != e.determinant)
        throw Error(ErrorCode::InvalidInput, "corpus entry " + e.name + ": determinant " + det.str() +
                                                 " differs from stored " + std::to_string(e.determinant));
    }
    return true;
  }();
  (void)checked;
  return corpus_entries();
}

inline const CorpusEntry* find_corpus(const std::string& name) {
  for (auto& e : load_corpus())
    if (e.name == name) return &e;
  return nullptr;
}

// A corpus name, or a path to a file holding a PD code.
inline Diagram load_diagram(const std::string& name_or_path) {
  if (auto* e = find_corpus(name_or_path)) return parse_pd(e->pd);
  std::ifstream in(name_or_path);
  if (!in) throw Error(ErrorCode::NotFound, "no corpus entry or file named " + name_or_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pd(ss.str());
}

}  // namespace foxcolor
