#pragma once

// Reference computations written straight from PD text, sharing nothing with
// the library beyond the standard library and Boost.

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <string>
#include <vector>

namespace oracles {

struct Relation {
  int over, u1, u2;  // arc indices
};

struct Presentation {
  int arcs = 0;
  std::vector<Relation> rows;
};

// X[a,b,c,d]: a and c are the under ends, b and d the over strand.
inline Presentation present(const std::string& pd) {
  std::vector<std::array<int, 4>> xs;
  std::regex re(R"(X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\])");
  for (std::sregex_iterator it(pd.begin(), pd.end(), re), end; it != end; ++it)
    xs.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    if (!parent.count(x)) parent[x] = x;
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto& x : xs) {
    for (int e : x) find(e);
    parent[find(x[1])] = find(x[3]);
  }
  std::map<int, int> idx;
  for (auto& [e, _] : parent) {
    int r = find(e);
    if (!idx.count(r)) idx.emplace(r, static_cast<int>(idx.size()));
  }
  Presentation out;
  out.arcs = static_cast<int>(idx.size());
  for (auto& x : xs) out.rows.push_back({idx[find(x[1])], idx[find(x[0])], idx[find(x[2])]});
  return out;
}

// Number of assignments in {0..p-1}^arcs satisfying every relation.
inline long brute_count(const Presentation& pr, int p) {
  std::vector<int> col(pr.arcs, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (auto& r : pr.rows)
      if (((2 * col[r.over] - col[r.u1] - col[r.u2]) % p + 2 * p) % p) {
        ok = false;
        break;
      }
    count += ok;
    int i = 0;
    while (i < pr.arcs && ++col[i] == p) col[i++] = 0;
    if (i == pr.arcs) break;
  }
  return count;
}

// |first minor| by exact rational elimination.
inline boost::multiprecision::cpp_int cofactor(const Presentation& pr) {
  using Q = boost::multiprecision::cpp_rational;
  int n = static_cast<int>(pr.rows.size()) - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n, 0));
  for (int i = 0; i < n; ++i) {
    auto& r = pr.rows[i];
    if (r.over < n) m[i][r.over] += 2;
    if (r.u1 < n) m[i][r.u1] -= 1;
    if (r.u2 < n) m[i][r.u2] -= 1;
  }
  Q det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      Q f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  boost::multiprecision::cpp_int v = boost::multiprecision::numerator(det);
  return v < 0 ? boost::multiprecision::cpp_int(-v) : v;
}

// Solutions x in Z/p of c*x = d.
inline std::vector<long> solve_linear(long c, long d, long p) {
  std::vector<long> out;
  for (long x = 0; x < p; ++x)
    if (((c * x - d) % p + p) % p == 0) out.push_back(x);
  return out;
}

inline bool prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace oracles
