#pragma once

#include <cstdint>
#include <string>

#include "foxcolor/error.hpp"

namespace foxcolor {

using Color = int;

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long mod(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

// Inverse of x modulo a prime p (x not divisible by p).
inline long inverse_mod(long x, long p) {
  long t = 0, nt = 1, r = p, nr = mod(x, p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  return mod(t, p);
}

// p = 2k+1, odd prime.
struct Modulus {
  int p = 0;
  int k = 0;

  Modulus() = default;
  explicit Modulus(int prime) : p(prime), k((prime - 1) / 2) {
    if (prime < 3 || !is_prime(prime))
      throw Error(ErrorCode::NonPrime, "modulus " + std::to_string(prime) + " is not an odd prime");
  }

  Color reduce(long x) const { return static_cast<Color>(mod(x, p)); }
  Color reflect(Color over, Color under) const { return reduce(2L * over - under); }

  // Removal order: 2k, 2k-1, k.
  Color forbidden(int i) const { return i == 0 ? 2 * k : i == 1 ? 2 * k - 1 : k; }

  // Elimination requires p > 7.
  void require_elimination_range() const {
    if (p <= 7)
      throw Error(ErrorCode::ModulusTooSmall,
                  "p = " + std::to_string(p) + " but color removal needs a prime p > 7");
  }

  bool operator==(const Modulus&) const = default;
};

}  // namespace foxcolor
