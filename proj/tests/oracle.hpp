#pragma once

// Independent brute-force oracles over machine integers. Nothing here calls
// into the library, so tests can compare the two routes.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 abs64(i64 v) { return v < 0 ? -v : v; }

inline i64 gcd(i64 a, i64 b) {
  a = abs64(a);
  b = abs64(b);
  while (b != 0) {
    const i64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline bool is_prime(i64 n) {
  n = abs64(n);
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// (sign, [(prime, exponent)]) by trial division.
inline std::pair<int, std::vector<std::pair<i64, unsigned>>> factorize(i64 n) {
  const int sign = n < 0 ? -1 : 1;
  n = abs64(n);
  std::vector<std::pair<i64, unsigned>> out;
  for (i64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return {sign, out};
}

/// Every signed divisor of n, by testing each candidate up to |n|.
inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 1; d <= abs64(n); ++d) {
    if (n % d == 0) {
      out.push_back(-d);
      out.push_back(d);
    }
  }
  return out;
}

inline i128 cubic(i128 x, int e) { return x * x * x + (e == 1 ? x : x * x) + 1; }

/// x | y^3 + y^a + 1 and y | x^3 + x^b + 1, straight from the definition.
inline bool in_system(i64 x, i64 y, int a, int b) {
  if (x == 0 || y == 0) return false;
  return cubic(y, a) % x == 0 && cubic(x, b) % y == 0;
}

}  // namespace oracle
