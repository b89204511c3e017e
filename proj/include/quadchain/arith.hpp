#pragma once

// Arbitrary-precision integer substrate: exact division, gcd, primality,
// factorization and divisor enumeration. Int is GMP's mpz_class.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quadchain/error.hpp"

namespace quadchain {

using Int = mpz_class;

inline std::string to_decimal(const Int& n) { return n.get_str(10); }

/// Parses an optional '-' followed by one or more decimal digits. No width limit.
inline Int parse_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::Parse, "not a decimal integer: '" + std::string(text) + "'");
  }
  return Int(std::string(text), 10);
}

inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Returns q with q * divisor == numerator.
inline Int exact_div(const Int& numerator, const Int& divisor) {
  if (divisor == 0) throw Error(ErrorKind::DivisorZero, "division by zero");
  if (!divides(divisor, numerator)) {
    throw Error(ErrorKind::NotDivisible,
                to_decimal(divisor) + " does not divide " + to_decimal(numerator));
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Non-negative remainder of a modulo |m|.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

/// x^3 + x^e + 1 for e in {1, 2}: the two cubics every chain relation is built from.
inline Int cubic(const Int& x, int e) {
  return x * x * x + (e == 1 ? x : x * x) + 1;
}

/// Floor square root of a non-negative integer.
inline Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// One Miller-Rabin round; n odd and > 3, n - 1 = d * 2^s.
inline bool strong_probable_prime(const Int& n, const Int& d, unsigned s, const Int& base) {
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace detail

/// Miller-Rabin. The first twelve prime bases make the answer deterministic for
/// |n| < 3.18e23 (which covers 2^64); above that 64 additional rounds with bases
/// from a fixed-seed generator bound the error probability by 4^-64 = 2^-128.
inline bool is_prime(const Int& value) {
  const Int n = abs(value);
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (divides(Int(p), n)) return false;
  }
  if (n < 41 * 41) return true;

  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned long base : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (!detail::strong_probable_prime(n, d, s, Int(base))) return false;
  }
  static const Int kDeterministicBound("318665857834031151167461", 10);
  if (n < kDeterministicBound) return true;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x9e3779b97f4a7c15ul);
  const Int span = n - 3;
  for (int round = 0; round < 64; ++round) {
    Int base = rng.get_z_range(span) + 2;
    if (!detail::strong_probable_prime(n, d, s, base)) return false;
  }
  return true;
}

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes

  Int value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) v *= pow(p, e);
    return v;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorOptions {
  /// Pollard-rho iterations allowed per composite cofactor.
  std::uint64_t rho_budget = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

namespace detail {

// Brent's variant of Pollard rho. Returns a non-trivial factor of the odd
// composite n, consuming iterations from `budget`.
inline Int brent_rho(const Int& n, std::mt19937_64& rng, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  while (true) {
    const Int c = Int(static_cast<unsigned long>(rng() % 1'000'000 + 1));
    Int y = Int(static_cast<unsigned long>(rng() % 1'000'000 + 2)) % n;
    Int x, saved, g = 1, q = 1;
    std::uint64_t r = 1;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        saved = y;
        const std::uint64_t m = std::min(kBatch, r - k);
        if (budget < m) {
          throw Error(ErrorKind::FactorizationTimeout,
                      "rho budget exhausted on cofactor " + to_decimal(n));
        }
        budget -= m;
        for (std::uint64_t i = 0; i < m; ++i) {
          step(y);
          q = q * abs(x - y) % n;
        }
        g = quadchain::gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Batched product overshot; replay one step at a time.
      do {
        step(saved);
        g = quadchain::gcd(abs(x - saved), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Trial division by primes below 2^16, then Brent-Pollard rho on what remains.
inline Factorization factorize(const Int& n, const FactorOptions& options = {}) {
  if (n == 0) throw Error(ErrorKind::Zero, "cannot factorize 0");
  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  std::vector<Int> primes;

  for (std::uint32_t p : detail::small_primes()) {
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }

  std::mt19937_64 rng(options.seed);
  std::vector<Int> pending;
  if (m > 1) pending.push_back(m);
  while (!pending.empty()) {
    Int c = std::move(pending.back());
    pending.pop_back();
    if (is_prime(c)) {
      primes.push_back(std::move(c));
      continue;
    }
    Int root;
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      root = isqrt(c);
      pending.push_back(root);
      pending.push_back(std::move(root));
      continue;
    }
    std::uint64_t budget = options.rho_budget;
    Int d = detail::brent_rho(c, rng, budget);
    pending.push_back(c / d);
    pending.push_back(std::move(d));
  }

  std::sort(primes.begin(), primes.end());
  for (auto& p : primes) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({std::move(p), 1});
    }
  }
  return result;
}

/// Factorization of a product, merged from the factorizations of its parts.
inline Factorization multiply(const Factorization& a, const Factorization& b) {
  Factorization out;
  out.sign = a.sign * b.sign;
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->prime < ib->prime)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->prime < ia->prime) {
      out.factors.push_back(*ib++);
    } else {
      out.factors.push_back({ia->prime, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  return out;
}

inline std::uint64_t divisor_count(const Factorization& f) {
  std::uint64_t count = 2;
  for (const auto& pe : f.factors) count *= pe.exponent + 1;
  return count;
}

/// All divisors of both signs, ordered by absolute value with the negative
/// one first.
inline std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> positive{Int(1)};
  for (const auto& [p, e] : f.factors) {
    const std::size_t existing = positive.size();
    Int power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) positive.push_back(positive[i] * power);
    }
  }
  std::sort(positive.begin(), positive.end());
  std::vector<Int> out;
  out.reserve(positive.size() * 2);
  for (auto& d : positive) {
    out.push_back(-d);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace quadchain
