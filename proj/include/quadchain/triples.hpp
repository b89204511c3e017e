#pragma once

// Chains sharing a common element.
//
// For a triple (u1, t, u2) under S_{a,b} we have u1 * u2 = t^3 + t^a + 1, so
// every divisor v of u1 * u2 already satisfies v | t^3 + t^a + 1; the pair
// (v, t) is a chain seed exactly when t | v^3 + v^b + 1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadchain/arith.hpp"
#include "quadchain/chain.hpp"

namespace quadchain {

namespace detail {

inline void require_factor(const Triple& base, const Int& v) {
  if (v == 0 || !divides(v, base.left * base.right)) {
    throw Error(ErrorKind::NotAFactor,
                to_decimal(v) + " does not divide " + to_decimal(base.left * base.right));
  }
}

}  // namespace detail

/// Whether <v, t> under base.system is a chain, for a divisor v of left * right.
inline bool lemma7_test(const Triple& base, const Int& v) {
  detail::require_factor(base, v);
  return divides(base.center, cubic(v, base.system.lambda_b));
}

/// Sufficient condition t | (u1 - v).
inline bool corollary8_test(const Triple& base, const Int& v) {
  detail::require_factor(base, v);
  return divides(base.center, base.left - v);
}

/// Divisibility criterion for the second triple (v, t, u*w) given the first
/// triple (u, t, v*w) under s:
///   b = 1:  t | (u - v)(u^2 + uv + v^2 + 1)
///   b = 2:  t | (u - v)((uw)^2 + (uw)(vw) + (vw)^2 + 1)
inline bool theorem10_criterion(const Int& u, const Int& v, const Int& t, const Int& w,
                                SystemLabel s) {
  if (s.lambda_b == 1) return divides(t, (u - v) * (u * u + u * v + v * v + 1));
  const Int uw = u * w;
  const Int vw = v * w;
  return divides(t, (u - v) * (uw * uw + uw * vw + vw * vw + 1));
}

/// Same criterion for an arbitrary divisor v of base.left * base.right, where
/// w = base.right / v may be a fraction. Multiplying the b = 2 form through by
/// v^2 (a unit mod t, since v | t^3 + t^a + 1) keeps it in the integers:
///   t | (u - v)((u r)^2 + (u r)(v r) + (v r)^2 + v^2),   r = base.right.
inline bool theorem10_criterion(const Triple& base, const Int& v) {
  detail::require_factor(base, v);
  const Int& u = base.left;
  const Int& t = base.center;
  if (base.system.lambda_b == 1) return theorem10_criterion(u, v, t, Int(0), base.system);
  const Int ur = u * base.right;
  const Int vr = v * base.right;
  return divides(t, (u - v) * (ur * ur + ur * vr + vr * vr + v * v));
}

struct SiblingReport {
  Triple base;
  Int sibling_value;
  Triple sibling;
  bool via_corollary8 = false;
};

struct SiblingOptions {
  FactorOptions factor;
  std::uint64_t max_divisors = std::uint64_t{1} << 16;
};

/// Every chain <v, t> matching `base`, one per signed divisor v of
/// left * right passing lemma7_test, sorted by |v| (negative first).
inline std::vector<SiblingReport> find_siblings(const Triple& base,
                                                const SiblingOptions& options = {}) {
  if (!satisfies_recurrence(base) || !check_system(base.left, base.center, base.system)) {
    throw Error(ErrorKind::InvalidArgument, "base is not a chain triple");
  }
  // The outer terms are factored separately; their product is usually far
  // harder to split in one piece.
  const Factorization f =
      multiply(factorize(base.left, options.factor), factorize(base.right, options.factor));
  if (divisor_count(f) > options.max_divisors) {
    throw Error(ErrorKind::TooManyDivisors,
                std::to_string(divisor_count(f)) + " divisors exceed the cap of " +
                    std::to_string(options.max_divisors));
  }
  const Int product = base.left * base.right;
  std::vector<SiblingReport> out;
  for (const Int& v : divisors(f)) {
    if (!lemma7_test(base, v)) continue;
    Triple sibling{v, base.center, exact_div(product, v), base.system};
    out.push_back({base, v, std::move(sibling), corollary8_test(base, v)});
  }
  return out;
}

struct ThirdChainCertificate {
  Int u, v, t, w;
  SystemLabel system;
  Triple first;   // (u, t, v w)
  Triple second;  // (v, t, u w)
  Triple third;   // (-w, t, -u v)
  bool hypothesis_prime = false;    // |t| is prime
  bool hypothesis_nondiv = false;   // t does not divide u - v
  bool third_verified = false;
  /// When both hypotheses hold: w = u + v (mod |t|) for b = 1, or
  /// u w + v w = u v (mod |t|) for b = 2.
  std::optional<bool> congruence_holds;
};

namespace detail {

// A triple under S_{a,2} read backwards is a triple under S_{a,1}.
inline Triple reverse_triple(const Triple& t) {
  return {t.right, t.center, t.left, reversed(rotate_right(t.system))};
}

}  // namespace detail

/// Builds the candidate third triple (-w, t, -uv) from matching triples
/// (u, t, v w) and (v, t, u w) and verifies it, recording which hypotheses
/// held. Structural problems throw; a failed verification does not.
inline ThirdChainCertificate build_third_chain_certificate(const Triple& first,
                                                           const Triple& second) {
  if (first.center != second.center) {
    throw Error(ErrorKind::CentersDiffer,
                to_decimal(first.center) + " != " + to_decimal(second.center));
  }
  if (first.system != second.system) {
    throw Error(ErrorKind::SystemsDiffer, first.system.name() + " != " + second.system.name());
  }
  for (const Triple* tr : {&first, &second}) {
    if (!verify_triple(*tr)) {
      throw Error(ErrorKind::InvalidArgument,
                  "(" + to_decimal(tr->left) + ", " + to_decimal(tr->center) + ", " +
                      to_decimal(tr->right) + ") is not a triple of a chain under " +
                      tr->system.name());
    }
  }
  if (first.left == second.left) {
    throw Error(ErrorKind::HypothesisFailed, "t | (u - v): the triples coincide");
  }

  ThirdChainCertificate c;
  c.u = first.left;
  c.v = second.left;
  c.t = first.center;
  c.system = first.system;
  c.first = first;
  c.second = second;
  c.w = exact_div(first.right, c.v);
  if (second.right != c.u * c.w) {
    throw Error(ErrorKind::InconsistentProduct,
                "second right term " + to_decimal(second.right) + " != u * w = " +
                    to_decimal(c.u * c.w));
  }
  if (gcd(c.t, c.w) != 1) {
    throw Error(ErrorKind::InconsistentProduct, "gcd(|t|, |w|) != 1");
  }
  c.hypothesis_prime = is_prime(c.t);
  c.hypothesis_nondiv = !divides(c.t, c.u - c.v);
  c.third = Triple{-c.w, c.t, -c.u * c.v, c.system};

  if (c.system.lambda_b == 1) {
    c.third_verified = verify_triple(c.third);
  } else {
    // Verify through the backwards reading under S_{a,1}, then the forward one.
    c.third_verified =
        verify_triple(detail::reverse_triple(c.third)) && verify_triple(c.third);
  }

  if (c.hypothesis_prime && c.hypothesis_nondiv) {
    const Int p = abs(c.t);
    if (c.system.lambda_b == 1) {
      c.congruence_holds = mod_floor(c.w - c.u - c.v, p) == 0;
    } else {
      c.congruence_holds = mod_floor(c.u * c.w + c.v * c.w - c.u * c.v, p) == 0;
    }
  }
  return c;
}

/// Third-chain construction. Throws HypothesisFailed when the candidate
/// triple does not verify.
inline ThirdChainCertificate third_chain(const Triple& first, const Triple& second) {
  ThirdChainCertificate c = build_third_chain_certificate(first, second);
  if (!c.third_verified) {
    std::string failed;
    if (!c.hypothesis_prime) failed += " |t| is not prime;";
    if (!c.hypothesis_nondiv) failed += " t | (u - v);";
    if (failed.empty()) {
      throw std::logic_error("third triple failed verification although both hypotheses hold");
    }
    throw Error(ErrorKind::HypothesisFailed,
                "(" + to_decimal(c.third.left) + ", " + to_decimal(c.third.center) + ", " +
                    to_decimal(c.third.right) + ") is not a chain triple:" + failed);
  }
  return c;
}

}  // namespace quadchain
