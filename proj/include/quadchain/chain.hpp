#pragma once

// The 4-chain data model.
//
// A 4-chain is a bi-infinite integer sequence in which every adjacent pair
// (x, y) solves one of the four systems
//
//   S_{a,b}:  x | y^3 + y^a + 1  and  y | x^3 + x^b + 1,      a, b in {1, 2},
//
// and the system label advances along the chain by
// S_{a,b} -> S_{3-b,a}. A chain is held as a finite window plus the label
// of its first pair; the label of pair i is rotate_right^i(first_system).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quadchain/arith.hpp"

namespace quadchain {

struct SystemLabel {
  int lambda_a = 1;
  int lambda_b = 1;

  constexpr SystemLabel() = default;
  constexpr SystemLabel(int a, int b) : lambda_a(a), lambda_b(b) {
    if ((a != 1 && a != 2) || (b != 1 && b != 2)) {
      throw Error(ErrorKind::InvalidArgument, "system components must be 1 or 2");
    }
  }

  friend constexpr bool operator==(SystemLabel, SystemLabel) = default;
  friend constexpr auto operator<=>(SystemLabel, SystemLabel) = default;

  std::string name() const {
    return "S_{" + std::to_string(lambda_a) + "," + std::to_string(lambda_b) + "}";
  }
};

inline std::ostream& operator<<(std::ostream& os, SystemLabel s) { return os << s.name(); }

/// S_{1,1}, S_{2,1}, S_{2,2}, S_{1,2}.
inline constexpr std::array<SystemLabel, 4> kAllSystems{
    SystemLabel{1, 1}, SystemLabel{2, 1}, SystemLabel{2, 2}, SystemLabel{1, 2}};

/// Label of the next pair along a chain.
constexpr SystemLabel rotate_right(SystemLabel s) { return {3 - s.lambda_b, s.lambda_a}; }

/// Label of the previous pair along a chain.
constexpr SystemLabel rotate_left(SystemLabel s) { return {s.lambda_b, 3 - s.lambda_a}; }

/// Label of the pair (y, x) when (x, y) carries s.
constexpr SystemLabel reversed(SystemLabel s) { return {s.lambda_b, s.lambda_a}; }

constexpr SystemLabel rotate_right(SystemLabel s, std::size_t steps) {
  for (std::size_t i = 0; i < steps % 4; ++i) s = rotate_right(s);
  return s;
}

/// Exponent of the chain recurrence at position n (f(n) = 1 for n = 0, 3 mod 4).
constexpr int recurrence_exponent(std::int64_t n) {
  const auto r = ((n % 4) + 4) % 4;
  return (r == 0 || r == 3) ? 1 : 2;
}

inline bool check_system(const Int& x, const Int& y, SystemLabel s) {
  if (x == 0 || y == 0) return false;
  return divides(x, cubic(y, s.lambda_a)) && divides(y, cubic(x, s.lambda_b));
}

struct SolutionPair {
  Int x;
  Int y;
  SystemLabel system;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

inline bool is_valid(const SolutionPair& p) { return check_system(p.x, p.y, p.system); }

/// (x, y) -> (y, w) with x * w = y^3 + y^a + 1.
inline SolutionPair extend_right(const SolutionPair& p) {
  if (p.x == 0 || p.y == 0) throw Error(ErrorKind::NotDivisible, "zero term in pair");
  return {p.y, exact_div(cubic(p.y, p.system.lambda_a), p.x), rotate_right(p.system)};
}

/// (x, y) -> (v, x) with v * y = x^3 + x^b + 1.
inline SolutionPair extend_left(const SolutionPair& p) {
  if (p.x == 0 || p.y == 0) throw Error(ErrorKind::NotDivisible, "zero term in pair");
  return {exact_div(cubic(p.x, p.system.lambda_b), p.y), p.x, rotate_left(p.system)};
}

/// z with x^3 + y^3 + x^b + y^a + 1 = x * y * z.
inline Int quotient_z(const SolutionPair& p) {
  const Int& x = p.x;
  const Int& y = p.y;
  const Int numerator = x * x * x + y * y * y + (p.system.lambda_b == 1 ? x : x * x) +
                        (p.system.lambda_a == 1 ? y : y * y) + 1;
  return exact_div(numerator, x * y);
}

/// Three consecutive chain terms; `system` belongs to the pair (left, center).
struct Triple {
  Int left;
  Int center;
  Int right;
  SystemLabel system;

  friend bool operator==(const Triple&, const Triple&) = default;
};

inline bool satisfies_recurrence(const Triple& t) {
  return t.left * t.right == cubic(t.center, t.system.lambda_a);
}

/// Recurrence plus both pair conditions.
inline bool verify_triple(const Triple& t) {
  return satisfies_recurrence(t) && check_system(t.left, t.center, t.system) &&
         check_system(t.center, t.right, rotate_right(t.system));
}

struct Violation {
  std::size_t index = 0;  // term index the violation is reported at
  std::string reason;
};

class ChainWindow {
 public:
  ChainWindow() = default;
  ChainWindow(std::vector<Int> terms, SystemLabel first_system)
      : terms_(std::move(terms)), first_system_(first_system) {
    if (terms_.size() < 2) throw Error(ErrorKind::InvalidArgument, "a window needs two terms");
  }

  const std::vector<Int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Int& operator[](std::size_t i) const { return terms_[i]; }
  SystemLabel first_system() const { return first_system_; }

  /// Label of the pair (terms[i], terms[i + 1]).
  SystemLabel system_at(std::size_t i) const { return rotate_right(first_system_, i); }

  SolutionPair pair(std::size_t i) const { return {terms_[i], terms_[i + 1], system_at(i)}; }

  Triple triple(std::size_t i) const {
    return {terms_[i], terms_[i + 1], terms_[i + 2], system_at(i)};
  }

  ChainWindow reversed() const {
    std::vector<Int> r(terms_.rbegin(), terms_.rend());
    return {std::move(r), quadchain::reversed(system_at(terms_.size() - 2))};
  }

  void extend_left(std::size_t steps) {
    SolutionPair p = pair(0);
    std::vector<Int> prefix;
    prefix.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
      p = quadchain::extend_left(p);
      prefix.push_back(p.x);
    }
    terms_.insert(terms_.begin(), prefix.rbegin(), prefix.rend());
    first_system_ = p.system;
  }

  void extend_right(std::size_t steps) {
    SolutionPair p = pair(terms_.size() - 2);
    for (std::size_t i = 0; i < steps; ++i) {
      p = quadchain::extend_right(p);
      terms_.push_back(p.y);
    }
  }

  /// First invariant violation, scanning left to right.
  std::optional<Violation> validate() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i] == 0) return Violation{i, "zero term"};
    }
    for (std::size_t i = 0; i + 1 < terms_.size(); ++i) {
      const SolutionPair p = pair(i);
      if (!check_system(p.x, p.y, p.system)) {
        return Violation{i + 1, "pair (" + std::to_string(i) + ", " + std::to_string(i + 1) +
                                    ") does not satisfy " + p.system.name()};
      }
      if (gcd(p.x, p.y) != 1) {
        return Violation{i + 1, "pair (" + std::to_string(i) + ", " + std::to_string(i + 1) +
                                    ") is not coprime"};
      }
    }
    for (std::size_t i = 1; i + 1 < terms_.size(); ++i) {
      if (!satisfies_recurrence(triple(i - 1))) {
        return Violation{i, "recurrence fails at term " + std::to_string(i)};
      }
    }
    return std::nullopt;
  }

  bool is_valid() const { return !validate().has_value(); }

  friend bool operator==(const ChainWindow&, const ChainWindow&) = default;

 private:
  std::vector<Int> terms_;
  SystemLabel first_system_;
};

/// Window of length 2 + left_steps + right_steps around the seed pair.
inline ChainWindow generate_window(const SolutionPair& seed, std::size_t left_steps,
                                   std::size_t right_steps) {
  if (!is_valid(seed)) {
    throw Error(ErrorKind::NotDivisible, "(" + to_decimal(seed.x) + ", " + to_decimal(seed.y) +
                                             ") is not a solution of " + seed.system.name());
  }
  ChainWindow w({seed.x, seed.y}, seed.system);
  w.extend_left(left_steps);
  w.extend_right(right_steps);
  return w;
}

/// Extends each end until its outermost term reaches |term| >= threshold.
inline ChainWindow grow_until(ChainWindow w, const Int& threshold, std::size_t max_steps = 64) {
  std::size_t steps = 0;
  while (abs(w[0]) < threshold) {
    if (++steps > max_steps) throw Error(ErrorKind::StepBudgetExceeded, "left end never grows");
    w.extend_left(1);
  }
  steps = 0;
  while (abs(w[w.size() - 1]) < threshold) {
    if (++steps > max_steps) throw Error(ErrorKind::StepBudgetExceeded, "right end never grows");
    w.extend_right(1);
  }
  return w;
}

struct LeastElementReport {
  Int value;
  std::size_t offset = 0;  // index into `window`
  bool trivial = false;
  ChainWindow window;      // the examined window
};

/// Walks toward decreasing absolute values until the smallest term has larger
/// neighbours on both sides. Chains containing a term of absolute value 1 are
/// reported as trivial, represented by the unit term nearest the window centre.
inline LeastElementReport least_element(const SolutionPair& seed, std::size_t max_steps = 256) {
  ChainWindow w = generate_window(seed, 0, 0);
  for (std::size_t step = 0;; ++step) {
    const auto& t = w.terms();
    std::optional<std::size_t> unit;
    const double centre = (static_cast<double>(t.size()) - 1.0) / 2.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (abs(t[i]) == 1 &&
          (!unit || std::abs(static_cast<double>(i) - centre) <
                        std::abs(static_cast<double>(*unit) - centre))) {
        unit = i;
      }
    }
    if (unit) return {t[*unit], *unit, true, w};

    std::size_t k = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (abs(t[i]) < abs(t[k])) k = i;
    }
    if (step >= max_steps) {
      throw Error(ErrorKind::StepBudgetExceeded, "least element not reached within budget");
    }
    if (k == 0) {
      w.extend_left(1);
    } else if (k == t.size() - 1) {
      w.extend_right(1);
    } else {
      if (!(abs(t[k - 1]) > abs(t[k]) && abs(t[k + 1]) > abs(t[k]))) {
        throw Error(ErrorKind::StepBudgetExceeded, "absolute values are not unimodal");
      }
      return {t[k], k, false, w};
    }
  }
}

inline LeastElementReport least_element(const ChainWindow& w, std::size_t max_steps = 256) {
  return least_element(w.pair(0), max_steps);
}

namespace detail {

// Window holding the least-element region plus `radius` terms of absolute
// value > 1 on each side of it.
inline ChainWindow anchored_window(const ChainWindow& source, std::size_t radius,
                                   std::size_t max_steps) {
  LeastElementReport report = least_element(source, max_steps);
  ChainWindow w = std::move(report.window);
  auto is_anchor = [&](const Int& v) { return report.trivial ? abs(v) == 1 : v == report.value; };
  // A trivial chain's unit run may continue past the examined window.
  std::size_t budget = max_steps;
  while (report.trivial && (abs(w[0]) == 1 || abs(w[w.size() - 1]) == 1)) {
    if (budget-- == 0) throw Error(ErrorKind::StepBudgetExceeded, "unit run unbounded");
    if (abs(w[0]) == 1) {
      w.extend_left(1);
    } else {
      w.extend_right(1);
    }
  }
  const auto first = std::find_if(w.terms().begin(), w.terms().end(), is_anchor) - w.terms().begin();
  const auto last = w.terms().rend() - std::find_if(w.terms().rbegin(), w.terms().rend(), is_anchor) - 1;
  const auto have_left = static_cast<std::size_t>(first);
  const auto have_right = w.size() - 1 - static_cast<std::size_t>(last);
  if (have_left < radius) w.extend_left(radius - have_left);
  if (have_right < radius) w.extend_right(radius - have_right);
  return w;
}

inline bool aligned_equal(const ChainWindow& a, const ChainWindow& b, std::ptrdiff_t shift) {
  // Position i of a is compared with position i + shift of b.
  const auto a_size = static_cast<std::ptrdiff_t>(a.size());
  const auto b_size = static_cast<std::ptrdiff_t>(b.size());
  const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -shift);
  const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(a_size, b_size - shift);
  if (hi - lo < 2) return false;
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i + shift)]) return false;
  }
  for (std::ptrdiff_t i = lo; i + 1 < hi; ++i) {
    if (a.system_at(static_cast<std::size_t>(i)) != b.system_at(static_cast<std::size_t>(i + shift))) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Whether two windows belong to the same chain up to shift and reflection.
/// Both are re-anchored on their least-element regions and extended `radius`
/// terms beyond them; every alignment that maps a minimal-|term| position of
/// one onto the other is then compared over the full overlap, systems
/// included.
inline bool same_chain(const ChainWindow& a, const ChainWindow& b, std::size_t radius = 6,
                       std::size_t max_steps = 256) {
  const ChainWindow wa = detail::anchored_window(a, radius, max_steps);
  const ChainWindow wb_forward = detail::anchored_window(b, radius, max_steps);
  auto minimal_positions = [](const ChainWindow& w) {
    Int least = abs(w[0]);
    for (const auto& t : w.terms()) least = std::min<Int>(least, abs(t));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (abs(w[i]) == least) out.push_back(i);
    }
    return out;
  };
  const auto anchors_a = minimal_positions(wa);
  for (const ChainWindow& wb : {wb_forward, wb_forward.reversed()}) {
    for (std::size_t j : minimal_positions(wb)) {
      for (std::size_t i : anchors_a) {
        const auto shift = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(i);
        if (detail::aligned_equal(wa, wb, shift)) return true;
      }
    }
  }
  return false;
}

/// Canonical form for deduplication: `radius` terms on each side of the
/// least element, oriented so that the least element's right neighbour has
/// absolute value <= its left neighbour's; ties (and trivial chains) pick the
/// lexicographically smaller term list.
inline ChainWindow canonical_window(const ChainWindow& source, std::size_t radius = 3,
                                    std::size_t max_steps = 256) {
  LeastElementReport report = least_element(source, max_steps);
  ChainWindow w = std::move(report.window);
  std::size_t k = report.offset;
  if (k < radius) {
    w.extend_left(radius - k);
    k = radius;
  }
  if (w.size() - 1 - k < radius) w.extend_right(radius - (w.size() - 1 - k));
  std::vector<Int> terms(w.terms().begin() + static_cast<std::ptrdiff_t>(k - radius),
                         w.terms().begin() + static_cast<std::ptrdiff_t>(k + radius + 1));
  const ChainWindow centred(std::move(terms), w.system_at(k - radius));
  const ChainWindow flipped = centred.reversed();
  if (!report.trivial && radius > 0) {
    const Int left = abs(centred[radius - 1]);
    const Int right = abs(centred[radius + 1]);
    if (right < left) return centred;
    if (left < right) return flipped;
  }
  return std::lexicographical_compare(flipped.terms().begin(), flipped.terms().end(),
                                      centred.terms().begin(), centred.terms().end())
             ? flipped
             : centred;
}

/// Orientation used for display: the end with the smaller absolute value goes
/// on the left; ties go to the lexicographically smaller term list.
inline ChainWindow oriented_for_display(const ChainWindow& w) {
  const ChainWindow r = w.reversed();
  const Int first = abs(w[0]);
  const Int last = abs(w[w.size() - 1]);
  if (first != last) return first < last ? w : r;
  return std::lexicographical_compare(r.terms().begin(), r.terms().end(), w.terms().begin(),
                                      w.terms().end())
             ? r
             : w;
}

/// Longest run of consecutive terms not divisible by m.
inline std::size_t longest_run_avoiding(const ChainWindow& w, const Int& m) {
  std::size_t best = 0, current = 0;
  for (const auto& t : w.terms()) {
    current = divides(m, t) ? 0 : current + 1;
    best = std::max(best, current);
  }
  return best;
}

}  // namespace quadchain
