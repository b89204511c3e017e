#pragma once

// Brute-force oracles: box enumeration of solution pairs, chains with two
// equal consecutive terms, and palindromic triples (y, x, y) read off the
// integral points of y^2 = x^3 + x + 1 and y^2 = x^3 + x^2 + 1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "quadchain/chain.hpp"

namespace quadchain {

inline constexpr std::int64_t kMaxSearchBox = 1'000'000;

struct SearchResult {
  std::vector<SolutionPair> pairs;  // ascending (x, y), then system order
  std::int64_t box = 0;
  std::vector<SystemLabel> systems;

  /// Pairs of one system, same order.
  std::vector<SolutionPair> pairs_for(SystemLabel s) const {
    std::vector<SolutionPair> out;
    std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
                 [s](const SolutionPair& p) { return p.system == s; });
    return out;
  }
};

namespace detail {

struct RawPair {
  std::int64_t x, y;
  std::size_t system;  // index into the requested systems
};

inline std::int64_t cubic64(std::int64_t v, int e) { return v * v * v + (e == 1 ? v : v * v) + 1; }

// Scans the x values xs[begin, end) against every y in the box.
inline std::vector<RawPair> scan_rows(const std::vector<std::int64_t>& xs, std::size_t begin,
                                      std::size_t end, const std::vector<SystemLabel>& systems) {
  std::vector<RawPair> out;
  for (std::size_t i = begin; i < end; ++i) {
    const std::int64_t x = xs[i];
    const std::int64_t cx[2] = {cubic64(x, 1), cubic64(x, 2)};
    for (const std::int64_t y : xs) {
      const std::int64_t cy[2] = {cubic64(y, 1), cubic64(y, 2)};
      for (std::size_t k = 0; k < systems.size(); ++k) {
        const SystemLabel s = systems[k];
        if (cy[s.lambda_a - 1] % x == 0 && cx[s.lambda_b - 1] % y == 0) out.push_back({x, y, k});
      }
    }
  }
  return out;
}

}  // namespace detail

/// Every (x, y) with 1 <= |x|, |y| <= box solving one of `systems`. The
/// x range is split into `partitions` contiguous slices scanned on separate
/// threads and concatenated in order, so the result does not depend on the
/// partition count.
inline SearchResult search_box(std::int64_t box, std::vector<SystemLabel> systems,
                               std::size_t partitions = 1) {
  if (box < 1) throw Error(ErrorKind::InvalidArgument, "box must be at least 1");
  if (box > kMaxSearchBox) throw Error(ErrorKind::InvalidArgument, "box too large");
  if (partitions < 1) throw Error(ErrorKind::InvalidArgument, "need at least one partition");
  std::sort(systems.begin(), systems.end(), [](SystemLabel a, SystemLabel b) {
    return std::find(kAllSystems.begin(), kAllSystems.end(), a) <
           std::find(kAllSystems.begin(), kAllSystems.end(), b);
  });
  systems.erase(std::unique(systems.begin(), systems.end()), systems.end());

  std::vector<std::int64_t> xs;
  xs.reserve(static_cast<std::size_t>(2 * box));
  for (std::int64_t v = -box; v <= box; ++v) {
    if (v != 0) xs.push_back(v);
  }

  partitions = std::min(partitions, xs.size());
  std::vector<std::vector<detail::RawPair>> slices(partitions);
  {
    std::vector<std::jthread> workers;
    workers.reserve(partitions);
    for (std::size_t p = 0; p < partitions; ++p) {
      const std::size_t begin = xs.size() * p / partitions;
      const std::size_t end = xs.size() * (p + 1) / partitions;
      workers.emplace_back([&, p, begin, end] { slices[p] = detail::scan_rows(xs, begin, end, systems); });
    }
  }

  SearchResult result;
  result.box = box;
  result.systems = systems;
  for (const auto& slice : slices) {
    for (const auto& raw : slice) {
      result.pairs.push_back({Int(static_cast<long>(raw.x)), Int(static_cast<long>(raw.y)),
                              systems[raw.system]});
    }
  }
  return result;
}

inline SearchResult search_box(std::int64_t box, std::size_t partitions = 1) {
  return search_box(box, {kAllSystems.begin(), kAllSystems.end()}, partitions);
}

/// Chains are displayed out to the first term of absolute value >= this on
/// each side.
inline const Int kDisplayThreshold = 1000;

/// x, x, y consecutive with x != y: x y = x^3 + x^family + 1.
struct EqualTermSolution {
  Int x;
  Int y;
  int family = 1;

  friend bool operator==(const EqualTermSolution&, const EqualTermSolution&) = default;
};

struct SpecialChain {
  SolutionPair seed;
  ChainWindow window;
};

struct EqualConsecutiveReport {
  std::vector<EqualTermSolution> solutions;
  std::vector<SpecialChain> chains;  // distinct chains, each with exactly two equal neighbours
};

namespace detail {

inline bool has_three_equal(const ChainWindow& w) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] == w[i + 1] && w[i + 1] == w[i + 2]) return true;
  }
  return false;
}

inline void add_distinct(std::vector<SpecialChain>& chains, SpecialChain candidate) {
  for (const auto& c : chains) {
    if (same_chain(c.window, candidate.window)) return;
  }
  chains.push_back(std::move(candidate));
}

}  // namespace detail

/// x y = x^3 + x^e + 1 forces x | 1, so x = +-1 is a complete search.
inline EqualConsecutiveReport equal_consecutive_solutions() {
  EqualConsecutiveReport report;
  for (int family = 1; family <= 2; ++family) {
    for (const Int x : {Int(1), Int(-1)}) {
      const Int y = exact_div(cubic(x, family), x);
      if (y != x) report.solutions.push_back({x, y, family});
    }
  }
  // Seeds (x, x) for each x, systems taken in rotation order from S_{2,1}.
  for (const Int x : {Int(1), Int(-1)}) {
    SystemLabel s{2, 1};
    for (int k = 0; k < 4; ++k, s = rotate_right(s)) {
      const auto sol = std::find_if(report.solutions.begin(), report.solutions.end(),
                                    [&](const EqualTermSolution& e) {
                                      return e.x == x && e.family == s.lambda_a;
                                    });
      if (sol == report.solutions.end()) continue;
      const SolutionPair seed{x, x, s};
      if (!is_valid(seed)) continue;
      ChainWindow w = grow_until(generate_window(seed, 0, 0), kDisplayThreshold);
      if (detail::has_three_equal(w)) continue;
      detail::add_distinct(report.chains, {seed, oriented_for_display(w)});
    }
  }
  return report;
}

/// The chain with three equal consecutive terms (x, x, x): x^2 = x^3 + x^e + 1.
inline std::vector<SpecialChain> constant_run_chains() {
  std::vector<SpecialChain> out;
  for (const Int x : {Int(1), Int(-1)}) {
    for (SystemLabel s : kAllSystems) {
      if (x * x != cubic(x, s.lambda_a)) continue;
      const SolutionPair seed{x, x, s};
      if (!is_valid(seed)) continue;
      ChainWindow w = grow_until(generate_window(seed, 0, 0), kDisplayThreshold);
      detail::add_distinct(out, {seed, oriented_for_display(w)});
    }
  }
  return out;
}

struct PalindromicPoint {
  Int x;
  Int y;  // y >= 0
  int curve = 1;  // 1: y^2 = x^3 + x + 1, 2: y^2 = x^3 + x^2 + 1
  /// Systems under which (+-y, x) is a solution pair.
  std::vector<SystemLabel> admitting_systems;
  bool generates_chain = false;
  std::optional<SpecialChain> chain;
};

/// Integral points with |x| <= box on both curves (complete only within the
/// box), and whether the triple (+-y, x, +-y) sits in a chain.
inline std::vector<PalindromicPoint> palindromic_solutions(std::int64_t box) {
  if (box < 1) throw Error(ErrorKind::InvalidArgument, "box must be at least 1");
  std::vector<PalindromicPoint> out;
  for (int curve = 1; curve <= 2; ++curve) {
    for (std::int64_t xv = -box; xv <= box; ++xv) {
      const Int x = static_cast<long>(xv);
      const Int rhs = cubic(x, curve);
      if (!is_perfect_square(rhs)) continue;
      PalindromicPoint point{x, isqrt(rhs), curve, {}, false, std::nullopt};
      for (const Int outer : {point.y, Int(-point.y)}) {
        if (outer == 0 || x == 0 || outer == x) continue;
        for (SystemLabel s : kAllSystems) {
          if (!check_system(outer, x, s)) continue;
          if (std::find(point.admitting_systems.begin(), point.admitting_systems.end(), s) ==
              point.admitting_systems.end()) {
            point.admitting_systems.push_back(s);
          }
          // The triple (outer, x, outer) needs outer^2 = x^3 + x^a + 1.
          if (s.lambda_a != curve || point.generates_chain) continue;
          const SolutionPair seed{outer, x, s};
          try {
            ChainWindow w = grow_until(generate_window(seed, 0, 1), kDisplayThreshold);
            point.generates_chain = true;
            point.chain = SpecialChain{seed, oriented_for_display(w)};
          } catch (const Error&) {
          }
        }
      }
      out.push_back(std::move(point));
    }
  }
  return out;
}

}  // namespace quadchain
