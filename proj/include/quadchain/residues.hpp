#pragma once

// Modular structure of chains. If m divides u_{n-1} (or u_{n+1}) then
// u_n^3 + u_n^e + 1 = 0 (mod m), so a modulus at which neither cubic has a
// root can never divide a chain term.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quadchain/chain.hpp"
#include "quadchain/error.hpp"

namespace quadchain {

inline constexpr std::uint64_t kMaxResidueModulus = 1'000'000;

struct ModulusReport {
  std::uint64_t m = 0;
  std::vector<std::uint64_t> roots_p1;  // r^3 + r + 1 = 0 (mod m)
  std::vector<std::uint64_t> roots_p2;  // r^3 + r^2 + 1 = 0 (mod m)
  bool forbidden = false;

  friend bool operator==(const ModulusReport&, const ModulusReport&) = default;
};

inline ModulusReport modulus_report(std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  if (m > kMaxResidueModulus) {
    throw Error(ErrorKind::InvalidArgument, "modulus exceeds " + std::to_string(kMaxResidueModulus));
  }
  ModulusReport report{m, {}, {}, false};
  for (std::uint64_t r = 0; r < m; ++r) {
    const std::uint64_t r2 = r * r % m;
    const std::uint64_t r3 = r2 * r % m;
    if ((r3 + r + 1) % m == 0) report.roots_p1.push_back(r);
    if ((r3 + r2 + 1) % m == 0) report.roots_p2.push_back(r);
  }
  report.forbidden = report.roots_p1.empty() && report.roots_p2.empty();
  return report;
}

/// All forbidden m in [2, limit], ascending.
inline std::vector<std::uint64_t> forbidden_moduli(std::uint64_t limit) {
  if (limit < 2) throw Error(ErrorKind::InvalidArgument, "limit must be at least 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 2; m <= limit; ++m) {
    if (modulus_report(m).forbidden) out.push_back(m);
  }
  return out;
}

/// Longest possible run of consecutive chain terms that are all nonzero mod 3.
///
/// Nodes are (a, b, phase): a = u_phase, b = u_{phase+1} mod 3, both nonzero,
/// phase taken mod 4. The successor c = u_{phase+2} solves
/// a c = b^3 + b^f(phase+1) + 1 (mod 3) and must itself be nonzero. The
/// answer is the longest path length (in edges) plus the two starting terms.
inline std::size_t mod3_run_bound() {
  auto index = [](int a, int b, int phase) { return ((a - 1) * 2 + (b - 1)) * 4 + phase; };
  constexpr int kNodes = 16;
  std::array<int, kNodes> next{};
  next.fill(-1);
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int phase = 0; phase < 4; ++phase) {
        const int e = recurrence_exponent(phase + 1);
        const int rhs = (b * b * b + (e == 1 ? b : b * b) + 1) % 3;
        // a is a unit mod 3 and its own inverse.
        const int c = (rhs * a) % 3;
        if (c != 0) next[index(a, b, phase)] = index(b, c, (phase + 1) % 4);
      }
    }
  }
  // Out-degree is at most one, so the longest path from a node is a walk
  // along `next`; revisiting a node means an unbounded run.
  std::size_t longest = 0;
  for (int start = 0; start < kNodes; ++start) {
    std::array<bool, kNodes> seen{};
    std::size_t edges = 0;
    for (int node = start; next[node] != -1; node = next[node]) {
      seen[node] = true;
      if (seen[next[node]]) {
        throw Error(ErrorKind::UnboundedRun, "cycle of nonzero residues mod 3");
      }
      ++edges;
    }
    longest = std::max(longest, edges);
  }
  return longest + 2;
}

}  // namespace quadchain
