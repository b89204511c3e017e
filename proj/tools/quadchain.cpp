// quadchain: build, verify and explore 4-chains from the command line.
//
// Exit codes: 0 success, 1 mathematically negative result, 2 usage or input
// error, 3 internal error (including factorization timeouts).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quadchain/json.hpp"
#include "quadchain/quadchain.hpp"

namespace {

using quadchain::ChainWindow;
using quadchain::Error;
using quadchain::ErrorKind;
using quadchain::Int;
using quadchain::SystemLabel;
using quadchain::to_decimal;
using quadchain::json::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(quadchain::parse_int(item));
  if (out.size() != expected) {
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) +
                     " comma-separated integers, got '" + text + "'");
  }
  return out;
}

SystemLabel parse_system(const std::string& text) {
  const auto v = parse_list(text, 2, "--system");
  for (const auto& c : v) {
    if (c != 1 && c != 2) throw UsageError("--system components must be 1 or 2");
  }
  return {static_cast<int>(v[0].get_si()), static_cast<int>(v[1].get_si())};
}

quadchain::Triple parse_triple(const std::string& text, SystemLabel s, const char* what) {
  const auto v = parse_list(text, 3, what);
  return {v[0], v[1], v[2], s};
}

quadchain::FactorOptions factor_options(std::uint64_t seed) {
  quadchain::FactorOptions options;
  options.seed = seed;
  if (const char* budget = std::getenv("QUADCHAIN_FACTOR_BUDGET")) {
    try {
      options.rho_budget = std::stoull(budget);
    } catch (const std::exception&) {
      throw UsageError("QUADCHAIN_FACTOR_BUDGET must be a non-negative integer");
    }
  }
  return options;
}

std::string triple_text(const quadchain::Triple& t) {
  return "(" + to_decimal(t.left) + ", " + to_decimal(t.center) + ", " + to_decimal(t.right) + ")";
}

std::string chain_line(const ChainWindow& w) {
  std::string line = "...";
  for (const auto& t : w.terms()) line += ", " + to_decimal(t);
  return line + ", ...";
}

// Terms on one row, each pair's system centred beneath the gap between its
// two terms.
void print_window(std::ostream& os, const ChainWindow& w) {
  std::size_t width = 9;
  for (const auto& t : w.terms()) width = std::max(width, to_decimal(t).size() + 2);
  std::string terms, systems(width / 2, ' ');
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string t = to_decimal(w[i]);
    terms += std::string(width - t.size(), ' ') + t;
    if (i + 1 < w.size()) {
      const std::string s = w.system_at(i).name();
      systems += std::string(width - s.size(), ' ') + s;
    }
  }
  os << terms << '\n' << systems << '\n';
}

int cmd_extend(const std::string& pair_text, const std::string& system_text, std::size_t left,
               std::size_t right, bool as_json) {
  const auto xy = parse_list(pair_text, 2, "--pair");
  const SystemLabel s = parse_system(system_text);
  if (!quadchain::check_system(xy[0], xy[1], s)) {
    std::cerr << "(" << to_decimal(xy[0]) << ", " << to_decimal(xy[1])
              << ") is not a solution pair of " << s.name() << '\n';
    return kNegative;
  }
  const ChainWindow w = quadchain::generate_window({xy[0], xy[1], s}, left, right);
  if (as_json) {
    std::cout << quadchain::json::to_json(w).dump() << '\n';
  } else {
    print_window(std::cout, w);
  }
  return kOk;
}

int cmd_verify(const std::string& chain_file, const std::string& pair_text,
               const std::string& system_text, bool as_json) {
  ChainWindow w;
  if (!chain_file.empty()) {
    std::ifstream in(chain_file);
    if (!in) throw UsageError("cannot open " + chain_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("malformed chain file: ") + e.what());
    }
    w = quadchain::json::chain_from_json(j);
  } else {
    if (pair_text.empty() || system_text.empty()) {
      throw UsageError("verify needs --chain-file or both --pair and --system");
    }
    const auto xy = parse_list(pair_text, 2, "--pair");
    w = ChainWindow({xy[0], xy[1]}, parse_system(system_text));
  }
  const auto violation = w.validate();
  if (as_json) {
    json j = {{"valid", !violation}};
    if (violation) {
      j["index"] = violation->index;
      j["reason"] = violation->reason;
    }
    std::cout << j.dump() << '\n';
  } else if (violation) {
    std::cout << "invalid at index " << violation->index << ": " << violation->reason << '\n';
  } else {
    std::cout << "valid: " << w.size() << " terms, first pair " << w.first_system().name() << '\n';
  }
  return violation ? kNegative : kOk;
}

int cmd_siblings(const std::string& triple_text_in, const std::string& system_text,
                 std::uint64_t seed, bool as_json) {
  const quadchain::Triple base = parse_triple(triple_text_in, parse_system(system_text), "--triple");
  if (!quadchain::satisfies_recurrence(base) ||
      !quadchain::check_system(base.left, base.center, base.system)) {
    std::cerr << triple_text(base) << " is not a chain triple under " << base.system.name() << '\n';
    return kNegative;
  }
  quadchain::SiblingOptions options;
  options.factor = factor_options(seed);
  const auto reports = quadchain::find_siblings(base, options);
  const auto base_least = quadchain::least_element({base.left, base.center, base.system});

  json out = {{"base", quadchain::json::to_json(base)},
              {"base_least_element", to_decimal(base_least.value)},
              {"base_least_trivial", base_least.trivial},
              {"siblings", json::array()}};
  if (!as_json) {
    std::cout << "base " << triple_text(base) << " under " << base.system.name()
              << ", least element " << to_decimal(base_least.value)
              << (base_least.trivial ? " (trivial)" : "") << '\n';
  }
  for (const auto& r : reports) {
    const auto least = quadchain::least_element({r.sibling.left, r.sibling.center, r.sibling.system});
    const bool shares =
        !least.trivial && !base_least.trivial && least.value == base_least.value;
    json j = quadchain::json::to_json(r);
    j["least_element"] = to_decimal(least.value);
    j["least_trivial"] = least.trivial;
    j["shares_least_element"] = shares;
    out["siblings"].push_back(std::move(j));
    if (!as_json) {
      std::cout << "  v = " << to_decimal(r.sibling_value) << "  " << triple_text(r.sibling)
                << (r.via_corollary8 ? "  [t | u1 - v]" : "") << "  least "
                << to_decimal(least.value) << (least.trivial ? " (trivial)" : "")
                << (shares ? "  shares least element" : "") << '\n';
    }
  }
  if (as_json) std::cout << out.dump() << '\n';
  return kOk;
}

int cmd_third(const std::string& first_text, const std::string& second_text,
              const std::string& system_text, bool as_json) {
  const SystemLabel s = parse_system(system_text);
  const auto first = parse_triple(first_text, s, "--first");
  const auto second = parse_triple(second_text, s, "--second");
  quadchain::ThirdChainCertificate c;
  try {
    c = quadchain::build_third_chain_certificate(first, second);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::HypothesisFailed:
      case ErrorKind::InvalidArgument:
        std::cerr << e.what() << '\n';
        return kNegative;
      case ErrorKind::CentersDiffer:
      case ErrorKind::SystemsDiffer:
      case ErrorKind::InconsistentProduct:
      case ErrorKind::NotDivisible:
        throw UsageError(e.what());
      default:
        throw;
    }
  }
  if (as_json) {
    std::cout << quadchain::json::to_json(c).dump() << '\n';
  } else {
    std::cout << "u = " << to_decimal(c.u) << ", v = " << to_decimal(c.v)
              << ", t = " << to_decimal(c.t) << ", w = " << to_decimal(c.w) << " under "
              << c.system.name() << '\n'
              << "first  " << triple_text(c.first) << '\n'
              << "second " << triple_text(c.second) << '\n'
              << "third  " << triple_text(c.third) << (c.third_verified ? " verified" : " FAILS")
              << '\n'
              << "|t| prime: " << (c.hypothesis_prime ? "yes" : "no")
              << ", t does not divide u - v: " << (c.hypothesis_nondiv ? "yes" : "no") << '\n';
    if (c.congruence_holds) {
      std::cout << "residue identity mod |t|: " << (*c.congruence_holds ? "holds" : "FAILS") << '\n';
    }
  }
  return c.third_verified ? kOk : kNegative;
}

int cmd_search(std::int64_t radius, const std::string& system_text, std::size_t jobs, bool as_json) {
  std::vector<SystemLabel> systems(quadchain::kAllSystems.begin(), quadchain::kAllSystems.end());
  if (!system_text.empty()) systems = {parse_system(system_text)};
  const auto result = quadchain::search_box(radius, systems, jobs);
  if (as_json) {
    if (systems.size() == 1) {
      std::cout << quadchain::json::to_json(result, systems[0]).dump() << '\n';
    } else {
      json all = json::array();
      for (SystemLabel s : result.systems) all.push_back(quadchain::json::to_json(result, s));
      std::cout << all.dump() << '\n';
    }
    return kOk;
  }
  for (SystemLabel s : result.systems) {
    const auto pairs = result.pairs_for(s);
    std::cout << s.name() << ": " << pairs.size() << " pairs with 1 <= |x|, |y| <= " << radius << '\n';
    for (const auto& p : pairs) std::cout << "  " << to_decimal(p.x) << ", " << to_decimal(p.y) << '\n';
  }
  return kOk;
}

int cmd_residues(std::uint64_t max_m, bool as_json) {
  if (max_m < 2) throw UsageError("--max-m must be at least 2");
  if (max_m > quadchain::kMaxResidueModulus) throw UsageError("--max-m is capped at 1000000");
  json reports = json::array();
  std::vector<std::uint64_t> forbidden;
  auto join = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s.empty() ? std::string("-") : s;
  };
  for (std::uint64_t m = 2; m <= max_m; ++m) {
    const auto r = quadchain::modulus_report(m);
    if (r.forbidden) forbidden.push_back(m);
    if (as_json) {
      reports.push_back(quadchain::json::to_json(r));
    } else {
      std::cout << "m = " << m << "  x^3+x+1 roots: " << join(r.roots_p1)
                << "  x^3+x^2+1 roots: " << join(r.roots_p2) << (r.forbidden ? "  forbidden" : "")
                << '\n';
    }
  }
  if (as_json) {
    std::cout << reports.dump() << '\n';
  } else {
    std::cout << "forbidden moduli: " << join(forbidden) << '\n'
              << "longest run of terms not divisible by 3: " << quadchain::mod3_run_bound() << '\n';
  }
  return kOk;
}

int cmd_special(std::int64_t box, bool as_json) {
  const auto equal = quadchain::equal_consecutive_solutions();
  const auto constant = quadchain::constant_run_chains();
  const auto points = quadchain::palindromic_solutions(box);
  if (as_json) {
    json solutions = json::array();
    for (const auto& s : equal.solutions) {
      solutions.push_back({{"x", to_decimal(s.x)}, {"y", to_decimal(s.y)}, {"family", s.family}});
    }
    json chains = json::array(), runs = json::array(), pts = json::array();
    for (const auto& c : equal.chains) chains.push_back(quadchain::json::to_json(c));
    for (const auto& c : constant) runs.push_back(quadchain::json::to_json(c));
    for (const auto& p : points) pts.push_back(quadchain::json::to_json(p));
    json out = {{"equal_consecutive", {{"solutions", solutions}, {"chains", chains}}},
                {"constant_run", runs},
                {"palindromic", {{"box", box}, {"verified_within_box_only", true}, {"points", pts}}}};
    std::cout << out.dump() << '\n';
    return kOk;
  }
  std::cout << "Chains with three or more equal consecutive terms:\n";
  for (const auto& c : constant) std::cout << "  " << chain_line(c.window) << '\n';
  std::cout << "Solutions of x y = x^3 + x^e + 1, x != y:\n";
  for (const auto& s : equal.solutions) {
    std::cout << "  e = " << s.family << ": (x, y) = (" << to_decimal(s.x) << ", " << to_decimal(s.y)
              << ")\n";
  }
  std::cout << "Chains with exactly two equal consecutive terms:\n";
  for (std::size_t i = 0; i < equal.chains.size(); ++i) {
    std::cout << "  (" << i + 1 << ") " << chain_line(equal.chains[i].window) << '\n';
  }
  std::cout << "Integral points with |x| <= " << box << " (complete only within this box):\n";
  for (const auto& p : points) {
    std::cout << "  y^2 = x^3 + x" << (p.curve == 2 ? "^2" : "") << " + 1: (" << to_decimal(p.x) << ", "
              << to_decimal(p.y) << ") "
              << (p.generates_chain ? "generates " + chain_line(p.chain->window)
                                    : std::string("generates no chain"))
              << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, verify and explore 4-chains of the cubic systems S_{a,b}"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = quadchain::FactorOptions{}.seed;
  std::string pair, system, chain_file, triple, first, second;
  std::size_t left = 0, right = 0, jobs = 1;
  std::int64_t radius = 0, box = 100;
  std::uint64_t max_m = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Emit JSON");
    sub->add_option("--seed", seed, "Seed for randomized factorization");
  };

  auto* extend = app.add_subcommand("extend", "Generate a chain window around a seed pair");
  extend->add_option("--pair", pair, "x,y")->required();
  extend->add_option("--system", system, "a,b")->required();
  extend->add_option("--left", left, "Steps to the left");
  extend->add_option("--right", right, "Steps to the right");
  add_common(extend);

  auto* verify = app.add_subcommand("verify", "Check every chain invariant of a window");
  verify->add_option("--chain-file", chain_file, "Chain JSON file");
  verify->add_option("--pair", pair, "x,y");
  verify->add_option("--system", system, "a,b");
  add_common(verify);

  auto* siblings = app.add_subcommand("siblings", "Chains sharing the centre of a triple");
  siblings->add_option("--triple", triple, "u,t,r")->required();
  siblings->add_option("--system", system, "a,b")->required();
  add_common(siblings);

  auto* third = app.add_subcommand("third", "Third chain from two matching triples");
  third->add_option("--first", first, "u,t,p1")->required();
  third->add_option("--second", second, "v,t,p2")->required();
  third->add_option("--system", system, "a,b")->required();
  add_common(third);

  auto* search = app.add_subcommand("search", "Enumerate solution pairs in a box");
  search->add_option("--radius", radius, "Bound on |x| and |y|")->required()->check(CLI::PositiveNumber);
  search->add_option("--system", system, "a,b (default: all four)");
  search->add_option("--jobs", jobs, "Worker partitions")->check(CLI::PositiveNumber);
  add_common(search);

  auto* residues = app.add_subcommand("residues", "Roots of the two cubics modulo m");
  residues->add_option("--max-m", max_m, "Largest modulus")->required()->check(CLI::PositiveNumber);
  add_common(residues);

  auto* special = app.add_subcommand("special", "Chains with repeated or palindromic terms");
  special->add_option("--box", box, "Bound on |x| for integral points")->check(CLI::PositiveNumber);
  add_common(special);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*extend) return cmd_extend(pair, system, left, right, as_json);
    if (*verify) return cmd_verify(chain_file, pair, system, as_json);
    if (*siblings) return cmd_siblings(triple, system, seed, as_json);
    if (*third) return cmd_third(first, second, system, as_json);
    if (*search) return cmd_search(radius, system, jobs, as_json);
    if (*residues) return cmd_residues(max_m, as_json);
    if (*special) return cmd_special(box, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::InvalidArgument:
        return kUsage;
      case ErrorKind::NotDivisible:
        return kNegative;
      default:
        return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
