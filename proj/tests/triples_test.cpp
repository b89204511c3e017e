#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "quadchain/search.hpp"
#include "quadchain/triples.hpp"

namespace {

using quadchain::Error;
using quadchain::ErrorKind;
using quadchain::Int;
using quadchain::SystemLabel;
using quadchain::Triple;

const SystemLabel S21{2, 1};
const Triple kBase{-31, -11, 39, S21};
const Triple kSibling{13, -11, -93, S21};

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected quadchain::Error";
  return ErrorKind::InvalidArgument;
}

TEST(SiblingTest, Examples) {
  EXPECT_TRUE(quadchain::lemma7_test(kBase, 13));
  EXPECT_TRUE(quadchain::lemma7_test(kBase, -31));
  EXPECT_FALSE(quadchain::lemma7_test(kBase, 3));
  EXPECT_EQ(error_kind([] { quadchain::lemma7_test(kBase, 7); }), ErrorKind::NotAFactor);
  EXPECT_EQ(error_kind([] { quadchain::lemma7_test(kBase, 0); }), ErrorKind::NotAFactor);
}

TEST(DifferenceTest, Examples) {
  EXPECT_TRUE(quadchain::corollary8_test(kBase, 13));
  EXPECT_TRUE(quadchain::corollary8_test(kBase, -31));
  EXPECT_FALSE(quadchain::corollary8_test(kBase, 39));
  EXPECT_EQ(error_kind([] { quadchain::corollary8_test(kBase, 5); }), ErrorKind::NotAFactor);
}

TEST(DivisibilityCriterion, Examples) {
  EXPECT_TRUE(quadchain::theorem10_criterion(-17, 3, 31, -603, S21));
  // (-31, 3, -11): w = 39 / 3 = 13.
  EXPECT_FALSE(quadchain::theorem10_criterion(-31, 3, -11, 13, S21));
  EXPECT_FALSE(quadchain::theorem10_criterion(kBase, 3));
  EXPECT_TRUE(quadchain::theorem10_criterion(kBase, 13));
}

TEST(DivisibilityCriterion, BothFormsAgreeWhenCofactorIsIntegral) {
  const auto found = quadchain::search_box(20);
  for (const auto& p : found.pairs) {
    const auto w = quadchain::generate_window(p, 0, 1);
    const Triple base = w.triple(0);
    for (const Int& v : quadchain::divisors(quadchain::factorize(base.right))) {
      const Int cofactor = quadchain::exact_div(base.right, v);
      EXPECT_EQ(quadchain::theorem10_criterion(base.left, v, base.center, cofactor, base.system),
                quadchain::theorem10_criterion(base, v))
          << base.left << "," << base.center << "," << base.right << " v=" << v;
    }
  }
}

TEST(Siblings, FindsTheSecondChainThroughMinusEleven) {
  const auto reports = quadchain::find_siblings(kBase);
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [](const auto& r) { return r.sibling == kSibling; });
  ASSERT_NE(it, reports.end());
  EXPECT_EQ(it->sibling_value, 13);
  EXPECT_TRUE(it->via_corollary8);
  EXPECT_TRUE(std::any_of(reports.begin(), reports.end(),
                          [](const auto& r) { return r.sibling == kBase; }));
  EXPECT_EQ(quadchain::least_element({-31, -11, S21}).value, -11);
  EXPECT_EQ(quadchain::least_element({13, -11, S21}).value, -11);
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return abs(a.sibling_value) < abs(b.sibling_value);
  }));
}

TEST(Siblings, ThreeChainsThroughThirtyOne) {
  const auto reports = quadchain::find_siblings({3, 31, 10251, S21});
  std::vector<Int> values;
  for (const auto& r : reports) values.push_back(r.sibling_value);
  EXPECT_NE(std::find(values.begin(), values.end(), Int(603)), values.end());
  EXPECT_NE(std::find(values.begin(), values.end(), Int(-17)), values.end());
  for (const auto& r : reports) EXPECT_TRUE(quadchain::verify_triple(r.sibling));
}

TEST(Siblings, MatchesBruteForceDivisorScan) {
  const auto reports = quadchain::find_siblings(kBase);
  std::vector<long> expected;
  for (long v : oracle::divisors(-31 * 39)) {
    if ((v * v * v + 1 + v) % -11 == 0) expected.push_back(v);
  }
  std::vector<long> got;
  for (const auto& r : reports) got.push_back(r.sibling_value.get_si());
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Siblings, DivisorCapAndInvalidBase) {
  quadchain::SiblingOptions options;
  options.max_divisors = 4;
  EXPECT_EQ(error_kind([&] { quadchain::find_siblings({3, 31, 10251, S21}, options); }),
            ErrorKind::TooManyDivisors);
  EXPECT_EQ(error_kind([] { quadchain::find_siblings({-31, -11, 40, S21}); }),
            ErrorKind::InvalidArgument);
}

TEST(ThirdChain, MainInstance) {
  const auto c = quadchain::third_chain({-17, 31, -1809, S21}, {3, 31, 10251, S21});
  EXPECT_EQ(c.w, -603);
  EXPECT_EQ(c.third, (Triple{603, 31, 51, S21}));
  EXPECT_TRUE(c.hypothesis_prime);
  EXPECT_TRUE(c.hypothesis_nondiv);
  EXPECT_TRUE(c.third_verified);
  ASSERT_TRUE(c.congruence_holds.has_value());
  EXPECT_TRUE(*c.congruence_holds);
  EXPECT_TRUE(quadchain::verify_triple(c.third));
}

TEST(ThirdChain, SiblingPairFailsBecauseElevenDividesTheDifference) {
  const auto c = quadchain::build_third_chain_certificate(kSibling, kBase);
  EXPECT_EQ(c.w, 3);
  EXPECT_EQ(c.third, (Triple{-3, -11, 403, S21}));
  EXPECT_TRUE(c.hypothesis_prime);
  EXPECT_FALSE(c.hypothesis_nondiv);  // 13 - (-31) = 44 = 4 * 11
  EXPECT_FALSE(c.third_verified);
  EXPECT_FALSE(c.congruence_holds.has_value());
  // -3 * 403 = (-11)^3 + (-11)^2 + 1 holds, but -11 does not divide (-3)^3 - 3 + 1.
  EXPECT_EQ(Int(-3) * 403, quadchain::cubic(-11, 2));
  EXPECT_FALSE(quadchain::divides(-11, quadchain::cubic(-3, 1)));
  EXPECT_EQ(error_kind([] { quadchain::third_chain(kSibling, kBase); }),
            ErrorKind::HypothesisFailed);
}

TEST(ThirdChain, StructuralErrors) {
  EXPECT_EQ(error_kind([] { quadchain::third_chain(kBase, kBase); }), ErrorKind::HypothesisFailed);
  EXPECT_EQ(error_kind([] { quadchain::third_chain(kBase, {3, 31, 10251, S21}); }),
            ErrorKind::CentersDiffer);
  EXPECT_EQ(error_kind([] { quadchain::third_chain(kBase, {13, -11, -93, SystemLabel{1, 1}}); }),
            ErrorKind::SystemsDiffer);
  EXPECT_EQ(error_kind([] { quadchain::third_chain(kBase, {13, -11, -92, S21}); }),
            ErrorKind::InvalidArgument);
}

// The difference test implies the sibling test, and the divisibility criterion
// agrees with the sibling test on every divisor of small-window triples.
TEST(Properties, CriteriaAgreeOnSmallChains) {
  const auto found = quadchain::search_box(20);
  std::size_t checked = 0;
  for (const auto& p : found.pairs) {
    const auto w = quadchain::generate_window(p, 2, 2);
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      const Triple base = w.triple(i);
      const auto f = quadchain::multiply(quadchain::factorize(base.left),
                                         quadchain::factorize(base.right));
      for (const Int& v : quadchain::divisors(f)) {
        const bool lemma = quadchain::lemma7_test(base, v);
        if (quadchain::corollary8_test(base, v)) EXPECT_TRUE(lemma);
        EXPECT_EQ(quadchain::theorem10_criterion(base, v), lemma);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

}  // namespace
