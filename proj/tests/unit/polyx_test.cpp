#include "stirforest/errors.hpp"
#include "stirforest/polyx.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace sf {
namespace {

IntPolynomial P(std::initializer_list<long long> c) { return IntPolynomial(c); }

IntPolynomial random_poly(std::mt19937& rng, std::size_t len, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<BigInt> c(len);
  for (auto& v : c) v = d(rng);
  return IntPolynomial(std::move(c));
}

TEST(IntPolynomial, CanonicalFormStripsTrailingZeros) {
  EXPECT_EQ(P({1, 2, 0, 0}).coeffs().size(), 2u);
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({0, 0}).degree(), IntPolynomial::kZeroDegree);
  EXPECT_EQ(P({}).to_text(), "[]");
  EXPECT_EQ(P({}).to_pretty(), "0");
}

TEST(IntPolynomial, TextForms) {
  EXPECT_EQ(P({1, 10, 4}).to_text(), "[1,10,4]");
  EXPECT_EQ(P({1, 10, 4}).to_pretty(), "1 + 10x + 4x^2");
  EXPECT_EQ(IntPolynomial::parse(" [1, 10 ,4] "), P({1, 10, 4}));
  EXPECT_EQ(IntPolynomial::parse("[]"), P({}));
  EXPECT_EQ(IntPolynomial::parse("[0,-3]"), P({0, -3}));
  EXPECT_THROW(IntPolynomial::parse("1,2"), ParseError);
  EXPECT_THROW(IntPolynomial::parse("[1,,2]"), ParseError);
  EXPECT_THROW(IntPolynomial::parse("[1,2"), ParseError);
}

TEST(IntPolynomial, ExactBigCoefficients) {
  BigInt big = BigInt(1) << 200;
  IntPolynomial h(std::vector<BigInt>{big, 1});
  auto sq = h * h;
  EXPECT_EQ(sq.coeff(0), big * big);
  EXPECT_EQ(sq.coeff(1), 2 * big);
  EXPECT_EQ(IntPolynomial::parse(sq.to_text()), sq);
}

TEST(IntPolynomial, Arithmetic) {
  EXPECT_EQ(P({1, 1}) * P({1, 1}), P({1, 2, 1}));
  EXPECT_EQ(IntPolynomial::one_plus_x_pow(3), P({1, 3, 3, 1}));
  EXPECT_EQ(IntPolynomial::monomial(2, 5), P({0, 0, 5}));
  EXPECT_EQ(P({1, 2}) - P({1, 2}), P({}));
  EXPECT_EQ(P({1, 10, 4}).reversed(2), P({4, 10, 1}));
  EXPECT_EQ(P({1, 10, 4}).reversed(3), P({0, 4, 10, 1}));
  EXPECT_EQ(P({1, 10, 4}).shifted(1), P({0, 1, 10, 4}));
  EXPECT_EQ(P({1, 10, 4}).sum(), 15);
}

TEST(ShapeProperties, SpecExamples) {
  EXPECT_EQ(shape_properties(P({1, 7, 1}), 2), (ShapeProperties{true, true, true, true}));
  EXPECT_EQ(shape_properties(P({1}), 0), (ShapeProperties{true, true, true, true}));
  EXPECT_EQ(shape_properties(P({1, 10, 4}), 2), (ShapeProperties{false, true, true, false}));
}

TEST(ShapeProperties, NotUnimodalNotAlternating) {
  auto s = shape_properties(P({3, 1, 3}), 2);
  EXPECT_TRUE(s.symmetric);
  EXPECT_FALSE(s.unimodal);
  EXPECT_FALSE(s.alternating_increasing);
  EXPECT_FALSE(s.gamma_positive);
}

TEST(ShapeProperties, Errors) {
  EXPECT_THROW(shape_properties(P({1, -1}), 1), DomainError);
  EXPECT_THROW(shape_properties(P({1, 2, 1}), 1), DomainError);
}

TEST(SymmetricDecompose, SpecExamples) {
  auto d = symmetric_decompose(P({1, 10, 4}), 2);
  EXPECT_EQ(d.a, P({1, 7, 1}));
  EXPECT_EQ(d.b, P({3, 3}));
  d = symmetric_decompose(P({1, 2, 1}), 2);
  EXPECT_EQ(d.a, P({1, 2, 1}));
  EXPECT_TRUE(d.b.is_zero());
  d = symmetric_decompose(P({0, 1}), 1);
  EXPECT_TRUE(d.a.is_zero());
  EXPECT_EQ(d.b, P({1}));
}

TEST(SymmetricDecompose, RejectsSmallCenter) { EXPECT_THROW(symmetric_decompose(P({1, 2, 3}), 1), DomainError); }

TEST(SymmetricDecompose, PropertyRecombinesAndIsSymmetric) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t len = 1 + trial % 9;
    auto h = random_poly(rng, len, -50, 50);
    std::size_t center = len - 1 + trial % 3;
    auto d = symmetric_decompose(h, center);
    EXPECT_EQ(d.a + d.b.shifted(1), h);
    EXPECT_TRUE(is_symmetric(d.a, center));
    if (center >= 1) EXPECT_TRUE(is_symmetric(d.b, center - 1));
  }
}

TEST(GammaExpand, SpecExamples) {
  EXPECT_EQ(gamma_expand(P({1, 7, 1}), 2).gamma, (std::vector<BigInt>{1, 5}));
  EXPECT_EQ(gamma_expand(P({0, 3, 3}), 3).gamma, (std::vector<BigInt>{0, 3}));
  EXPECT_EQ(gamma_expand(P({0, 27, 108, 27}), 4).gamma, (std::vector<BigInt>{0, 27, 54}));
}

TEST(GammaExpand, ZeroPolynomialIsAllZero) {
  auto g = gamma_expand(P({}), 4);
  EXPECT_EQ(g.gamma, (std::vector<BigInt>{0, 0, 0}));
}

TEST(GammaExpand, AsymmetricInputRejected) { EXPECT_THROW(gamma_expand(P({1, 10, 4}), 2), DomainError); }

TEST(GammaCompose, SpecExamples) {
  EXPECT_EQ(gamma_compose({2, {1, 5}}), P({1, 7, 1}));
  EXPECT_EQ(gamma_compose({0, {1}}), P({1}));
  EXPECT_EQ(gamma_compose({3, {0, 9}}), P({0, 9, 9}));
}

TEST(GammaCompose, PropertyRoundTrip) {
  std::mt19937 rng(7);
  for (std::size_t center = 0; center <= 9; ++center) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<BigInt> g(center / 2 + 1);
      std::uniform_int_distribution<int> d(-20, 20);
      for (auto& v : g) v = d(rng);
      GammaExpansion e{center, g};
      auto h = gamma_compose(e);
      EXPECT_TRUE(is_symmetric(h, center));
      EXPECT_EQ(gamma_expand(h, center), e);
    }
  }
}

TEST(SameGammaEntries, IgnoresTrailingZeros) {
  EXPECT_TRUE(same_gamma_entries({1, 5, 0}, {1, 5}));
  EXPECT_TRUE(same_gamma_entries({}, {0, 0}));
  EXPECT_FALSE(same_gamma_entries({1, 5}, {1, 4}));
}

TEST(Egf, SpecExamples) {
  auto k2 = egf_one_over_k_eulerian(2, 3);
  ASSERT_EQ(k2.size(), 4u);
  EXPECT_EQ(k2[0], P({1}));
  EXPECT_EQ(k2[1], P({1}));
  EXPECT_EQ(k2[2], P({1, 2}));
  EXPECT_EQ(k2[3], P({1, 10, 4}));
  auto k1 = egf_one_over_k_eulerian(1, 3);
  EXPECT_EQ(k1[2], P({1, 1}));
  EXPECT_EQ(k1[3], P({1, 4, 1}));
  auto k3 = egf_one_over_k_eulerian(3, 2);
  EXPECT_EQ(k3[2], P({1, 3}));
}

// Frozen from an independent binomial-series expansion.
TEST(Egf, FrozenTables) {
  const std::vector<std::vector<IntPolynomial>> expected = {
      {P({1}), P({1}), P({1, 1}), P({1, 4, 1}), P({1, 11, 11, 1}), P({1, 26, 66, 26, 1}),
       P({1, 57, 302, 302, 57, 1})},
      {P({1}), P({1}), P({1, 2}), P({1, 10, 4}), P({1, 36, 60, 8}), P({1, 116, 516, 296, 16}),
       P({1, 358, 3508, 5168, 1328, 32})},
      {P({1}), P({1}), P({1, 3}), P({1, 18, 9}), P({1, 81, 171, 27}), P({1, 336, 1926, 1296, 81}),
       P({1, 1359, 17514, 30294, 8829, 243})},
  };
  for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(egf_one_over_k_eulerian(k, 6), expected[k - 1]) << "k=" << k;
}

TEST(Egf, PropertyValueAtOneIsProduct) {
  for (unsigned k = 1; k <= 5; ++k) {
    auto table = egf_one_over_k_eulerian(k, 10);
    BigInt product = 1;
    for (unsigned n = 1; n <= 10; ++n) {
      product *= (n - 1) * k + 1;
      EXPECT_EQ(table[n].sum(), product) << "n=" << n << " k=" << k;
      EXPECT_EQ(table[n].degree(), static_cast<long>(n) - 1);
    }
  }
}

}  // namespace
}  // namespace sf
