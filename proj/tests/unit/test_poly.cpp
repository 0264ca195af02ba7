#include <gtest/gtest.h>

#include <random>

#include "nsg/cyclo.hpp"
#include "nsg/errors.hpp"
#include "nsg/poly.hpp"

using namespace nsg;

namespace {

IntPoly random_poly(std::mt19937_64& rng, std::size_t max_deg, long bound) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<BigInt> v(deg(rng) + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return IntPoly(std::move(v));
}

// Independent dense product for cross-checking poly_mul.
IntPoly naive_mul(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<BigInt> out(f.degree() + g.degree() + 1, 0);
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    for (std::size_t j = 0; j <= g.degree(); ++j) out[i + j] += f.coefficient(i) * g.coefficient(j);
  }
  return IntPoly(std::move(out));
}

}  // namespace

TEST(IntPoly, Basics) {
  const IntPoly zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_THROW(zero.degree(), std::domain_error);
  const IntPoly f{1, 2, 0, 0};
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f.coefficient(5), 0);
  EXPECT_EQ(IntPoly::x_pow_minus_one(3), (IntPoly{-1, 0, 0, 1}));
  EXPECT_EQ(IntPoly::monomial(2, 5), (IntPoly{0, 0, 5}));
  EXPECT_EQ((IntPoly{1, 1}).substitute_power(3), (IntPoly{1, 0, 0, 1}));
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul(IntPoly{-1, 1}, IntPoly{1, 1}), (IntPoly{-1, 0, 1}));
  const IntPoly f{3, -1, 4, 1, -5};
  EXPECT_EQ(poly_mul(f, IntPoly{1}), f);
  EXPECT_TRUE(poly_mul(f, IntPoly{}).is_zero());
  EXPECT_EQ(poly_mul(cyclotomic(14), cyclotomic(28)), inclusion_exclusion(RhoSet({4, 7})));
}

TEST(PolyMul, MatchesNaiveProduct) {
  std::mt19937_64 rng(0x5eed0002);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(rng, 30, 20);
    const auto g = random_poly(rng, 30, 20);
    ASSERT_EQ(poly_mul(f, g), naive_mul(f, g));
    ASSERT_EQ(f * g, g * f);
  }
}

TEST(PolyExactDiv, Examples) {
  EXPECT_EQ(poly_exact_div(IntPoly{-1, 0, 1}, IntPoly{-1, 1}), (IntPoly{1, 1}));
  const auto num = poly_mul(IntPoly::x_pow_minus_one(6), IntPoly::x_pow_minus_one(1));
  const auto staged = poly_exact_div(poly_exact_div(num, IntPoly::x_pow_minus_one(2)),
                                     IntPoly::x_pow_minus_one(3));
  EXPECT_EQ(staged, (IntPoly{1, -1, 1}));
  EXPECT_THROW(poly_exact_div(IntPoly::x_pow_minus_one(3), IntPoly::x_pow_minus_one(2)),
               NonZeroRemainder);
  EXPECT_THROW(poly_exact_div(IntPoly{1}, IntPoly{}), std::domain_error);
  EXPECT_THROW(poly_exact_div(IntPoly{1, 1}, IntPoly{0, 2}), NonZeroRemainder);
}

TEST(PolyExactDiv, InvertsMultiplication) {
  std::mt19937_64 rng(0x5eed0003);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(rng, 25, 50);
    auto g = random_poly(rng, 10, 3);
    ASSERT_EQ(poly_exact_div(poly_mul(f, g), g), f);
  }
}

TEST(MaxGap, Examples) {
  EXPECT_EQ(max_gap(IntPoly::monomial(4)), 0u);
  EXPECT_EQ(max_gap(IntPoly{1, 0, 0, 1, 0, -1}), 3u);
  EXPECT_EQ(max_gap(cyclotomic(15)), 2u);
  EXPECT_THROW(max_gap(IntPoly{}), std::domain_error);
}

TEST(SelfReciprocal, Examples) {
  EXPECT_TRUE(is_selfreciprocal(IntPoly{1, 3, 1}));
  EXPECT_FALSE(is_selfreciprocal(IntPoly{2, 3, 1}));
  EXPECT_TRUE(is_selfreciprocal(inclusion_exclusion(RhoSet({5, 7}))));
  EXPECT_THROW(is_selfreciprocal(IntPoly{}), std::domain_error);
}

TEST(NonzeroTerms, Examples) {
  EXPECT_TRUE(nonzero_terms(IntPoly{}).empty());
  const std::vector<Term> t{{0, 1}, {1, -1}, {2, 1}};
  EXPECT_EQ(nonzero_terms(IntPoly{1, -1, 1}), t);
  EXPECT_EQ(nonzero_terms(inclusion_exclusion(RhoSet({4, 7}))).size(), 11u);
}

TEST(Render, TextAndJson) {
  EXPECT_EQ(to_string(IntPoly{1, -1, 1}), "x^2 - x + 1");
  EXPECT_EQ(to_string(IntPoly{-1, 0, -3, 0, 1}), "x^4 - 3*x^2 - 1");
  EXPECT_EQ(to_string(IntPoly{0, 0, 3}), "3*x^2");
  EXPECT_EQ(to_string(IntPoly{0, -1}), "-x");
  EXPECT_EQ(to_string(IntPoly{}), "0");
  EXPECT_EQ(to_json_array(IntPoly{1, -1, 1}), "[1,-1,1]");
  EXPECT_EQ(to_json_array(IntPoly{}), "[]");
}
