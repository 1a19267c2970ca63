#include <gtest/gtest.h>

#include <random>

#include "ybx/rings.hpp"

using namespace ybx;

namespace {

UniPoly random_poly(std::mt19937& gen) {
  std::uniform_int_distribution<int> deg(0, 4), num(-6, 6), den(1, 5);
  std::vector<Rational> c;
  for (int k = 0, d = deg(gen); k <= d; ++k) c.push_back(ratio(num(gen), den(gen)));
  return UniPoly(std::move(c));
}

}  // namespace

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(ratio(-4, 2)), "-2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, RatioIsCanonical) {
  EXPECT_EQ(ratio(-4, 2), Rational(-2));
  EXPECT_EQ(ratio(3, -6), ratio(-1, 2));
}

TEST(UniPoly, Basics) {
  UniPoly p = UniPoly::x() + UniPoly(1);
  UniPoly sq = p * p;
  EXPECT_EQ(sq.coeffs(), (std::vector<Rational>{1, 2, 1}));
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(sq.eval(3), 16);
  EXPECT_EQ(sq.coeff(7), 0);
}

TEST(UniPoly, ComposeAffine) {
  UniPoly x2 = UniPoly::monomial(1, 2);
  EXPECT_EQ(x2.compose_affine(2, 1).coeffs(), (std::vector<Rational>{1, 4, 4}));
  EXPECT_EQ(x2.compose_affine(0, 3), UniPoly(9));
}

TEST(UniPoly, TrailingZerosTrimmed) {
  UniPoly p(std::vector<Rational>{1, 0, 0});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(p, UniPoly(1));
}

TEST(UniPolyProperty, CommutativeRing) {
  std::mt19937 gen(7);
  for (int i = 0; i < 50; ++i) {
    UniPoly a = random_poly(gen), b = random_poly(gen), c = random_poly(gen);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).eval(ratio(2, 3)), a.eval(ratio(2, 3)) * b.eval(ratio(2, 3)));
  }
}

TEST(UniPolyProperty, ComposeAgreesWithEvaluation) {
  std::mt19937 gen(11);
  for (int i = 0; i < 30; ++i) {
    UniPoly p = random_poly(gen);
    Rational a = ratio(i - 15, 7), b = ratio(3, i + 1), v = ratio(5, 3);
    EXPECT_EQ(p.compose_affine(a, b).eval(v), p.eval(a * v + b));
  }
}

TEST(BiPoly, FromAffine) {
  BiPoly d = BiPoly::from_affine(UniPoly::monomial(1, 2), 1, -1, 0);
  EXPECT_EQ(d.coeff(2, 0), 1);
  EXPECT_EQ(d.coeff(1, 1), -2);
  EXPECT_EQ(d.coeff(0, 2), 1);
  EXPECT_EQ(d.deg1(), 2);
  EXPECT_TRUE((d - d).is_zero());
}

TEST(BiPolyProperty, ProductOfAffinePullbacks) {
  std::mt19937 gen(5);
  for (int i = 0; i < 20; ++i) {
    UniPoly p = random_poly(gen), q = random_poly(gen);
    BiPoly lhs = BiPoly::from_affine(p * q, 1, 2, -1);
    BiPoly rhs = BiPoly::from_affine(p, 1, 2, -1) * BiPoly::from_affine(q, 1, 2, -1);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(LaurentS, Powers) {
  EXPECT_EQ(LaurentS::s_pow(1) * LaurentS::s_pow(-1), LaurentS(1));
  EXPECT_EQ(LaurentS::q_pow(1), LaurentS::s_pow(2));
  LaurentS d = LaurentS::s_pow(1) - LaurentS::s_pow(-1);
  EXPECT_EQ((d * d).eval(2), ratio(9, 4));
  EXPECT_TRUE((d - d).is_zero());
  EXPECT_EQ((d * d).coeff(0), -2);
}
