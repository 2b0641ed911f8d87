#include <gtest/gtest.h>

#include "strata/laurent.hpp"
#include "support.hpp"

using namespace strata;

namespace {

const std::vector<std::string> kNames = {"x1", "x2", "x3", "y"};

LaurentPoly random_poly(std::mt19937_64& rng, int terms, bool laurent) {
  std::uniform_int_distribution<int> e(laurent ? -2 : 0, 2), c(-5, 5);
  LaurentPoly p(4);
  for (int t = 0; t < terms; ++t) {
    Exponent x(4);
    for (auto& k : x) k = e(rng);
    p = p + LaurentPoly::monomial(x, c(rng));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng) {
  std::vector<Rational> pt;
  for (int i = 0; i < 4; ++i) pt.push_back(random_rational(rng, true));
  return pt;
}

}  // namespace

TEST(Laurent, RingAxiomsByEvaluation) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly a = random_poly(rng, 3, true), b = random_poly(rng, 3, true), c = random_poly(rng, 2, true);
    auto pt = random_point(rng);
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Laurent, ExactDivision) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly a = random_poly(rng, 3, true), b = random_poly(rng, 1 + t % 3, true);
    if (b.is_zero() || a.is_zero()) continue;
    EXPECT_EQ((a * b).divide(b), a);
  }
  LaurentPoly x1 = LaurentPoly::variable(4, 0), x2 = LaurentPoly::variable(4, 1);
  LaurentPoly one = LaurentPoly::constant(4, 1);
  EXPECT_THROW((x1 + one).divide(x1 + x2), InexactDivision);
  EXPECT_THROW(x1.divide(LaurentPoly(4)), InexactDivision);
  // Division by a monomial is always exact.
  EXPECT_EQ((x1 + one).divide(x2).evaluate({2, 4, 1, 1}), Rational(3, 4));
}

TEST(Laurent, PrintParseRoundTrip) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 300; ++t) {
    LaurentPoly a = random_poly(rng, 1 + t % 4, t % 2);
    std::string text = a.to_string(kNames);
    EXPECT_EQ(parse_laurent(text, kNames), a) << text;
  }
}

TEST(Laurent, PrintedForm) {
  LaurentPoly x1 = LaurentPoly::variable(4, 0), x2 = LaurentPoly::variable(4, 1), x3 = LaurentPoly::variable(4, 2);
  EXPECT_EQ(x1.to_string(kNames), "x1");
  EXPECT_EQ((x1 * x2 + x3).divide(x1 * x3).to_string(kNames), "(x1*x2 + x3)/(x1*x3)");
  EXPECT_EQ(LaurentPoly(4).to_string(kNames), "0");
  EXPECT_EQ(parse_laurent("(x1*x2 + x3)/x1", kNames), (x1 * x2 + x3).divide(x1));
  EXPECT_EQ(parse_laurent("x1^2 - 3*y", kNames), x1 * x1 - LaurentPoly::constant(4, 3) * LaurentPoly::variable(4, 3));
  EXPECT_EQ(parse_laurent("x1^-1", kNames), LaurentPoly::monomial({-1, 0, 0, 0}));
}

TEST(Laurent, ParseErrors) {
  EXPECT_THROW(parse_laurent("x9", kNames), LaurentParseError);
  EXPECT_THROW(parse_laurent("(x1 + ", kNames), LaurentParseError);
  EXPECT_THROW(parse_laurent("x1 ++ x2", kNames), LaurentParseError);
  EXPECT_THROW(parse_laurent("", kNames), LaurentParseError);
  EXPECT_THROW(parse_laurent("x1/(x1 + x2)", kNames), std::exception);
}

TEST(Laurent, Denominator) {
  LaurentPoly p = parse_laurent("(x1 + x2)/(x3^2*y)", kNames);
  EXPECT_EQ(p.denominator(), (Exponent{0, 0, 2, 1}));
  EXPECT_EQ(parse_laurent("x1 + 1", kNames).denominator(), (Exponent{0, 0, 0, 0}));
}

TEST(Laurent, EvaluateRejectsPoles) {
  LaurentPoly p = parse_laurent("1/x1", kNames);
  EXPECT_THROW(p.evaluate({0, 1, 1, 1}), std::domain_error);
}
