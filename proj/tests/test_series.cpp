#include <gtest/gtest.h>

#include <cstdlib>

#include "spherotrop/error.hpp"
#include "spherotrop/puiseux.hpp"
#include "support/builders.hpp"

using namespace spherotrop;
using testing_support::S;
using testing_support::T;

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
  EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_TRUE(b < a);
  EXPECT_THROW(a / Rational(0), DivisionByZero);
}

TEST(Series, OrderOfMixedRamification) {
  PuiseuxSeries f = T(1, Rational(3, 2)) + T(1, Rational(2));
  EXPECT_EQ(*f.ord(), Rational(3, 2));
  EXPECT_EQ(f.ramification(), 2);
  EXPECT_FALSE(PuiseuxSeries().ord().has_value());
  EXPECT_EQ(*PuiseuxSeries(5).ord(), Rational(0));
}

TEST(Series, OrderOfUnknownSeriesRaisesWithBound) {
  PuiseuxSeries f = PuiseuxSeries::big_o(Rational(3));
  try {
    (void)f.ord();
    FAIL() << "expected PrecisionLoss";
  } catch (const PrecisionLoss& e) {
    EXPECT_EQ(e.bound(), "3");
  }
}

TEST(Series, CancellationAndExactProduct) {
  PuiseuxSeries a = S({{-1, 1}, {0, 1}});
  PuiseuxSeries b = S({{-1, -1}, {1, 1}});
  EXPECT_EQ(a + b, S({{0, 1}, {1, 1}}));
  EXPECT_EQ(S({{0, 1}, {1, 1}}) * S({{0, 1}, {1, -1}}), S({{0, 1}, {2, -1}}));
}

TEST(Series, TruncationPropagation) {
  PuiseuxSeries a = S({{0, 1}}).truncated(Rational(3));
  PuiseuxSeries sum = a + T(1, Rational(5));
  ASSERT_TRUE(sum.truncation().has_value());
  EXPECT_EQ(*sum.truncation(), Rational(3));
  EXPECT_EQ(sum.terms().size(), 1u);
  // Product: min(T_a + ord b, T_b + ord a) with b exact.
  PuiseuxSeries prod = a * T(1, Rational(2));
  EXPECT_EQ(*prod.truncation(), Rational(5));
}

TEST(Series, InverseOfMonomialIsExact) {
  PuiseuxSeries inv = inverse(T(1, Rational(2)), Rational(4));
  EXPECT_TRUE(inv.is_exact());
  EXPECT_EQ(inv, T(1, Rational(-2)));
}

TEST(Series, GeometricSeriesInverse) {
  // Oracle: 1/(1-t) = sum t^j.
  PuiseuxSeries inv = inverse(S({{0, 1}, {1, -1}}), Rational(4));
  EXPECT_EQ(inv.truncated(Rational(4)), S({{0, 1}, {1, 1}, {2, 1}, {3, 1}}).truncated(Rational(4)));
  PuiseuxSeries check = inv * S({{0, 1}, {1, -1}});
  EXPECT_EQ(check.terms(), S({{0, 1}}).terms());
  EXPECT_THROW(inverse(PuiseuxSeries(), Rational(4)), DivisionByZero);
}

TEST(Series, InverseBeyondKnownPrecisionRaises) {
  PuiseuxSeries f = S({{0, 1}, {1, 1}}).truncated(Rational(2));
  EXPECT_THROW(inverse(f, Rational(5)), PrecisionLoss);
  EXPECT_NO_THROW(inverse(f, Rational(2)));
}

TEST(Series, NumericEvaluation) {
  EXPECT_NEAR(T(1, Rational(2)).evaluate(0.1).real(), 0.01, 1e-15);
  EXPECT_NEAR(S({{0, 1}, {1, 1}}).evaluate(0.5).real(), 1.5, 1e-15);
  EXPECT_NEAR(T(1, Rational(1, 2)).evaluate(0.04).real(), 0.2, 1e-15);
}

TEST(Series, RamificationIsCanonical) {
  PuiseuxSeries::Terms terms{{2, Rational(1)}, {4, Rational(3)}};
  PuiseuxSeries f = PuiseuxSeries::from_terms(4, terms);
  EXPECT_EQ(f.ramification(), 2);
  EXPECT_EQ(f, T(1, Rational(1, 2)) + T(3, Rational(1)));
}

TEST(Series, PrecisionOverride) {
  set_default_precision(Rational(7));
  EXPECT_EQ(default_precision(), Rational(7));
  set_default_precision(std::nullopt);
  if (std::getenv("SPHEROTROP_PRECISION") == nullptr) EXPECT_EQ(default_precision(), Rational(20));
  EXPECT_THROW(set_default_precision(Rational(-1)), InvalidArgument);
}
