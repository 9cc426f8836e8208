#include <gtest/gtest.h>

#include "spherotrop/error.hpp"
#include "spherotrop/grobner_fan.hpp"
#include "spherotrop/tropical.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace spherotrop;
using testing_support::P;
using testing_support::Q;
using testing_support::S;
using testing_support::T;

namespace {

const std::vector<std::string> XY{"x", "y"};

SeriesPolynomial line_with_t() {
  SeriesPolynomial f(2);
  f.add_term({1, 0}, PuiseuxSeries(1));
  f.add_term({0, 1}, T(1, Rational(1)));
  f.add_term({0, 0}, PuiseuxSeries(1));
  return f;
}

}  // namespace

TEST(TropPoint, Examples) {
  EXPECT_EQ(trop_point({T(1, Rational(2)), T(1, Rational(-1))}), Q({2, -1}));
  EXPECT_EQ(trop_point({PuiseuxSeries(3), PuiseuxSeries(5)}), Q({0, 0}));
  EXPECT_EQ(trop_point({T(1, Rational(1, 2)) + T(1, Rational(1)), T(1, Rational(1))}),
            (RationalVector{Rational(1, 2), Rational(1)}));
  EXPECT_THROW(trop_point({PuiseuxSeries(), PuiseuxSeries(1)}), InvalidPoint);
}

TEST(TropHypersurface, TrivialLineMatchesPairOracle) {
  QPolynomial f = P("x + y + 1", XY);
  TropicalSet trop = trop_hypersurface(f);
  EXPECT_EQ(trop.pieces.size(), 3u);
  auto terms = oracle::trivially_valued(f);
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      RationalVector w{Rational(a, 2), Rational(b, 2)};
      EXPECT_EQ(trop.contains(w), oracle::on_tropical_hypersurface(terms, w)) << a << "," << b;
    }
  EXPECT_TRUE(trop.contains(Q({-2, -2})));
  EXPECT_TRUE(trop.contains(Q({3, 0})));
  EXPECT_TRUE(trop.contains(Q({0, 3})));
  EXPECT_FALSE(trop.contains(Q({1, 1})));
}

TEST(TropHypersurface, MonomialIsEmpty) {
  EXPECT_TRUE(trop_hypersurface(P("3*x^2*y", XY)).is_empty());
}

TEST(TropHypersurface, ValuedLineVertex) {
  TropicalSet trop = trop_hypersurface(line_with_t());
  std::vector<oracle::VTerm> terms{{Rational(0), {1, 0}}, {Rational(1), {0, 1}}, {Rational(0), {0, 0}}};
  EXPECT_TRUE(trop.contains(Q({0, -1})));
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) {
      RationalVector w{Rational(a, 2), Rational(b, 2)};
      EXPECT_EQ(trop.contains(w), oracle::on_tropical_hypersurface(terms, w));
    }
  // Only the vertex lies on all three pieces.
  int count = 0;
  for (const auto& piece : trop.pieces) count += piece.contains(Q({0, -1})) ? 1 : 0;
  EXPECT_EQ(count, 3);
}

TEST(InitialFormValued, Examples) {
  SeriesPolynomial f(2);
  f.add_term({1, 0}, PuiseuxSeries(1));
  f.add_term({0, 1}, T(1, Rational(1)));
  EXPECT_EQ(initial_form_valued(f, Q({0, 0})), P("x", XY));
  SeriesPolynomial g(2);
  g.add_term({1, 0}, T(1, Rational(2)));
  g.add_term({0, 1}, PuiseuxSeries(1));
  EXPECT_EQ(initial_form_valued(g, Q({-2, 0})), P("x + y", XY));
  QPolynomial h = P("x^2 + x*y + y^3", XY);
  EXPECT_EQ(initial_form_valued(to_series_polynomial(h), Q({1, 1})), initial_form_weight(h, Q({1, 1})));
}

TEST(TropMembership, Examples) {
  std::vector<QPolynomial> line{P("x + y + 1", XY)};
  EXPECT_FALSE(trop_membership(line, Q({1, 1})));
  EXPECT_TRUE(trop_membership(line, Q({0, 0})));
  EXPECT_TRUE(trop_membership(line, Q({-3, -3})));
  EXPECT_TRUE(trop_membership(line, Q({0, 2})));
  EXPECT_FALSE(trop_membership(line, Q({-1, 0})));
  for (const auto& w : {Q({0, 0}), Q({1, -1}), Q({-5, 2})}) EXPECT_FALSE(trop_membership({P("1", XY)}, w));
}

TEST(TropMembership, SaturationMatters) {
  // <x*y - x> = <x> * <y - 1>; x is a unit on the torus so only y = 1 survives.
  std::vector<QPolynomial> gens{P("x*y - x", XY)};
  EXPECT_TRUE(trop_membership(gens, Q({3, 0})));
  EXPECT_FALSE(trop_membership(gens, Q({0, 1})));
}

TEST(Fundamental, LineCurve) {
  std::vector<QPolynomial> gens{P("x + y + 1", XY)};
  TorusPoint curve{S({{0, -1}, {1, -1}}), S({{1, 1}})};
  auto report = fundamental_check(gens, {curve}, {});
  EXPECT_TRUE(report.passed);
  ASSERT_EQ(report.curve_points.size(), 1u);
  EXPECT_EQ(report.curve_points[0], Q({0, 1}));
  EXPECT_TRUE(report.curve_failures.empty());
}

TEST(Fundamental, VacuousAndExcludedGrid) {
  std::vector<QPolynomial> gens{P("x + y + 1", XY)};
  EXPECT_TRUE(fundamental_check(gens, {}, {}).passed);
  auto report = fundamental_check(gens, {}, {Q({1, 1})});
  EXPECT_TRUE(report.passed);
  EXPECT_TRUE(report.grid_members.empty());
  EXPECT_FALSE(oracle::on_tropical_hypersurface(oracle::trivially_valued(gens[0]), Q({1, 1})));
}

TEST(Fundamental, RejectsCurveOffTheVariety) {
  std::vector<QPolynomial> gens{P("x + y + 1", XY)};
  TorusPoint bad{S({{0, 1}}), S({{0, 1}})};
  EXPECT_THROW(fundamental_check(gens, {bad}, {}), CurveNotOnVariety);
}

TEST(Substitute, LaurentMonomials) {
  QPolynomial f = P("x^-1*y + 2", XY, RingMode::Laurent);
  PuiseuxSeries v = substitute(f, {T(1, Rational(2)), T(1, Rational(5))});
  EXPECT_EQ(v, S({{0, 2}, {3, 1}}));
}
