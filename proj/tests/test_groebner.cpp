#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "spherotrop/error.hpp"
#include "spherotrop/groebner.hpp"
#include "support/builders.hpp"

using namespace spherotrop;
using testing_support::P;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

QPolynomial recombine(const DivisionResult& d, const std::vector<QPolynomial>& divisors) {
  QPolynomial sum = d.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) sum += d.quotients[i] * divisors[i];
  return sum;
}

}  // namespace

TEST(TermOrder, LeadingTermsUnderMinimumConvention) {
  auto [e, c] = leading_term(P("x^2 + x*y + y^3", XY), TermOrder::grlex(2));
  EXPECT_EQ(e, (Exponent{1, 1}));
  auto [m, k] = leading_term(P("7*x^3", {"x"}), TermOrder::lex(1));
  EXPECT_EQ(m, Exponent{3});
  EXPECT_EQ(k, Rational(7));
  EXPECT_EQ(leading_term(P("x + y", XY), TermOrder::lex(2)).first, (Exponent{0, 1}));
}

TEST(TermOrder, WellFoundednessClassification) {
  EXPECT_FALSE(TermOrder::grevlex(2).is_max_well_ordered());
  EXPECT_FALSE(TermOrder::lex(2).is_max_well_ordered());
  EXPECT_TRUE(TermOrder::degree_descending(3).is_max_well_ordered());
  WeightVector partial{Rational(-1), Rational(0)};
  EXPECT_FALSE(TermOrder::weight_refined(partial, TermOrder::grevlex(2)).is_max_well_ordered());
  WeightVector rest{Rational(0), Rational(-2)};
  TermOrder nested = TermOrder::weight_refined(partial, TermOrder::weight_refined(rest, TermOrder::lex(2)));
  EXPECT_TRUE(nested.is_max_well_ordered());
  WeightVector positive{Rational(1), Rational(-1)};
  EXPECT_FALSE(TermOrder::weight_refined(positive, TermOrder::degree_descending(2)).is_max_well_ordered());
}

TEST(Division, SingleStep) {
  auto d = poly_divide(P("x", XY), {P("x", XY)}, TermOrder::lex(2));
  EXPECT_EQ(d.quotients[0], P("1", XY));
  EXPECT_TRUE(d.remainder.is_zero());
  auto e = poly_divide(P("x^2 + 1", {"x"}), {P("x", {"x"})}, TermOrder::lex(1));
  EXPECT_EQ(e.remainder, P("1", {"x"}));
  EXPECT_EQ(recombine(e, {P("x", {"x"})}), P("x^2 + 1", {"x"}));
}

TEST(Division, GuardRejectsAscendingOrderOnInhomogeneousDivisor) {
  EXPECT_THROW(poly_divide(P("x^3", {"x"}), {P("x + x^2", {"x"})}, TermOrder::lex(1)), OrderNotWellFounded);
  EXPECT_NO_THROW(poly_divide(P("x^3", {"x"}), {P("x + x^2", {"x"})}, TermOrder::degree_descending(1)));
}

TEST(Buchberger, SmallExamples) {
  EXPECT_EQ(buchberger_reduced({P("x", XY)}, TermOrder::grevlex(2)), std::vector<QPolynomial>{P("x", XY)});
  auto gb = buchberger_reduced({P("x + y", XY), P("x - y", XY)}, TermOrder::grevlex(2));
  std::vector<QPolynomial> expected{P("x", XY), P("y", XY)};
  std::sort(gb.begin(), gb.end(), [](const QPolynomial& a, const QPolynomial& b) { return a.terms() < b.terms(); });
  std::sort(expected.begin(), expected.end(),
            [](const QPolynomial& a, const QPolynomial& b) { return a.terms() < b.terms(); });
  EXPECT_EQ(gb, expected);
}

TEST(Buchberger, InhomogeneousExampleUnderDegreeDescending) {
  std::vector<QPolynomial> gens{P("x^2*y - 1", XY), P("x*y^2 - 1", XY)};
  TermOrder ord = TermOrder::degree_descending(2);
  auto gb = buchberger_reduced(gens, ord);
  EXPECT_TRUE(is_groebner_basis(gb, ord));
  for (const auto& g : gens) EXPECT_TRUE(ideal_member(g, gb, ord));
  // x - y lies in the ideal: y*(x^2 y - 1) - x*(x y^2 - 1) = x - y.
  EXPECT_TRUE(ideal_member(P("x - y", XY), gb, ord));
  EXPECT_FALSE(ideal_member(P("x", XY), gb, ord));
}

TEST(Buchberger, LiteralGrevlexRejectsInhomogeneousInput) {
  std::vector<QPolynomial> gens{P("x^2*y - 1", XY), P("x*y^2 - 1", XY)};
  EXPECT_THROW(buchberger_reduced(gens, TermOrder::grevlex(2)), OrderNotWellFounded);
}

TEST(Buchberger, Membership) {
  auto gb = std::vector<QPolynomial>{P("x", XY), P("y", XY)};
  EXPECT_TRUE(ideal_member(QPolynomial(2), gb, TermOrder::grevlex(2)));
  EXPECT_TRUE(ideal_member(P("x + y", XY), gb, TermOrder::grevlex(2)));
  EXPECT_FALSE(ideal_member(P("1", XY), gb, TermOrder::degree_descending(2)));
}

TEST(Buchberger, HomogeneousIdealUnderAscendingOrders) {
  std::vector<QPolynomial> gens{P("x^2 - y*z", XYZ), P("x*y - z^2", XYZ)};
  for (const auto& ord : {TermOrder::lex(3), TermOrder::grlex(3), TermOrder::grevlex(3)}) {
    auto gb = buchberger_reduced(gens, ord);
    EXPECT_TRUE(is_groebner_basis(gb, ord)) << ord.describe();
    for (const auto& g : gens) EXPECT_TRUE(ideal_member(g, gb, ord));
  }
}

TEST(Buchberger, UnitIdeal) {
  auto gb = buchberger_reduced({P("x + 1", XY), P("x", XY)}, TermOrder::degree_descending(2));
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.front(), P("1", XY));
}

TEST(Buchberger, ShuffleInvariance) {
  std::vector<QPolynomial> gens{P("x^2 + y*z - 1", XYZ), P("x*y - z", XYZ), P("y^2 - x + 2", XYZ)};
  TermOrder ord = TermOrder::degree_descending(3);
  auto reference = buchberger_reduced(gens, ord);
  std::mt19937 rng(7);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(buchberger_reduced(gens, ord), reference);
  }
}

TEST(Homogenization, RoundTrip) {
  QPolynomial f = P("x^2 + y - 1", XY);
  QPolynomial h = homogenize(f);
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_EQ(dehomogenize(h), f);
  EXPECT_EQ(clear_denominators(P("x^-1 + y", XY, RingMode::Laurent)), P("1 + x*y", XY));
}
