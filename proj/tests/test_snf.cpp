#include <gtest/gtest.h>

#include "spherotrop/error.hpp"
#include "spherotrop/snf.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace spherotrop;
using testing_support::M;
using testing_support::Q;
using testing_support::S;
using testing_support::T;

namespace {

SeriesMatrix fig1() { return M({{S({{0, 1}, {1, 1}}), S({{1, 1}})}, {S({{1, 1}}), PuiseuxSeries()}}); }

oracle::TMatrix fig1_oracle() {
  return {{{{0, Rational(1)}, {1, Rational(1)}}, {{1, Rational(1)}}}, {{{1, Rational(1)}}, {}}};
}

Rational sum(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

TEST(SeriesMatrix, DeterminantAndMinors) {
  SeriesMatrix a = fig1();
  EXPECT_EQ(a.determinant(), S({{2, -1}}));
  EXPECT_EQ(a.minor({0}, {1}), S({{1, 1}}));
  SeriesMatrix b = M({{S({{0, 1}}), S({{0, 2}}), S({{0, 3}})},
                      {S({{0, 0}}), S({{0, 1}}), S({{0, 4}})},
                      {S({{0, 5}}), S({{0, 6}}), S({{0, 0}})}});
  EXPECT_EQ(b.determinant(), S({{0, 1}}));
  EXPECT_EQ(SeriesMatrix::identity(3) * b, b);
}

TEST(Snf, MinorsExamples) {
  EXPECT_EQ(invariant_factors_minors(SeriesMatrix::identity(3)), Q({0, 0, 0}));
  EXPECT_EQ(invariant_factors_minors(M({{PuiseuxSeries(), T(1, Rational(1))}, {T(1, Rational(2)), PuiseuxSeries()}})),
            Q({2, 1}));
  EXPECT_EQ(invariant_factors_minors(fig1()), Q({2, 0}));
  EXPECT_EQ(oracle::invariant_factors(fig1_oracle()), Q({2, 0}));
}

TEST(Snf, EliminationExamples) {
  auto diag = invariant_factors_elimination(SeriesMatrix::diagonal({T(1, Rational(3)), T(1, Rational(1))}));
  EXPECT_EQ(diag.factors, Q({3, 1}));
  auto e = invariant_factors_elimination(fig1());
  EXPECT_EQ(e.factors, Q({2, 0}));
  EXPECT_EQ(*e.left.determinant().ord(), Rational(0));
  EXPECT_EQ(*e.right.determinant().ord(), Rational(0));
  EXPECT_THROW(invariant_factors_elimination(SeriesMatrix(2)), InvalidPoint);
  EXPECT_THROW(invariant_factors_minors(SeriesMatrix(2)), InvalidPoint);
}

TEST(Snf, FactorizationReproducesInput) {
  SeriesMatrix a = M({{S({{-1, 2}, {0, 1}}), S({{1, 3}})}, {S({{0, -1}}), S({{2, 1}, {3, 1}})}});
  auto e = invariant_factors_elimination(a, Rational(10));
  SeriesMatrix prod = e.left * e.tau * e.right;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      PuiseuxSeries diff = prod.at(i, j) - a.at(i, j);
      EXPECT_TRUE(diff.terms().empty()) << i << "," << j << ": " << diff;
    }
  EXPECT_EQ(sum(e.factors), ord_det(a));
}

TEST(Snf, RamifiedEntries) {
  SeriesMatrix a = SeriesMatrix::diagonal({T(1, Rational(1, 2)), T(1, Rational(-3, 2))});
  EXPECT_EQ(invariant_factors_minors(a), (std::vector<Rational>{Rational(1, 2), Rational(-3, 2)}));
  EXPECT_EQ(invariant_factors_elimination(a).factors, invariant_factors_minors(a));
}

TEST(Snf, PrecisionLossOnHiddenMinor) {
  SeriesMatrix a = M({{S({{0, 1}}).truncated(Rational(1)), S({{0, 1}})}, {S({{0, 1}}), S({{0, 1}})}});
  EXPECT_THROW(invariant_factors_minors(a), PrecisionLoss);
}

TEST(Snf, OrdDetMatchesSumOfFactors) {
  SeriesMatrix a = fig1();
  EXPECT_EQ(ord_det(a), Rational(2));
  EXPECT_EQ(sum(invariant_factors_minors(a)), ord_det(a));
}
