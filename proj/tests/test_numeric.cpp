#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "spherotrop/amoeba.hpp"
#include "spherotrop/error.hpp"
#include "spherotrop/svd.hpp"
#include "support/builders.hpp"

using namespace spherotrop;
using testing_support::M;
using testing_support::P;
using testing_support::Q;
using testing_support::S;
using testing_support::T;

namespace {

using cd = std::complex<double>;

std::vector<double> eigen_singular_values(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.n, m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) e(i, j) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  std::vector<double> out(svd.singularValues().data(), svd.singularValues().data() + m.n);
  std::sort(out.begin(), out.end());
  return out;
}

SeriesMatrix fig1() { return M({{S({{0, 1}, {1, 1}}), S({{1, 1}})}, {S({{1, 1}}), PuiseuxSeries()}}); }

ModelFamily fig1_family() {
  std::vector<std::string> s{"s"};
  return {SphericalModel::gl(2), s,
          {P("s + 1", s, RingMode::Laurent), P("s", s, RingMode::Laurent), P("s", s, RingMode::Laurent),
           QPolynomial(1, RingMode::Laurent)}};
}

}  // namespace

TEST(Svd, Examples) {
  auto d = svd_values(ComplexMatrix(2, {3.0, 0.0, 0.0, 1.0}));
  EXPECT_NEAR(d[0], 1.0, 1e-14);
  EXPECT_NEAR(d[1], 3.0, 1e-14);
  auto p = svd_values(ComplexMatrix(2, {0.0, 2.0, 1.0, 0.0}));
  EXPECT_NEAR(p[0], 1.0, 1e-14);
  EXPECT_NEAR(p[1], 2.0, 1e-14);
}

TEST(Svd, MatchesEigenOnRandomComplexMatrices) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + trial % 5;
    ComplexMatrix m(n);
    for (auto& z : m.a) z = cd(g(rng), g(rng));
    auto ours = svd_values(m);
    auto ref = eigen_singular_values(m);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], ref[i], 1e-10 * (1.0 + ref.back()));
  }
}

TEST(Svd, SeparatedScales) {
  // Singular values spanning 16 orders of magnitude keep full relative accuracy.
  ComplexMatrix m(2, {1e-8, 1e-8, 0.0, 1e8});
  auto ours = svd_values(m);
  EXPECT_NEAR(ours[0] * ours[1], 1.0, 1e-10);
}

TEST(Svd, Errors) {
  ComplexMatrix bad(2, {std::nan(""), 0.0, 0.0, 1.0});
  EXPECT_THROW(svd_values(bad), InvalidArgument);
  SvdOptions strict;
  strict.max_sweeps = 0;
  EXPECT_THROW(svd_values(ComplexMatrix(2, {1.0, 2.0, 3.0, 4.0}), strict), NoConvergence);
}

TEST(SphericalLog, Examples) {
  for (double t : {0.5, 0.1, 0.001}) {
    auto v = spherical_log(SphericalModel::torus(2), ComplexVector{t * t, 1.0 / t}, t);
    EXPECT_NEAR(v[0], 2.0, 1e-12);
    EXPECT_NEAR(v[1], -1.0, 1e-12);
  }
  auto s = spherical_log(SphericalModel::sl2(), ComplexVector{3.0, 4.0}, 0.1);
  EXPECT_NEAR(s[0], std::log(5.0) / std::log(0.1), 1e-12);
  EXPECT_NEAR(s[0], -0.69897, 1e-5);
  double t = 0.1;
  auto g = spherical_log(SphericalModel::gl(2), ComplexMatrix(2, {t * t * t, 0.0, 0.0, t}), t);
  EXPECT_NEAR(g[0], 3.0, 1e-10);
  EXPECT_NEAR(g[1], 1.0, 1e-10);
  EXPECT_THROW(spherical_log(SphericalModel::sl2(), ComplexVector{0.0, 0.0}, 0.1), DegeneratePoint);
  EXPECT_THROW(spherical_log(SphericalModel::sl2(), ComplexVector{1.0, 0.0}, 1.5), InvalidArgument);
}

TEST(SphericalLog, UnitaryInvarianceAgainstEigen) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(3, 3);
    Eigen::MatrixXcd z(3, 3);
    for (int i = 0; i < 9; ++i) z(i / 3, i % 3) = cd(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd u = qr.householderQ();
    Eigen::MatrixXcd b = u * a * u.adjoint();
    ComplexMatrix ma(3), mb(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        ma(i, j) = a(i, j);
        mb(i, j) = b(i, j);
      }
    auto la = spherical_log(SphericalModel::gl(3), ma, 0.1);
    auto lb = spherical_log(SphericalModel::gl(3), mb, 0.1);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(la[i], lb[i], 1e-8);
  }
}

TEST(Amoeba, EmptyGridGivesEmptyCloud) {
  AmoebaCloud c = amoeba_sample(fig1_family(), 0.01, AmoebaGrid{});
  EXPECT_TRUE(c.points.empty());
  EXPECT_EQ(c.skipped, 0u);
}

TEST(Amoeba, Fig1CloudApproachesLimitAlongRealRay) {
  double t = 0.01;
  AmoebaGrid grid;
  grid.points.push_back({cd(t, 0.0)});
  AmoebaCloud c = amoeba_sample(fig1_family(), t, grid);
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_NEAR(c.points[0].coords[0], 2.0, 0.2);
  EXPECT_NEAR(c.points[0].coords[1], 0.0, 0.2);
  AmoebaCloud polar = amoeba_sample(fig1_family(), t, AmoebaGrid::polar(1, t, -3, 3, 13, 4));
  EXPECT_EQ(polar.points.size() + polar.skipped, 13u * 4u);
  for (const auto& p : polar.points) EXPECT_GE(p.coords[0], p.coords[1] - 1e-9);
}

TEST(Amoeba, TorusLineHasThreeTentacles) {
  std::vector<std::string> s{"s"};
  ModelFamily line{SphericalModel::torus(2), s, {P("s", s, RingMode::Laurent), P("-1 - s", s, RingMode::Laurent)}};
  double t = 0.001;
  AmoebaCloud c = amoeba_sample(line, t, AmoebaGrid::polar(1, t, -4, 4, 33, 8));
  bool diagonal = false, right = false, up = false;
  for (const auto& p : c.points) {
    double x = p.coords[0], y = p.coords[1];
    // Classical amoeba of 1 + z1 + z2 = 0: within a bounded distance of the tropical line.
    double d = std::min({std::abs(x - y) + std::max(0.0, x), std::abs(y) + std::max(0.0, -x),
                         std::abs(x) + std::max(0.0, -y)});
    EXPECT_LT(d, 0.5) << x << "," << y;
    if (x < -2 && y < -2) diagonal = true;
    if (x > 2 && std::abs(y) < 0.5) right = true;
    if (y > 2 && std::abs(x) < 0.5) up = true;
  }
  EXPECT_TRUE(diagonal && right && up);
}

TEST(Amoeba, CsvAndSvgShape) {
  AmoebaCloud c = amoeba_sample(fig1_family(), 0.01, AmoebaGrid::polar(1, 0.01, -1, 1, 3, 2));
  std::string csv = amoeba_csv(c);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "v1,v2,re_s1,im_s1");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), c.points.size() + 1);
  std::string svg = amoeba_svg(c, SphericalModel::gl(2));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(LimitCheck, Fig1) {
  auto r = snf_svd_limit_check(fig1(), {1e-1, 1e-2, 1e-3, 1e-4});
  EXPECT_EQ(r.factors, Q({2, 0}));
  EXPECT_TRUE(r.nonincreasing);
  EXPECT_LE(r.final_deviation, 0.05);
  EXPECT_TRUE(r.passed);
  // d1 d2 = |det| = t^2 exactly, so the log sum is exact.
  for (const auto& row : r.rows)
    EXPECT_NEAR(row.log_singular_values[0] + row.log_singular_values[1], 2.0, 1e-9);
}

TEST(LimitCheck, ExactMonomialsHaveZeroDeviation) {
  auto d = snf_svd_limit_check(SeriesMatrix::diagonal({T(1, Rational(3)), T(1, Rational(1))}), {1e-1, 1e-3});
  for (const auto& row : d.rows) EXPECT_LT(row.deviation, 1e-12);
  auto id = snf_svd_limit_check(SeriesMatrix::identity(2), {1e-1, 1e-2});
  for (const auto& row : id.rows) EXPECT_LT(row.deviation, 1e-12);
  EXPECT_TRUE(id.passed);
  EXPECT_THROW(snf_svd_limit_check(SeriesMatrix::identity(2), {1e-2, 1e-1}), InvalidArgument);
}
