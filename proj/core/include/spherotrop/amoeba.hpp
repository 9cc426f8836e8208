#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "spherotrop/spherical.hpp"
#include "spherotrop/spherical_trop.hpp"
#include "spherotrop/svd.hpp"

namespace spherotrop {

using ComplexVector = std::vector<std::complex<double>>;

/// Torus and SL(2) points are coordinate vectors; GL(n) points are matrices.
using NumericPoint = std::variant<ComplexVector, ComplexMatrix>;

/// Logarithm map at base t in (0, 1): torus log_t|z_i|, SL(2) log_t of the
/// Euclidean norm, GL(n) log_t of the singular values ordered decreasingly.
/// Throws DegeneratePoint off the model.
std::vector<double> spherical_log(const SphericalModel& model, const NumericPoint& p, double t);

/// Evaluate a family's chart coordinates at complex parameter values.
NumericPoint evaluate_family(const ModelFamily& family, const ComplexVector& params);

/// Sample grid: explicit parameter tuples, or a polar grid
/// s = t^rho e^{i theta} applied to every parameter.
struct AmoebaGrid {
  std::vector<ComplexVector> points;

  static AmoebaGrid polar(std::size_t nparams, double t, double rho_min, double rho_max, int rho_steps, int angles);
};

struct AmoebaPoint {
  std::vector<double> coords;
  ComplexVector params;
};

struct AmoebaCloud {
  double t = 0.0;
  std::vector<AmoebaPoint> points;
  std::size_t skipped = 0;  // degenerate samples
};

AmoebaCloud amoeba_sample(const ModelFamily& family, double t, const AmoebaGrid& grid);

std::string amoeba_csv(const AmoebaCloud& cloud);
/// Scatter plot with the valuation-cone boundary drawn for GL(2).
std::string amoeba_svg(const AmoebaCloud& cloud, const SphericalModel& model);

struct LimitRow {
  double t = 0.0;
  std::vector<double> log_singular_values;  // matched against decreasing factors
  double deviation = 0.0;                   // max_i |log_t d_i(t) - v_i|
};

struct LimitReport {
  std::vector<Rational> factors;  // decreasing
  std::vector<LimitRow> rows;
  bool nonincreasing = true;
  double final_deviation = 0.0;
  bool passed = false;  // nonincreasing and final deviation within tolerance
  double tolerance = 0.05;
};

/// Compare exact invariant factors with log_t of singular values along a
/// decreasing list of t values.
LimitReport snf_svd_limit_check(const SeriesMatrix& a, const std::vector<double>& ts, double tolerance = 0.05);

/// Slack allowed when comparing successive deviations (floating-point noise).
inline constexpr double kDeviationNoise = 1e-12;

}  // namespace spherotrop
