#include "spherotrop/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "spherotrop/error.hpp"
#include "spherotrop/snf.hpp"

namespace spherotrop {

namespace {

void check_base(double t) {
  if (!(t > 0.0 && t < 1.0)) throw InvalidArgument("logarithm base t must lie in (0, 1)");
}

double log_base(double value, double t) { return std::log(value) / std::log(t); }

constexpr double kDegenerate = 1e-300;

}  // namespace

std::vector<double> spherical_log(const SphericalModel& model, const NumericPoint& p, double t) {
  check_base(t);
  switch (model.kind) {
    case ModelKind::Torus: {
      const auto* z = std::get_if<ComplexVector>(&p);
      if (!z || z->size() != model.n) throw DegeneratePoint("torus point has the wrong shape");
      std::vector<double> out;
      for (const auto& c : *z) {
        double a = std::abs(c);
        if (!(a > kDegenerate) || !std::isfinite(a)) throw DegeneratePoint("torus coordinate is zero");
        out.push_back(log_base(a, t));
      }
      return out;
    }
    case ModelKind::Sl2PuncturedPlane: {
      const auto* z = std::get_if<ComplexVector>(&p);
      if (!z || z->size() != 2) throw DegeneratePoint("SL(2) point has the wrong shape");
      double norm = std::hypot(std::abs((*z)[0]), std::abs((*z)[1]));
      if (!(norm > kDegenerate) || !std::isfinite(norm)) throw DegeneratePoint("point is the origin");
      return {log_base(norm, t)};
    }
    case ModelKind::GeneralLinear: {
      const auto* m = std::get_if<ComplexMatrix>(&p);
      if (!m || m->n != model.n) throw DegeneratePoint("matrix has the wrong size");
      std::vector<double> sv = svd_values(*m);
      // Increasing singular values give decreasing log_t values.
      std::vector<double> out;
      for (double s : sv) {
        if (!(s > kDegenerate)) throw DegeneratePoint("matrix is numerically singular");
        out.push_back(log_base(s, t));
      }
      return out;
    }
  }
  throw InvalidArgument("unknown model");
}

NumericPoint evaluate_family(const ModelFamily& family, const ComplexVector& params) {
  if (params.size() != family.params.size()) throw RankMismatch("wrong number of parameter values");
  ComplexVector coords;
  for (const auto& c : family.coordinates) {
    coords.push_back(evaluate<std::complex<double>>(
        c, params, [](const Rational& r) { return std::complex<double>(r.to_double(), 0.0); },
        [](const std::complex<double>& z) {
          if (z == 0.0) throw DegeneratePoint("parameter value is zero where it is inverted");
          return 1.0 / z;
        }));
  }
  if (family.model.kind == ModelKind::GeneralLinear) return ComplexMatrix(family.model.n, coords);
  return coords;
}

AmoebaGrid AmoebaGrid::polar(std::size_t nparams, double t, double rho_min, double rho_max, int rho_steps,
                             int angles) {
  check_base(t);
  if (rho_steps < 1 || angles < 1) throw InvalidArgument("polar grid needs positive step counts");
  ComplexVector values;
  for (int i = 0; i < rho_steps; ++i) {
    double rho = rho_steps == 1 ? rho_min : rho_min + (rho_max - rho_min) * i / (rho_steps - 1);
    for (int k = 0; k < angles; ++k) {
      double theta = 2.0 * M_PI * k / angles;
      values.push_back(std::polar(std::pow(t, rho), theta));
    }
  }
  AmoebaGrid grid;
  grid.points.push_back({});
  for (std::size_t p = 0; p < nparams; ++p) {
    std::vector<ComplexVector> next;
    for (const auto& prefix : grid.points)
      for (const auto& v : values) {
        auto row = prefix;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    grid.points = std::move(next);
  }
  if (nparams == 0) grid.points.clear();
  return grid;
}

AmoebaCloud amoeba_sample(const ModelFamily& family, double t, const AmoebaGrid& grid) {
  check_base(t);
  AmoebaCloud cloud;
  cloud.t = t;
  for (const auto& params : grid.points) {
    try {
      NumericPoint p = evaluate_family(family, params);
      std::vector<double> coords = spherical_log(family.model, p, t);
      cloud.points.push_back({std::move(coords), params});
    } catch (const DegeneratePoint&) {
      ++cloud.skipped;
    }
  }
  return cloud;
}

std::string amoeba_csv(const AmoebaCloud& cloud) {
  std::ostringstream os;
  os << std::setprecision(17);
  std::size_t dims = cloud.points.empty() ? 0 : cloud.points.front().coords.size();
  std::size_t nparams = cloud.points.empty() ? 0 : cloud.points.front().params.size();
  bool first = true;
  auto sep = [&]() {
    if (!first) os << ",";
    first = false;
  };
  for (std::size_t i = 0; i < dims; ++i) {
    sep();
    os << "v" << i + 1;
  }
  for (std::size_t i = 0; i < nparams; ++i) {
    sep();
    os << "re_s" << i + 1 << ",im_s" << i + 1;
  }
  os << "\n";
  for (const auto& p : cloud.points) {
    first = true;
    for (double v : p.coords) {
      sep();
      os << v;
    }
    for (const auto& z : p.params) {
      sep();
      os << z.real() << "," << z.imag();
    }
    os << "\n";
  }
  return os.str();
}

std::string amoeba_svg(const AmoebaCloud& cloud, const SphericalModel& model) {
  const double size = 400.0, margin = 30.0;
  double lo = -1.0, hi = 1.0;
  for (const auto& p : cloud.points)
    for (double v : p.coords) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  auto sx = [&](double v) { return margin + (v - lo) / (hi - lo) * (size - 2 * margin); };
  auto sy = [&](double v) { return size - margin - (v - lo) / (hi - lo) * (size - 2 * margin); };
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << sx(lo) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(hi) << "\" y2=\"" << sy(0)
     << "\" stroke=\"gray\"/>\n";
  bool planar = model.rank() >= 2;
  if (planar)
    os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(lo) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(hi)
       << "\" stroke=\"gray\"/>\n";
  if (model.kind == ModelKind::GeneralLinear && model.n == 2)
    os << "<line x1=\"" << sx(lo) << "\" y1=\"" << sy(lo) << "\" x2=\"" << sx(hi) << "\" y2=\"" << sy(hi)
       << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& p : cloud.points) {
    double x = p.coords.at(0);
    double y = planar ? p.coords.at(1) : 0.0;
    os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"1.5\" fill=\"steelblue\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

LimitReport snf_svd_limit_check(const SeriesMatrix& a, const std::vector<double>& ts, double tolerance) {
  LimitReport report;
  report.tolerance = tolerance;
  report.factors = invariant_factors_minors(a);
  std::size_t n = a.size();
  SphericalModel model = SphericalModel::gl(n);
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i] < ts[i - 1])) throw InvalidArgument("t values must be strictly decreasing");
  double previous = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    check_base(t);
    ComplexMatrix m(n, a.evaluate(t));
    LimitRow row;
    row.t = t;
    row.log_singular_values = spherical_log(model, m, t);
    for (std::size_t i = 0; i < n; ++i)
      row.deviation = std::max(row.deviation, std::abs(row.log_singular_values[i] - report.factors[i].to_double()));
    if (row.deviation > previous + kDeviationNoise) report.nonincreasing = false;
    previous = row.deviation;
    report.rows.push_back(std::move(row));
  }
  report.final_deviation = report.rows.empty() ? 0.0 : report.rows.back().deviation;
  report.passed = report.nonincreasing && report.final_deviation <= tolerance;
  return report;
}

}  // namespace spherotrop
