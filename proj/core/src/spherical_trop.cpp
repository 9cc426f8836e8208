#include "spherotrop/spherical_trop.hpp"

#include <algorithm>
#include <set>

#include "spherotrop/error.hpp"
#include "spherotrop/grobner_fan.hpp"
#include "spherotrop/groebner.hpp"
#include "spherotrop/tropical.hpp"

namespace spherotrop {

RaySet1D::RaySet1D(bool negative, bool zero, bool positive)
    : neg_(negative), zero_(zero || negative || positive), pos_(positive) {}

bool RaySet1D::contains(const Rational& v) const {
  int s = v.sign();
  return s < 0 ? neg_ : (s > 0 ? pos_ : zero_);
}

std::string RaySet1D::to_string() const {
  if (neg_ && pos_) return "Q";
  if (neg_) return "Q<=0";
  if (pos_) return "Q>=0";
  if (zero_) return "{0}";
  return "empty";
}

RaySet1D RaySet1D::parse(const std::string& text) {
  if (text == "Q") return line();
  if (text == "Q<=0") return nonpositive();
  if (text == "Q>=0") return nonnegative();
  if (text == "{0}") return origin();
  if (text == "empty") return empty();
  throw ParseError("unknown ray set '" + text + "'");
}

namespace {

void check_plane(const QPolynomial& h) {
  if (h.nvars() != 2) throw RankMismatch("SL(2) punctured-plane functions have two variables (x, y)");
}

QPolynomial lowest_form(const QPolynomial& h) { return h.homogeneous_component(h.min_degree()); }
QPolynomial top_form(const QPolynomial& h) { return h.homogeneous_component(h.max_degree()); }

bool is_chart_unit(const QPolynomial& g, Sl2Chart chart) {
  if (!g.is_monomial()) return false;
  const Exponent& e = g.terms().begin()->first;
  return chart == Sl2Chart::B ? e[0] == 0 : e[1] == 0;
}

}  // namespace

InitialAndUnit sl2_initial_and_unit(const QPolynomial& h, const Rational& v, Sl2Chart chart) {
  check_plane(h);
  if (h.is_zero()) throw ZeroPolynomial("initial form of the zero function");
  for (const auto& [e, c] : h.terms()) {
    if ((chart == Sl2Chart::B && e[0] < 0) || (chart == Sl2Chart::BMinus && e[1] < 0))
      throw InvalidArgument("function is not regular on the chosen Borel chart");
  }
  InitialAndUnit out;
  int s = v.sign();
  out.initial = s > 0 ? lowest_form(h) : (s < 0 ? top_form(h) : h);
  out.is_unit = is_chart_unit(out.initial, chart);
  return out;
}

Sl2Hypersurface sl2_trop_hypersurface(const QPolynomial& f) {
  check_plane(f);
  if (f.is_zero()) throw ZeroPolynomial("tropical hypersurface of the zero function");
  if (f.is_constant()) throw ConstantPolynomial("tropical hypersurface of a constant function");
  for (const auto& [e, c] : f.terms())
    if (e[0] < 0 || e[1] < 0) throw InvalidArgument("expected a polynomial in k[x, y]");
  auto chart_set = [&](Sl2Chart chart) {
    bool neg = !sl2_initial_and_unit(f, Rational(-1), chart).is_unit;
    bool zero = !sl2_initial_and_unit(f, Rational(0), chart).is_unit;
    bool pos = !sl2_initial_and_unit(f, Rational(1), chart).is_unit;
    // Membership is decided on whole rays; the origin is in the closure of
    // any nonempty ray.
    return RaySet1D(neg, zero, pos);
  };
  Sl2Hypersurface out;
  out.chart_b = chart_set(Sl2Chart::B);
  out.chart_b_minus = chart_set(Sl2Chart::BMinus);
  out.combined = out.chart_b.unite(out.chart_b_minus);
  return out;
}

Sl2SphericalBasis sl2_spherical_gb(const std::vector<QPolynomial>& gens) {
  for (const auto& g : gens) check_plane(g);
  Sl2SphericalBasis out;
  TermOrder ord = TermOrder::degree_descending(2);
  out.basis = buchberger_reduced(gens, ord);
  std::vector<QPolynomial> tops;
  for (const auto& g : out.basis) tops.push_back(top_form(g));
  out.spherical_initial = buchberger_reduced(tops, TermOrder::grevlex(2));
  return out;
}

Sl2FanCells sl2_spherical_fan(const std::vector<QPolynomial>& gens) {
  for (const auto& g : gens) check_plane(g);
  Sl2FanCells cells;
  TermOrder ord = TermOrder::degree_descending(2);
  cells.zero = buchberger_reduced(gens, ord);
  cells.negative = sl2_spherical_gb(gens).spherical_initial;
  // Lowest forms are the initial forms for the weight (1, 1).
  std::vector<QPolynomial> low = initial_ideal_any_weight(gens, {Rational(1), Rational(1)});
  cells.positive = buchberger_reduced(low, TermOrder::degree_descending(2));
  return cells;
}

std::pair<long, long> delta_polytope(const QPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("generalized Newton polytope of the zero function");
  return {f.min_degree(), f.max_degree()};
}

bool Cone2Set::contains(const RationalVector& v) const {
  return std::any_of(pieces.begin(), pieces.end(), [&](const Cone& c) { return c.contains(v); });
}

bool Cone2Set::same_pieces(const Cone2Set& o) const {
  auto key = [](const Cone2Set& s) {
    std::vector<std::string> k;
    for (const auto& p : s.pieces) k.push_back(p.canonical().to_string());
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(*this) == key(o);
}

namespace {

/// h = s (x_i - 1) for some nonzero scalar s.
bool is_coordinate_minus_one(const QPolynomial& h, std::size_t i) {
  if (h.size() != 2) return false;
  Exponent e(h.nvars(), 0);
  Rational c0 = h.coefficient(e);
  e[i] = 1;
  Rational c1 = h.coefficient(e);
  return !c0.is_zero() && c0 == -c1;
}

}  // namespace

Cone2Set gl2_borel_trop(const QPolynomial& h) {
  if (h.nvars() != 4) throw RankMismatch("GL(2) chart functions have four variables (a, b, c, d)");
  Cone2Set out;
  if (is_coordinate_minus_one(h, 2)) {
    // R1 = {(x, 0) : x >= 0}.
    Cone r1(2);
    r1.add_equality({Rational(0), Rational(1)});
    r1.add_inequality({Rational(1), Rational(0)});
    out.pieces.push_back(r1.canonical());
    return out;
  }
  if (is_coordinate_minus_one(h, 3)) {
    // Angle between R1 and R2 = {(x, x) : x <= 0}: y <= 0 and x >= y.
    Cone angle(2);
    angle.add_inequality({Rational(0), Rational(-1)});
    angle.add_inequality({Rational(1), Rational(-1)});
    out.pieces.push_back(angle.canonical());
    return out;
  }
  throw UnsupportedHypersurface("only c - 1 and d - 1 are supported; use curve sampling for other hypersurfaces");
}

ModelPoint ModelFamily::at(const std::vector<PuiseuxSeries>& values) const {
  if (values.size() != params.size()) throw RankMismatch("substitution has the wrong number of parameters");
  std::vector<PuiseuxSeries> coords;
  for (const auto& c : coordinates) {
    if (c.nvars() != params.size()) throw RankMismatch("family coordinate has the wrong number of parameters");
    coords.push_back(substitute(c, values));
  }
  return make_model_point(model, coords);
}

CurveSample curve_sampling_trop(const ModelFamily& family, const std::vector<std::vector<PuiseuxSeries>>& substitutions,
                                InvalidPolicy policy) {
  std::set<RationalVector> points;
  CurveSample out;
  for (const auto& s : substitutions) {
    try {
      points.insert(model_tropicalize(family.model, family.at(s)));
    } catch (const InvalidPoint& e) {
      if (policy == InvalidPolicy::Throw) throw;
      ++out.skipped;
    }
  }
  out.points.assign(points.begin(), points.end());
  return out;
}

std::vector<std::vector<PuiseuxSeries>> default_substitutions(std::size_t nparams) {
  std::vector<PuiseuxSeries> single;
  for (long c : {1L, 2L})
    for (long a = -3; a <= 3; ++a) single.push_back(PuiseuxSeries::monomial(Rational(c), Rational(a)));
  std::vector<std::vector<PuiseuxSeries>> out{{}};
  for (std::size_t p = 0; p < nparams; ++p) {
    std::vector<std::vector<PuiseuxSeries>> next;
    for (const auto& prefix : out)
      for (const auto& v : single) {
        auto row = prefix;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace spherotrop
