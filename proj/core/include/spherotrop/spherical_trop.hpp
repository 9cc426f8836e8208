#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spherotrop/polyhedron.hpp"
#include "spherotrop/polynomial.hpp"
#include "spherotrop/spherical.hpp"

namespace spherotrop {

/// Borel charts of SL(2)/U: B has coordinate ring k[x, y, 1/y], B- has k[x, y, 1/x].
enum class Sl2Chart { B, BMinus };

/// Subset of Q that is a union of {0}, Q_{<0} and Q_{>0}, kept closed
/// under the rays it contains.
class RaySet1D {
 public:
  RaySet1D() = default;
  RaySet1D(bool negative, bool zero, bool positive);

  static RaySet1D empty() { return {}; }
  static RaySet1D origin() { return {false, true, false}; }
  static RaySet1D nonpositive() { return {true, true, false}; }
  static RaySet1D nonnegative() { return {false, true, true}; }
  static RaySet1D line() { return {true, true, true}; }

  bool contains(const Rational& v) const;
  RaySet1D unite(const RaySet1D& o) const { return {neg_ || o.neg_, zero_ || o.zero_, pos_ || o.pos_}; }

  /// "empty", "{0}", "Q<=0", "Q>=0", "Q".
  std::string to_string() const;
  static RaySet1D parse(const std::string& text);

  friend bool operator==(const RaySet1D&, const RaySet1D&) = default;

 private:
  bool neg_ = false, zero_ = false, pos_ = false;
};

struct InitialAndUnit {
  QPolynomial initial;
  bool is_unit = false;
};

/// Degree-graded initial form at the SL(2) valuation v and its unit test
/// in the chart's coordinate ring.
InitialAndUnit sl2_initial_and_unit(const QPolynomial& h, const Rational& v, Sl2Chart chart);

struct Sl2Hypersurface {
  RaySet1D chart_b, chart_b_minus, combined;
};

Sl2Hypersurface sl2_trop_hypersurface(const QPolynomial& f);

struct Sl2SphericalBasis {
  std::vector<QPolynomial> basis;              // reduced, degree-compatible order
  std::vector<QPolynomial> spherical_initial;  // top-degree forms, reduced
};

Sl2SphericalBasis sl2_spherical_gb(const std::vector<QPolynomial>& gens);

struct Sl2FanCells {
  std::vector<QPolynomial> negative;  // v < 0: top forms
  std::vector<QPolynomial> zero;      // v = 0: the ideal itself
  std::vector<QPolynomial> positive;  // v > 0: lowest forms
};

Sl2FanCells sl2_spherical_fan(const std::vector<QPolynomial>& gens);

/// [lowest degree, highest degree] of the support.
std::pair<long, long> delta_polytope(const QPolynomial& f);

/// Finite union of cones inside the GL(2) valuation cone {x >= y}.
struct Cone2Set {
  std::vector<Cone> pieces;  // canonical
  bool contains(const RationalVector& v) const;
  bool same_pieces(const Cone2Set& o) const;
};

/// The two worked Borel-chart hypersurfaces of GL(2) in coordinates
/// (a, b, c, d): c - 1 and d - 1 (up to a nonzero scalar).
Cone2Set gl2_borel_trop(const QPolynomial& h);

/// Parametrized family of model points: chart coordinates as Laurent
/// polynomials in the parameters.
struct ModelFamily {
  SphericalModel model;
  std::vector<std::string> params;
  std::vector<QPolynomial> coordinates;

  ModelPoint at(const std::vector<PuiseuxSeries>& values) const;
};

enum class InvalidPolicy { Throw, Skip };

struct CurveSample {
  std::vector<RationalVector> points;  // de-duplicated, sorted
  std::size_t skipped = 0;
};

CurveSample curve_sampling_trop(const ModelFamily& family, const std::vector<std::vector<PuiseuxSeries>>& substitutions,
                                InvalidPolicy policy = InvalidPolicy::Throw);

/// u = c t^a for a in {-3..3}, c in {1, 2}, for each parameter (Cartesian product).
std::vector<std::vector<PuiseuxSeries>> default_substitutions(std::size_t nparams);

}  // namespace spherotrop
