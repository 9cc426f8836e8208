#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spherotrop/polyhedron.hpp"
#include "spherotrop/polynomial.hpp"
#include "spherotrop/term_order.hpp"

namespace spherotrop {

/// Point of the algebraic torus over the Puiseux field.
using TorusPoint = std::vector<PuiseuxSeries>;

/// Finite union of rational polyhedra with exact membership.
struct TropicalSet {
  std::size_t ambient_dim = 0;
  std::vector<Polyhedron> pieces;  // canonical, pairwise distinct

  bool contains(const RationalVector& w) const;
  bool is_empty() const { return pieces.empty(); }
  /// Same pieces, independent of order.
  bool same_pieces(const TropicalSet& o) const;
};

/// Coordinatewise ord_t; throws InvalidPoint on an exact-zero coordinate.
RationalVector trop_point(const TorusPoint& p);

/// Points where min_alpha ord(c_alpha) + w.alpha is attained at least twice.
TropicalSet trop_hypersurface(const SeriesPolynomial& f);
TropicalSet trop_hypersurface(const QPolynomial& f);

/// Residue polynomial of the terms minimizing ord(c_alpha) + w.alpha.
QPolynomial initial_form_valued(const SeriesPolynomial& f, const WeightVector& w);

/// in_w(I) contains no monomial. Generators may be Laurent polynomials.
bool trop_membership(const std::vector<QPolynomial>& gens, const WeightVector& w);

/// Substitute a torus point into f (negative exponents use series inverses).
PuiseuxSeries substitute(const QPolynomial& f, const TorusPoint& p);

struct FundamentalReport {
  bool passed = true;
  std::vector<RationalVector> curve_points;       // trop of each curve
  std::vector<RationalVector> curve_failures;     // curve points failing membership
  std::vector<RationalVector> grid_members;       // grid points passing membership
  std::vector<RationalVector> grid_failures;      // members off some generator's hypersurface
};

/// Cross-checks the fundamental theorem: tropicalized curves on V(I) pass
/// the membership test, and membership implies lying on every generator's
/// tropical hypersurface.
FundamentalReport fundamental_check(const std::vector<QPolynomial>& gens, const std::vector<TorusPoint>& curves,
                                    const std::vector<WeightVector>& grid);

}  // namespace spherotrop
