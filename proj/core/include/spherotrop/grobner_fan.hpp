#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spherotrop/groebner.hpp"
#include "spherotrop/polyhedron.hpp"
#include "spherotrop/term_order.hpp"

namespace spherotrop {

/// Sum of the terms of f minimizing w . alpha.
QPolynomial initial_form_weight(const QPolynomial& f, const WeightVector& w);

/// Initial forms of the reduced Groebner basis under the weight order
/// refined by `tiebreak`; they generate in_w(I) and form a Groebner basis
/// of it. Needs homogeneous generators or a max-well-ordered weight order.
std::vector<QPolynomial> initial_ideal_weight(const std::vector<QPolynomial>& gens, const WeightVector& w,
                                              const TermOrder& tiebreak);

/// in_w(I) for arbitrary w and possibly inhomogeneous I, computed through
/// the homogenization of I.
std::vector<QPolynomial> initial_ideal_any_weight(const std::vector<QPolynomial>& gens, const WeightVector& w);

/// Closed cone of weights w' with in_{w'}(g) = in_w(g) for the reduced
/// basis g under the w-refined order, in canonical form.
Cone groebner_cone(const std::vector<QPolynomial>& gens, const WeightVector& w, const TermOrder& tiebreak);

/// The same cone, read off an already computed reduced basis.
Cone groebner_cone_of_basis(const std::vector<QPolynomial>& basis, const WeightVector& w);

struct FanCone {
  Cone cone;                              // canonical
  WeightVector interior;                  // a point in the interior
  std::vector<QPolynomial> initial_ideal; // monomial generators at `interior`
};

struct GroebnerFan {
  std::size_t ambient_dim = 0;
  std::vector<FanCone> cones;                              // maximal cones
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // cones sharing a facet
};

/// All maximal cones of the Groebner fan of a homogeneous ideal in at most
/// four variables, found by crossing facets from a starting cone.
GroebnerFan groebner_fan_enumerate(const std::vector<QPolynomial>& gens);

/// Vertices of the Newton polytope of f (at most four variables), sorted.
std::vector<Exponent> newton_polytope(const QPolynomial& f);

}  // namespace spherotrop
