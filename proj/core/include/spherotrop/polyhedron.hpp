#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spherotrop/rational.hpp"

namespace spherotrop {

using RationalVector = std::vector<Rational>;

enum class Relation { GreaterEq, Equal };

/// normal . w + offset  >= 0  (or == 0).
struct HalfSpace {
  RationalVector normal;
  Rational offset;
  Relation relation = Relation::GreaterEq;

  Rational evaluate(const RationalVector& w) const;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Rational polyhedron in H-representation. Cones are polyhedra whose
/// constraints all have zero offset.
class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::size_t dim) : dim_(dim) {}
  Polyhedron(std::size_t dim, std::vector<HalfSpace> constraints);

  void add(HalfSpace h);
  void add_inequality(RationalVector normal, Rational offset = Rational(0));
  void add_equality(RationalVector normal, Rational offset = Rational(0));

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<HalfSpace>& constraints() const noexcept { return constraints_; }
  bool is_cone() const;

  bool contains(const RationalVector& w) const;
  /// Every constraint that is not an implicit equality holds strictly.
  bool contains_in_relative_interior(const RationalVector& w) const;

  bool is_empty() const;
  /// -1 for the empty set.
  int dimension() const;
  std::optional<RationalVector> relative_interior_point() const;

  Polyhedron intersect(const Polyhedron& o) const;

  /// Unique H-representation: affine hull in reduced row echelon form, then
  /// irredundant inequalities reduced modulo the hull, every row scaled to
  /// primitive integers and sorted. Two polyhedra are equal as sets iff
  /// their canonical forms coincide.
  Polyhedron canonical() const;
  bool same_set(const Polyhedron& o) const;

  /// Facets of a canonical polyhedron: each inequality made tight.
  std::vector<Polyhedron> facets() const;

  std::string to_string() const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  struct Analysis {
    bool empty = true;
    std::vector<bool> implicit;           // per constraint
    std::vector<RationalVector> witnesses;
    RationalVector feasible;
  };
  Analysis analyze() const;

  std::size_t dim_ = 0;
  std::vector<HalfSpace> constraints_;
};

using Cone = Polyhedron;

/// Scale to primitive integers by a positive factor.
RationalVector primitive(const RationalVector& v);

/// Rank of a list of rational vectors.
std::size_t rank(std::vector<RationalVector> rows);

}  // namespace spherotrop
