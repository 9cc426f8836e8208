#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spherotrop/polyhedron.hpp"
#include "spherotrop/polynomial.hpp"
#include "spherotrop/series_matrix.hpp"
#include "spherotrop/tropical.hpp"

namespace spherotrop {

enum class MembershipKind { Interior, Face, Outside };

struct ConeMembership {
  MembershipKind kind = MembershipKind::Interior;
  std::vector<std::size_t> tight_roots;  // indices of roots with <v, beta> = 0
};

/// {v : <v, beta_i> <= 0 for every spherical root beta_i}.
class ValuationCone {
 public:
  ValuationCone() = default;
  /// Throws InvalidArgument unless the roots are linearly independent.
  ValuationCone(std::size_t rank, std::vector<RationalVector> roots);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<RationalVector>& roots() const noexcept { return roots_; }

  ConeMembership membership(const RationalVector& v) const;
  bool contains(const RationalVector& v) const { return membership(v).kind != MembershipKind::Outside; }
  Cone as_cone() const;

 private:
  std::size_t rank_ = 0;
  std::vector<RationalVector> roots_;
};

enum class ModelKind { Torus, Sl2PuncturedPlane, GeneralLinear };

/// Homogeneous space descriptor: torus (C*)^n, SL(2)/U = C^2 \ {0}, or
/// GL(n) as a (GL(n) x GL(n))-variety.
struct SphericalModel {
  ModelKind kind = ModelKind::Torus;
  std::size_t n = 1;
  ValuationCone cone;

  static SphericalModel torus(std::size_t n);
  static SphericalModel sl2();
  static SphericalModel gl(std::size_t n);
  /// "torus:n", "sl2", "gl2", "gl:n".
  static SphericalModel parse(const std::string& name);
  std::string name() const;
  /// Rank of the valuation lattice.
  std::size_t rank() const { return cone.rank(); }
  /// Number of chart coordinates (n, 2 or n^2).
  std::size_t chart_vars() const;
};

struct Sl2Point {
  PuiseuxSeries x, y;
};

using ModelPoint = std::variant<TorusPoint, Sl2Point, SeriesMatrix>;

/// Invariant valuation of the formal curve: torus ord, SL(2) min of ords,
/// GL(n) invariant factors (decreasing).
RationalVector model_tropicalize(const SphericalModel& model, const ModelPoint& point);

/// Build a model point from chart coordinates (n, 2 or n^2 values).
ModelPoint make_model_point(const SphericalModel& model, const std::vector<PuiseuxSeries>& coords);

struct SumihiroEstimate {
  std::optional<Rational> value;                     // nullopt: f vanished on every sample
  std::size_t certificate = 0;                       // samples since the minimum last changed
  std::size_t samples = 0;
  bool non_generic_warning = false;                  // certificate < samples / 2
  std::vector<std::optional<Rational>> sample_values;
};

/// min over pseudo-random g of ord f(g . point); deterministic in `seed`.
SumihiroEstimate sumihiro_estimate(const SphericalModel& model, const ModelPoint& point, const QPolynomial& f,
                                   std::size_t samples = 16, std::uint64_t seed = 0);

}  // namespace spherotrop
