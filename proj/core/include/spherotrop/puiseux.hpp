#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "spherotrop/rational.hpp"

namespace spherotrop {

/// Default relative precision used when an exact series must be expanded
/// (inverses, eliminations). Overridable through SPHEROTROP_PRECISION.
Rational default_precision();
/// Process-wide override taking priority over the environment; nullopt clears it.
void set_default_precision(std::optional<Rational> precision);

/// Truncated formal Puiseux series  sum_e c_e t^(e/k)  over the rationals.
///
/// A series is either exact (finitely many terms, no tail) or truncated,
/// meaning it is only known modulo t^T. Every stored exponent of a truncated
/// series is strictly below T. The ramification k is kept minimal, so two
/// equal series have identical representations.
class PuiseuxSeries {
 public:
  using Terms = std::map<long, Rational>;

  /// Exact zero.
  PuiseuxSeries() = default;
  /// Exact constant.
  PuiseuxSeries(const Rational& c);  // NOLINT(google-explicit-constructor)
  PuiseuxSeries(long c) : PuiseuxSeries(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c t^exponent, exact.
  static PuiseuxSeries monomial(const Rational& c, const Rational& exponent);
  /// Terms keyed by numerator e of the exponent e/k. Zero coefficients are
  /// dropped and terms at or beyond the truncation are discarded.
  static PuiseuxSeries from_terms(long ramification, Terms terms,
                                  std::optional<Rational> truncation = std::nullopt);
  /// The empty truncated series O(t^T).
  static PuiseuxSeries big_o(const Rational& truncation);

  long ramification() const noexcept { return k_; }
  const Terms& terms() const noexcept { return terms_; }
  const std::optional<Rational>& truncation() const noexcept { return trunc_; }

  bool is_exact() const noexcept { return !trunc_.has_value(); }
  bool is_exact_zero() const noexcept { return is_exact() && terms_.empty(); }
  /// No stored terms but a tail: the order of vanishing is unknown.
  bool is_unknown() const noexcept { return !is_exact() && terms_.empty(); }
  bool is_constant() const;

  /// Order of vanishing; std::nullopt stands for +infinity (exact zero).
  /// Throws PrecisionLoss when the series has no stored terms but a tail.
  std::optional<Rational> ord() const;
  /// Largest value known to bound the order from below (T for O(t^T)).
  std::optional<Rational> ord_lower_bound() const;
  /// Coefficient of t^ord; the residue used by valued initial forms.
  Rational leading_coefficient() const;
  Rational coefficient(const Rational& exponent) const;

  /// Discard everything at or beyond t^T and remember the tail.
  PuiseuxSeries truncated(const Rational& truncation) const;

  /// Sum of stored terms at real t > 0 using principal real powers.
  std::complex<double> evaluate(double t) const;
  /// Magnitude t^T of the neglected tail (0 for exact series).
  double tail_bound(double t) const;

  std::string to_string() const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries& operator+=(const PuiseuxSeries& o);
  PuiseuxSeries& operator-=(const PuiseuxSeries& o);
  PuiseuxSeries& operator*=(const PuiseuxSeries& o);
  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator*(PuiseuxSeries a, const PuiseuxSeries& b) { return a *= b; }
  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

 private:
  void normalize();

  long k_ = 1;
  Terms terms_;
  std::optional<Rational> trunc_;
};

enum class SeriesOp { Add, Sub, Mul };

/// Ring operation with the truncation propagation rule: additive results
/// are known to min(T_a, T_b), products to min(T_a + ord b, T_b + ord a).
PuiseuxSeries combine(SeriesOp op, const PuiseuxSeries& a, const PuiseuxSeries& b);

/// g with f g = 1 modulo t^target. The result is truncated at target - ord f
/// unless f is an exact monomial, whose inverse is exact.
PuiseuxSeries inverse(const PuiseuxSeries& f, const Rational& target);

/// 1 / f to the best precision available: exact for exact monomials,
/// relative precision T - ord f for truncated f, default_precision() for
/// other exact series.
PuiseuxSeries reciprocal(const PuiseuxSeries& f);

/// a / b with the quotient known to absolute precision `target`.
PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& target);

std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& f);

}  // namespace spherotrop
