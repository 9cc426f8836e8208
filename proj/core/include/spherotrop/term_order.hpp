#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "spherotrop/polynomial.hpp"
#include "spherotrop/rational.hpp"

namespace spherotrop {

using WeightVector = std::vector<Rational>;

Rational dot(const WeightVector& w, const Exponent& e);

/// Total order on exponents, used in the minimum convention: the initial
/// (leading) term of a polynomial is its order-minimal term.
///
/// lex, grlex and grevlex are the classical comparators, so under the
/// minimum convention grlex picks a lowest-degree term. Such orders have
/// infinite increasing chains; they are safe for division and Buchberger
/// only on homogeneous input. A weight refinement with nonpositive weights
/// that are negative on every coordinate (possibly across nested
/// refinements) has no infinite increasing chain and is safe everywhere.
class TermOrder {
 public:
  enum class Kind { Lex, Grlex, Grevlex, WeightRefined };

  /// `priority[0]` is the most significant variable; identity when empty.
  static TermOrder lex(std::size_t nvars, std::vector<std::size_t> priority = {});
  static TermOrder grlex(std::size_t nvars, std::vector<std::size_t> priority = {});
  static TermOrder grevlex(std::size_t nvars, std::vector<std::size_t> priority = {});
  /// alpha > beta iff w.alpha > w.beta, ties broken by `tiebreak`.
  static TermOrder weight_refined(WeightVector w, const TermOrder& tiebreak);
  /// weight_refined(-1,...,-1; grevlex): top total degree first. The
  /// library's default order for inhomogeneous input.
  static TermOrder degree_descending(std::size_t nvars);

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const WeightVector& weight() const noexcept { return weight_; }
  const TermOrder* tiebreak() const noexcept { return tiebreak_.get(); }

  /// Negative when a precedes b (a is "smaller"), zero when equal.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  /// Every increasing chain of exponents is finite, so the minimum
  /// convention division terminates on arbitrary input.
  bool is_max_well_ordered() const;

  std::string describe() const;

 private:
  TermOrder() = default;
  void collect_coverage(std::vector<bool>& negative, bool& nonpositive, bool& base_ok) const;

  Kind kind_ = Kind::Grevlex;
  std::size_t nvars_ = 0;
  std::vector<std::size_t> priority_;
  WeightVector weight_;
  std::shared_ptr<const TermOrder> tiebreak_;
};

}  // namespace spherotrop
