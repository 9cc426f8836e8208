#pragma once

#include <vector>

#include "spherotrop/rational.hpp"
#include "spherotrop/series_matrix.hpp"

namespace spherotrop {

/// Invariant factors from determinantal divisors: d_k is the least ord of
/// a k x k minor and e_k = d_k - d_{k-1}. Sorted decreasingly.
std::vector<Rational> invariant_factors_minors(const SeriesMatrix& a);

struct Elimination {
  std::vector<Rational> factors;  // decreasing
  SeriesMatrix left;              // A1, ord det = 0
  SeriesMatrix tau;               // diag(t^{v_i}) in pivot order
  SeriesMatrix right;             // A2, ord det = 0
};

/// Elimination over the valuation ring: pivot on a minimal-ord entry
/// (ties: smallest (row, col)), clear its row and column, recurse. Entries
/// are carried to absolute precision `precision`. A = left * tau * right
/// up to that precision.
Elimination invariant_factors_elimination(const SeriesMatrix& a, const Rational& precision = default_precision());

/// ord det A; throws InvalidPoint for an exactly singular matrix.
Rational ord_det(const SeriesMatrix& a);

}  // namespace spherotrop
