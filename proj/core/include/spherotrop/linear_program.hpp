#pragma once

#include <cstddef>
#include <vector>

#include "spherotrop/rational.hpp"

namespace spherotrop::lp {

enum class Sense { LessEq, Equal, GreaterEq };

/// coeffs . x  (sense)  rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense;
  Rational rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase simplex over free variables with Bland's rule.
Solution maximize(std::size_t nvars, const std::vector<Rational>& objective,
                  const std::vector<Constraint>& constraints);

Solution minimize(std::size_t nvars, const std::vector<Rational>& objective,
                  const std::vector<Constraint>& constraints);

}  // namespace spherotrop::lp
