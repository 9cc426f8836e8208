#include "spherotrop/polynomial.hpp"

namespace spherotrop {

SeriesPolynomial to_series_polynomial(const QPolynomial& f) {
  SeriesPolynomial p(f.nvars(), f.mode());
  for (const auto& [e, c] : f.terms()) p.add_term(e, PuiseuxSeries(c));
  return p;
}

QPolynomial to_rational_polynomial(const SeriesPolynomial& f) {
  QPolynomial p(f.nvars(), f.mode());
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_constant()) throw InvalidArgument("coefficient " + c.to_string() + " is not a rational constant");
    p.add_term(e, c.leading_coefficient());
  }
  return p;
}

}  // namespace spherotrop
