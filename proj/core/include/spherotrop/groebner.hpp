#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spherotrop/error.hpp"
#include "spherotrop/polynomial.hpp"
#include "spherotrop/term_order.hpp"

namespace spherotrop {

/// Order-minimal term (minimum convention).
template <class Coeff>
std::pair<Exponent, Coeff> leading_term(const Polynomial<Coeff>& f, const TermOrder& ord) {
  if (f.is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.less(it->first, best->first)) best = it;
  return {best->first, best->second};
}

struct DivisionResult {
  std::vector<QPolynomial> quotients;
  QPolynomial remainder;
};

/// f = sum q_i g_i + r, where no term of r is divisible by a leading term
/// of the divisors. Requires the order to be max-well-ordered, or every
/// divisor to have its leading term in its top total degree (homogeneous
/// divisors, monomials); otherwise throws OrderNotWellFounded.
DivisionResult poly_divide(const QPolynomial& f, const std::vector<QPolynomial>& divisors, const TermOrder& ord);

QPolynomial s_polynomial(const QPolynomial& f, const QPolynomial& g, const TermOrder& ord);

/// Unique reduced Groebner basis (monic, sorted by leading term). Accepts
/// max-well-ordered orders on any input and arbitrary orders on
/// homogeneous input.
std::vector<QPolynomial> buchberger_reduced(const std::vector<QPolynomial>& gens, const TermOrder& ord);

bool ideal_member(const QPolynomial& f, const std::vector<QPolynomial>& gb, const TermOrder& ord);

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
bool is_groebner_basis(const std::vector<QPolynomial>& basis, const TermOrder& ord);

/// Canonical text of a basis, used as a key for sets of initial ideals.
std::string fingerprint(const std::vector<QPolynomial>& basis);

/// Append a homogenizing variable as the last coordinate.
QPolynomial homogenize(const QPolynomial& f);
/// Set the last variable to one and drop it.
QPolynomial dehomogenize(const QPolynomial& f);
/// Generators of the homogenization of the ideal (via a degree-compatible basis).
std::vector<QPolynomial> homogenize_ideal(const std::vector<QPolynomial>& gens);

/// Multiply a Laurent polynomial by the monomial clearing its negative
/// exponents and return it in polynomial mode.
QPolynomial clear_denominators(const QPolynomial& f);

/// f with each x_i replaced by the i-th entry of `extension` new variables
/// appended (zero padding): embeds k[x_1..x_n] into k[x_1..x_{n+m}].
QPolynomial extend_ring(const QPolynomial& f, std::size_t extra_vars);

}  // namespace spherotrop
