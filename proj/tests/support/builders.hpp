#pragma once

#include <cctype>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spherotrop/polynomial.hpp"
#include "spherotrop/puiseux.hpp"
#include "spherotrop/series_matrix.hpp"

namespace testing_support {

using spherotrop::Exponent;
using spherotrop::PuiseuxSeries;
using spherotrop::QPolynomial;
using spherotrop::Rational;
using spherotrop::RingMode;

/// Parses sums like "x^2*y - 3/2*z + 1" or "x*y^-1" over the given variables.
inline QPolynomial P(const std::string& text, const std::vector<std::string>& vars,
                     RingMode mode = RingMode::Polynomial) {
  QPolynomial out(vars.size(), RingMode::Laurent);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto integer = [&] {
    std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected integer in '" + text + "'");
    return std::stol(text.substr(start, i - start));
  };
  skip();
  while (i < text.size()) {
    int sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip();
    }
    Rational coeff(sign);
    Exponent e(vars.size(), 0);
    bool first = true;
    while (i < text.size()) {
      skip();
      if (!first) {
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip();
        } else {
          break;
        }
      }
      first = false;
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        long num = integer();
        long den = 1;
        if (i < text.size() && text[i] == '/') {
          ++i;
          den = integer();
        }
        coeff *= Rational(num, den);
      } else {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        std::string name = text.substr(start, i - start);
        std::size_t idx = 0;
        while (idx < vars.size() && vars[idx] != name) ++idx;
        if (idx == vars.size()) throw std::invalid_argument("unknown variable '" + name + "'");
        long power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          power = integer();
        }
        e[idx] += power;
      }
      skip();
    }
    out.add_term(e, coeff);
    skip();
  }
  return out.with_mode(mode);
}

/// sum c t^(e) for integer exponents, exact unless a truncation is given.
inline PuiseuxSeries S(std::initializer_list<std::pair<long, long>> terms) {
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : terms) t[e] += Rational(c);
  return PuiseuxSeries::from_terms(1, t);
}

inline PuiseuxSeries T(long c, const Rational& exponent) { return PuiseuxSeries::monomial(Rational(c), exponent); }

inline spherotrop::SeriesMatrix M(std::vector<std::vector<PuiseuxSeries>> rows) {
  return spherotrop::SeriesMatrix(std::move(rows));
}

inline std::vector<Rational> Q(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace testing_support

namespace spherotrop {

inline void PrintTo(const QPolynomial& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace spherotrop
