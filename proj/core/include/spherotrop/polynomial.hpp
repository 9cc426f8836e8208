#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "spherotrop/error.hpp"
#include "spherotrop/puiseux.hpp"
#include "spherotrop/rational.hpp"

namespace spherotrop {

/// Multi-index alpha of x^alpha; negative entries only in Laurent mode.
using Exponent = std::vector<long>;

enum class RingMode { Polynomial, Laurent };

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const PuiseuxSeries& c) { return c.is_exact_zero(); }

inline long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// a divides b as monomials (componentwise a <= b).
inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// Sparse multivariate polynomial over Rational or PuiseuxSeries
/// coefficients. Terms are stored in lexicographic exponent order; term
/// orders are applied by the algorithms that need them.
template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<Exponent, Coeff>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, RingMode mode = RingMode::Polynomial)
      : nvars_(nvars), mode_(mode) {}

  static Polynomial constant(std::size_t nvars, const Coeff& c, RingMode mode = RingMode::Polynomial) {
    Polynomial p(nvars, mode);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static Polynomial monomial(Exponent e, const Coeff& c, RingMode mode = RingMode::Polynomial) {
    Polynomial p(e.size(), mode);
    p.add_term(std::move(e), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index, RingMode mode = RingMode::Polynomial) {
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(std::move(e), Coeff(1), mode);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  RingMode mode() const noexcept { return mode_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Accumulates c x^e, removing the term if it cancels.
  void add_term(Exponent e, const Coeff& c) {
    if (e.size() != nvars_) throw RankMismatch("exponent length does not match the ring");
    if (mode_ == RingMode::Polynomial && std::any_of(e.begin(), e.end(), [](long v) { return v < 0; }))
      throw InvalidArgument("negative exponent in polynomial mode");
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  long min_degree() const {
    if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
    long d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
    return d;
  }

  long max_degree() const {
    if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
    long d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  /// Homogeneous with respect to the standard grading (zero counts as homogeneous).
  bool is_homogeneous() const { return is_zero() || min_degree() == max_degree(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    return is_zero() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
                         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                     [](long v) { return v == 0; }));
  }

  Polynomial homogeneous_component(long degree) const {
    Polynomial p(nvars_, mode_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == degree) p.terms_.emplace(e, c);
    return p;
  }

  Polynomial with_mode(RingMode mode) const {
    Polynomial p(nvars_, mode);
    for (const auto& [e, c] : terms_) p.add_term(e, c);
    return p;
  }

  /// Multiply by c x^shift.
  Polynomial times_term(const Exponent& shift, const Coeff& c) const {
    Polynomial p(nvars_, mode_);
    for (const auto& [e, v] : terms_) p.add_term(e + shift, v * c);
    return p;
  }

  Polynomial scaled(const Coeff& c) const { return times_term(Exponent(nvars_, 0), c); }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial p(a.nvars_, a.mode_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::vector<std::string>& vars = {}) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      std::ostringstream mono;
      bool any = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) mono << "*";
        any = true;
        mono << (i < vars.size() ? vars[i] : "x" + std::to_string(i + 1));
        if (e[i] != 1) mono << "^" << e[i];
      }
      os << "(" << c << ")";
      if (any) os << "*" << mono.str();
    }
    return os.str();
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw RankMismatch("polynomials live in rings of different rank");
  }

  std::size_t nvars_ = 0;
  RingMode mode_ = RingMode::Polynomial;
  Terms terms_;
};

using QPolynomial = Polynomial<Rational>;
using SeriesPolynomial = Polynomial<PuiseuxSeries>;

/// Embed a rational polynomial into series coefficients (exact constants).
SeriesPolynomial to_series_polynomial(const QPolynomial& f);
/// Inverse of to_series_polynomial; throws InvalidArgument unless every
/// coefficient is an exact constant.
QPolynomial to_rational_polynomial(const SeriesPolynomial& f);

/// Evaluate f at a point whose coordinates live in a ring T (series, complex
/// numbers). Negative exponents use `invert`.
template <class T, class Coeff, class Lift, class Invert>
T evaluate(const Polynomial<Coeff>& f, const std::vector<T>& point, Lift lift, Invert invert) {
  if (point.size() != f.nvars()) throw RankMismatch("evaluation point has the wrong length");
  T sum = lift(Coeff());
  for (const auto& [e, c] : f.terms()) {
    T term = lift(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      T base = e[i] > 0 ? point[i] : invert(point[i]);
      for (long j = 0; j < std::abs(e[i]); ++j) term = term * base;
    }
    sum = sum + term;
  }
  return sum;
}

}  // namespace spherotrop
