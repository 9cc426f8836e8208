#include "spherotrop/puiseux.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "spherotrop/error.hpp"

namespace spherotrop {

namespace {
std::optional<Rational> precision_override;
}  // namespace

void set_default_precision(std::optional<Rational> precision) {
  if (precision && precision->sign() <= 0) throw InvalidArgument("precision must be positive");
  precision_override = std::move(precision);
}

Rational default_precision() {
  if (precision_override) return *precision_override;
  if (const char* env = std::getenv("SPHEROTROP_PRECISION"); env != nullptr && *env != '\0') {
    Rational p = Rational::parse(env);
    if (p.sign() <= 0) throw InvalidArgument("SPHEROTROP_PRECISION must be positive");
    return p;
  }
  return Rational(20);
}

namespace {

Rational exponent_of(long e, long k) { return Rational(e, k); }

PuiseuxSeries::Terms lift(const PuiseuxSeries::Terms& terms, long factor) {
  if (factor == 1) return terms;
  PuiseuxSeries::Terms out;
  for (const auto& [e, c] : terms) out.emplace_hint(out.end(), e * factor, c);
  return out;
}

std::optional<Rational> min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<Rational> add_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, const Rational& exponent) {
  PuiseuxSeries s;
  if (c.is_zero()) return s;
  if (!exponent.denominator().fits_slong_p() || !exponent.numerator().fits_slong_p())
    throw InvalidArgument("series exponent out of range");
  s.k_ = exponent.denominator().get_si();
  s.terms_.emplace(exponent.numerator().get_si(), c);
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::from_terms(long ramification, Terms terms, std::optional<Rational> truncation) {
  if (ramification <= 0) throw InvalidArgument("ramification must be positive");
  PuiseuxSeries s;
  s.k_ = ramification;
  s.terms_ = std::move(terms);
  s.trunc_ = std::move(truncation);
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::big_o(const Rational& truncation) {
  PuiseuxSeries s;
  s.trunc_ = truncation;
  return s;
}

void PuiseuxSeries::normalize() {
  std::erase_if(terms_, [&](const auto& kv) {
    return kv.second.is_zero() || (trunc_ && exponent_of(kv.first, k_) >= *trunc_);
  });
  long g = k_;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e);
  if (g > 1) {
    Terms reduced;
    for (const auto& [e, c] : terms_) reduced.emplace_hint(reduced.end(), e / g, c);
    terms_ = std::move(reduced);
    k_ /= g;
  }
  if (terms_.empty()) k_ = 1;
}

bool PuiseuxSeries::is_constant() const {
  return is_exact() && (terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0));
}

std::optional<Rational> PuiseuxSeries::ord() const {
  if (!terms_.empty()) return exponent_of(terms_.begin()->first, k_);
  if (is_exact()) return std::nullopt;
  throw PrecisionLoss("order of vanishing of a series with no known terms", trunc_->to_string());
}

std::optional<Rational> PuiseuxSeries::ord_lower_bound() const {
  if (!terms_.empty()) return exponent_of(terms_.begin()->first, k_);
  return trunc_;
}

Rational PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) {
    if (is_exact()) return Rational(0);
    throw PrecisionLoss("leading coefficient of a series with no known terms", trunc_->to_string());
  }
  return terms_.begin()->second;
}

Rational PuiseuxSeries::coefficient(const Rational& exponent) const {
  if (trunc_ && exponent >= *trunc_)
    throw PrecisionLoss("coefficient beyond the known precision", trunc_->to_string());
  Rational scaled = exponent * Rational(k_);
  if (!scaled.is_integer()) return Rational(0);
  auto it = terms_.find(scaled.to_long());
  return it == terms_.end() ? Rational(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& truncation) const {
  PuiseuxSeries s = *this;
  s.trunc_ = min_opt(trunc_, truncation);
  s.normalize();
  return s;
}

std::complex<double> PuiseuxSeries::evaluate(double t) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c.to_double() * std::pow(t, static_cast<double>(e) / static_cast<double>(k_));
  return {sum, 0.0};
}

double PuiseuxSeries::tail_bound(double t) const {
  return trunc_ ? std::pow(t, trunc_->to_double()) : 0.0;
}

std::string PuiseuxSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational ex = exponent_of(e, k_);
    Rational mag = c.abs();
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    bool unit = mag == Rational(1);
    if (ex.is_zero()) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << "t";
    if (ex != Rational(1)) os << (ex.is_integer() ? "^" + ex.to_string() : "^(" + ex.to_string() + ")");
  }
  if (trunc_) {
    if (!first) os << " + ";
    os << "O(t^" << (trunc_->is_integer() ? trunc_->to_string() : "(" + trunc_->to_string() + ")") << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& [e, c] : s.terms_) c = -c;
  return s;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o) {
  long L = std::lcm(k_, o.k_);
  Terms mine = lift(terms_, L / k_);
  for (const auto& [e, c] : lift(o.terms_, L / o.k_)) {
    auto [it, inserted] = mine.try_emplace(e, c);
    if (!inserted) it->second += c;
  }
  terms_ = std::move(mine);
  k_ = L;
  trunc_ = min_opt(trunc_, o.trunc_);
  normalize();
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& o) { return *this += -o; }

PuiseuxSeries& PuiseuxSeries::operator*=(const PuiseuxSeries& o) {
  if (is_exact_zero() || o.is_exact_zero()) {
    *this = PuiseuxSeries();
    return *this;
  }
  auto trunc = min_opt(add_opt(trunc_, o.ord_lower_bound()), add_opt(o.trunc_, ord_lower_bound()));
  long L = std::lcm(k_, o.k_);
  Terms a = lift(terms_, L / k_);
  Terms b = lift(o.terms_, L / o.k_);
  Terms prod;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      if (trunc && exponent_of(ea + eb, L) >= *trunc) break;
      auto [it, inserted] = prod.try_emplace(ea + eb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  terms_ = std::move(prod);
  k_ = L;
  trunc_ = std::move(trunc);
  normalize();
  return *this;
}

PuiseuxSeries combine(SeriesOp op, const PuiseuxSeries& a, const PuiseuxSeries& b) {
  switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Sub: return a - b;
    case SeriesOp::Mul: return a * b;
  }
  throw InvalidArgument("unknown series operation");
}

PuiseuxSeries inverse(const PuiseuxSeries& f, const Rational& target) {
  if (f.is_exact_zero()) throw DivisionByZero("inverse of the zero series");
  const Rational q = *f.ord();
  const long k = f.ramification();
  const long e0 = f.terms().begin()->first;
  const Rational c = f.terms().begin()->second;

  if (f.is_exact() && f.terms().size() == 1) return PuiseuxSeries::monomial(c.inverse(), -q);

  if (f.truncation() && target > *f.truncation() - q) {
    throw PrecisionLoss("inverse to t^" + target.to_string() + " needs more terms than available",
                        f.truncation()->to_string());
  }

  // f = c t^q (1 + u); h = 1 / (1 + u) by the recurrence h_j = -sum u_i h_{j-i}.
  Rational scaled = target * Rational(k);
  long n = scaled.sign() > 0 ? scaled.ceil_long() : 0;
  std::vector<Rational> u(static_cast<std::size_t>(std::max(n, 1L)));
  for (const auto& [e, coeff] : f.terms()) {
    long i = e - e0;
    if (i >= 1 && i < n) u[static_cast<std::size_t>(i)] = coeff / c;
  }
  std::vector<Rational> h(static_cast<std::size_t>(std::max(n, 0L)));
  PuiseuxSeries::Terms out;
  const Rational c_inv = c.inverse();
  for (long j = 0; j < n; ++j) {
    Rational v = j == 0 ? Rational(1) : Rational(0);
    for (long i = 1; i <= j; ++i) {
      const Rational& ui = u[static_cast<std::size_t>(i)];
      if (!ui.is_zero()) v -= ui * h[static_cast<std::size_t>(j - i)];
    }
    h[static_cast<std::size_t>(j)] = v;
    if (!v.is_zero()) out.emplace_hint(out.end(), j - e0, v * c_inv);
  }
  return PuiseuxSeries::from_terms(k, std::move(out), target - q);
}

PuiseuxSeries reciprocal(const PuiseuxSeries& f) {
  if (f.is_exact_zero()) throw DivisionByZero("inverse of the zero series");
  if (f.truncation()) return inverse(f, *f.truncation() - *f.ord());
  return inverse(f, default_precision());
}

PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& target) {
  if (b.is_exact_zero()) throw DivisionByZero("division by the zero series");
  if (a.is_exact_zero()) return PuiseuxSeries();
  const Rational ob = *b.ord();
  const Rational oa = *a.ord_lower_bound();
  if (b.is_exact() && b.terms().size() == 1) return (a * inverse(b, Rational(0))).truncated(target);
  Rational inner = target + ob - oa;
  if (b.truncation()) inner = std::min(inner, *b.truncation() - ob);
  return (a * inverse(b, inner)).truncated(target);
}

std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& f) { return os << f.to_string(); }

}  // namespace spherotrop
