#include "spherotrop/rational.hpp"

#include <ostream>

#include "spherotrop/error.hpp"

namespace spherotrop {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '+')) v.erase(v.begin());
    while (!v.empty() && v.back() == ' ') v.pop_back();
  };
  strip(s);
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(num);
  strip(den);
  auto valid = [](const std::string& v) {
    if (v.empty()) return false;
    std::size_t i = v[0] == '-' ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  if (!valid(num) || !valid(den) || den[0] == '-')
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("rational literal with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rational(mpq_class(1 / value_));
}

long Rational::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InvalidArgument("rational out of machine range");
  return q.get_si();
}

long Rational::ceil_long() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InvalidArgument("rational out of machine range");
  return q.get_si();
}

long Rational::to_long() const {
  if (!is_integer()) throw InvalidArgument("rational " + to_string() + " is not an integer");
  if (!value_.get_num().fits_slong_p()) throw InvalidArgument("integer out of machine range");
  return value_.get_num().get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class lcm_of(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace spherotrop
