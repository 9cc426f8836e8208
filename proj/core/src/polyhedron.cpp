#include "spherotrop/polyhedron.hpp"

#include <algorithm>
#include <sstream>

#include "spherotrop/error.hpp"
#include "spherotrop/linear_program.hpp"

namespace spherotrop {

Rational HalfSpace::evaluate(const RationalVector& w) const {
  if (w.size() != normal.size()) throw RankMismatch("point dimension does not match the half-space");
  Rational s = offset;
  for (std::size_t i = 0; i < w.size(); ++i) s += normal[i] * w[i];
  return s;
}

Polyhedron::Polyhedron(std::size_t dim, std::vector<HalfSpace> constraints) : dim_(dim) {
  for (auto& h : constraints) add(std::move(h));
}

void Polyhedron::add(HalfSpace h) {
  if (h.normal.size() != dim_) throw RankMismatch("constraint dimension does not match the polyhedron");
  constraints_.push_back(std::move(h));
}

void Polyhedron::add_inequality(RationalVector normal, Rational offset) {
  add({std::move(normal), std::move(offset), Relation::GreaterEq});
}

void Polyhedron::add_equality(RationalVector normal, Rational offset) {
  add({std::move(normal), std::move(offset), Relation::Equal});
}

bool Polyhedron::is_cone() const {
  return std::all_of(constraints_.begin(), constraints_.end(), [](const HalfSpace& h) { return h.offset.is_zero(); });
}

bool Polyhedron::contains(const RationalVector& w) const {
  for (const auto& h : constraints_) {
    Rational v = h.evaluate(w);
    if (h.relation == Relation::Equal ? !v.is_zero() : v.sign() < 0) return false;
  }
  return true;
}

namespace {

lp::Constraint to_lp(const HalfSpace& h) {
  return {h.normal, h.relation == Relation::Equal ? lp::Sense::Equal : lp::Sense::GreaterEq, -h.offset};
}

}  // namespace

Polyhedron::Analysis Polyhedron::analyze() const {
  Analysis a;
  std::vector<lp::Constraint> base;
  for (const auto& h : constraints_) base.push_back(to_lp(h));
  lp::Solution feas = lp::maximize(dim_, RationalVector(dim_), base);
  if (feas.status != lp::Status::Optimal) return a;
  a.empty = false;
  a.feasible = feas.x;
  a.implicit.assign(constraints_.size(), false);
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& h = constraints_[i];
    if (h.relation == Relation::Equal) {
      a.implicit[i] = true;
      continue;
    }
    if (h.evaluate(feas.x).sign() > 0) {
      a.witnesses.push_back(feas.x);
      continue;
    }
    auto capped = base;
    capped.push_back({h.normal, lp::Sense::LessEq, Rational(1) - h.offset});
    lp::Solution s = lp::maximize(dim_, h.normal, capped);
    if (h.evaluate(s.x).sign() > 0)
      a.witnesses.push_back(s.x);
    else
      a.implicit[i] = true;
  }
  return a;
}

bool Polyhedron::is_empty() const { return analyze().empty; }

std::optional<RationalVector> Polyhedron::relative_interior_point() const {
  Analysis a = analyze();
  if (a.empty) return std::nullopt;
  if (a.witnesses.empty()) return a.feasible;
  RationalVector p(dim_);
  for (const auto& w : a.witnesses)
    for (std::size_t i = 0; i < dim_; ++i) p[i] += w[i];
  Rational n(static_cast<long>(a.witnesses.size()));
  for (auto& v : p) v /= n;
  return p;
}

bool Polyhedron::contains_in_relative_interior(const RationalVector& w) const {
  if (!contains(w)) return false;
  Analysis a = analyze();
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    if (!a.implicit[i] && constraints_[i].evaluate(w).is_zero()) return false;
  return true;
}

Polyhedron Polyhedron::intersect(const Polyhedron& o) const {
  if (o.dim_ != dim_) throw RankMismatch("intersecting polyhedra of different dimension");
  Polyhedron r = *this;
  for (const auto& h : o.constraints_) r.add(h);
  return r;
}

RationalVector primitive(const RationalVector& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm_of(den, x.denominator());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class num = x.numerator() * (den / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return v;
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * Rational(mpz_class(den)) / Rational(mpz_class(g));
  return r;
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

RationalVector augmented(const HalfSpace& h) {
  RationalVector v = h.normal;
  v.push_back(h.offset);
  return v;
}

HalfSpace from_augmented(const RationalVector& v, Relation rel) {
  HalfSpace h;
  h.normal.assign(v.begin(), v.end() - 1);
  h.offset = v.back();
  h.relation = rel;
  return h;
}

bool row_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::size_t rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

int Polyhedron::dimension() const {
  Analysis a = analyze();
  if (a.empty) return -1;
  std::vector<RationalVector> eq;
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    if (a.implicit[i]) eq.push_back(constraints_[i].normal);
  return static_cast<int>(dim_) - static_cast<int>(rank(eq));
}

Polyhedron Polyhedron::canonical() const {
  Analysis a = analyze();
  Polyhedron out(dim_);
  if (a.empty) {
    out.add_inequality(RationalVector(dim_), Rational(-1));
    return out;
  }
  std::vector<RationalVector> eq;
  std::vector<RationalVector> ineq;
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    (a.implicit[i] ? eq : ineq).push_back(augmented(constraints_[i]));
  std::vector<std::size_t> pivots = rref(eq, dim_ + 1);

  std::vector<RationalVector> reduced;
  for (auto v : ineq) {
    for (std::size_t r = 0; r < eq.size(); ++r) {
      Rational f = v[pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= dim_; ++j) v[j] -= f * eq[r][j];
    }
    if (std::all_of(v.begin(), v.end() - 1, [](const Rational& x) { return x.is_zero(); })) continue;
    v = primitive(v);
    if (std::find(reduced.begin(), reduced.end(), v) == reduced.end()) reduced.push_back(v);
  }
  std::sort(reduced.begin(), reduced.end(), row_less);

  std::vector<bool> keep(reduced.size(), true);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<lp::Constraint> cs;
    for (const auto& e : eq) cs.push_back(to_lp(from_augmented(e, Relation::Equal)));
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i && keep[j]) cs.push_back(to_lp(from_augmented(reduced[j], Relation::GreaterEq)));
    HalfSpace h = from_augmented(reduced[i], Relation::GreaterEq);
    lp::Solution s = lp::minimize(dim_, h.normal, cs);
    if (s.status == lp::Status::Optimal && (s.value + h.offset).sign() >= 0) keep[i] = false;
  }

  for (auto& e : eq) out.add(from_augmented(primitive(e), Relation::Equal));
  for (std::size_t i = 0; i < reduced.size(); ++i)
    if (keep[i]) out.add(from_augmented(reduced[i], Relation::GreaterEq));
  return out;
}

bool Polyhedron::same_set(const Polyhedron& o) const { return canonical() == o.canonical(); }

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (constraints_[i].relation != Relation::GreaterEq) continue;
    Polyhedron f = *this;
    f.constraints_[i].relation = Relation::Equal;
    out.push_back(f);
  }
  return out;
}

std::string Polyhedron::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (i) os << ", ";
    const auto& h = constraints_[i];
    os << "(";
    for (std::size_t j = 0; j < h.normal.size(); ++j) os << (j ? "," : "") << h.normal[j];
    os << ")." << "w";
    if (!h.offset.is_zero()) os << (h.offset.sign() > 0 ? "+" : "") << h.offset;
    os << (h.relation == Relation::Equal ? "=0" : ">=0");
  }
  os << "}";
  return os.str();
}

}  // namespace spherotrop
