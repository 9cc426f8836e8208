#include "spherotrop/tropical.hpp"

#include <algorithm>

#include "spherotrop/grobner_fan.hpp"
#include "spherotrop/groebner.hpp"

namespace spherotrop {

bool TropicalSet::contains(const RationalVector& w) const {
  if (w.size() != ambient_dim) throw RankMismatch("point dimension does not match the tropical set");
  return std::any_of(pieces.begin(), pieces.end(), [&](const Polyhedron& p) { return p.contains(w); });
}

bool TropicalSet::same_pieces(const TropicalSet& o) const {
  if (ambient_dim != o.ambient_dim || pieces.size() != o.pieces.size()) return false;
  auto key = [](const TropicalSet& s) {
    std::vector<std::string> k;
    for (const auto& p : s.pieces) k.push_back(p.canonical().to_string());
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(*this) == key(o);
}

RationalVector trop_point(const TorusPoint& p) {
  RationalVector out;
  for (const auto& c : p) {
    auto o = c.ord();
    if (!o) throw InvalidPoint("torus point has an exact-zero coordinate");
    out.push_back(*o);
  }
  return out;
}

namespace {

struct ValuedTerm {
  Exponent exponent;
  Rational value;  // ord of the coefficient
};

std::vector<ValuedTerm> valued_terms(const SeriesPolynomial& f) {
  std::vector<ValuedTerm> out;
  for (const auto& [e, c] : f.terms()) {
    auto o = c.ord();
    if (!o) continue;
    out.push_back({e, *o});
  }
  return out;
}

}  // namespace

TropicalSet trop_hypersurface(const SeriesPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("tropical hypersurface of the zero polynomial");
  std::size_t n = f.nvars();
  std::vector<ValuedTerm> terms = valued_terms(f);
  TropicalSet set;
  set.ambient_dim = n;
  std::vector<std::string> seen;
  auto diff = [&](const ValuedTerm& a, const ValuedTerm& b) {
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(a.exponent[i] - b.exponent[i]);
    return v;
  };
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      // value_a(w) = ord(c_a) + w.a; piece: value_i == value_j <= value_k.
      Polyhedron piece(n);
      piece.add_equality(diff(terms[i], terms[j]), terms[i].value - terms[j].value);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == i || k == j) continue;
        piece.add_inequality(diff(terms[k], terms[i]), terms[k].value - terms[i].value);
      }
      Polyhedron c = piece.canonical();
      if (c.is_empty()) continue;
      std::string key = c.to_string();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      set.pieces.push_back(std::move(c));
    }
  }
  return set;
}

TropicalSet trop_hypersurface(const QPolynomial& f) { return trop_hypersurface(to_series_polynomial(f)); }

QPolynomial initial_form_valued(const SeriesPolynomial& f, const WeightVector& w) {
  if (w.size() != f.nvars()) throw RankMismatch("weight vector length does not match the ring");
  if (f.is_zero()) throw ZeroPolynomial("initial form of the zero polynomial");
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    auto o = c.ord();
    if (!o) continue;
    Rational v = *o + dot(w, e);
    if (!best || v < *best) best = v;
  }
  QPolynomial out(f.nvars(), f.mode());
  for (const auto& [e, c] : f.terms()) {
    auto o = c.ord();
    if (o && *o + dot(w, e) == *best) out.add_term(e, c.leading_coefficient());
  }
  return out;
}

bool trop_membership(const std::vector<QPolynomial>& gens, const WeightVector& w) {
  std::vector<QPolynomial> poly;
  for (const auto& g : gens)
    if (!g.is_zero()) poly.push_back(clear_denominators(g));
  if (poly.empty()) return true;
  std::size_t n = poly.front().nvars();
  if (w.size() != n) throw RankMismatch("weight vector length does not match the ring");
  for (const auto& g : poly)
    if (g.is_constant()) return false;

  std::vector<QPolynomial> initial = initial_ideal_any_weight(poly, w);
  // in_w(I) : (x_1...x_n)^inf is the unit ideal iff u x_1...x_n - 1 together
  // with in_w(I) generates the unit ideal in k[x, u].
  std::vector<QPolynomial> ext;
  for (const auto& g : initial) ext.push_back(extend_ring(g, 1));
  QPolynomial aux(n + 1);
  aux.add_term(Exponent(n + 1, 1), Rational(1));
  aux.add_term(Exponent(n + 1, 0), Rational(-1));
  ext.push_back(aux);
  std::vector<QPolynomial> gb = buchberger_reduced(ext, TermOrder::degree_descending(n + 1));
  return !(gb.size() == 1 && gb.front().is_constant());
}

PuiseuxSeries substitute(const QPolynomial& f, const TorusPoint& p) {
  return evaluate<PuiseuxSeries>(
      f, p, [](const Rational& c) { return PuiseuxSeries(c); },
      [](const PuiseuxSeries& s) { return reciprocal(s); });
}

FundamentalReport fundamental_check(const std::vector<QPolynomial>& gens, const std::vector<TorusPoint>& curves,
                                    const std::vector<WeightVector>& grid) {
  FundamentalReport report;
  for (const auto& curve : curves) {
    for (const auto& g : gens) {
      PuiseuxSeries v = substitute(g, curve);
      if (!v.terms().empty())
        throw CurveNotOnVariety("curve does not satisfy generator " + g.to_string() + ": residual " + v.to_string());
    }
    RationalVector w = trop_point(curve);
    report.curve_points.push_back(w);
    if (!trop_membership(gens, w)) {
      report.curve_failures.push_back(w);
      report.passed = false;
    }
  }
  std::vector<TropicalSet> hypersurfaces;
  for (const auto& g : gens) hypersurfaces.push_back(trop_hypersurface(g));
  for (const auto& w : grid) {
    if (!trop_membership(gens, w)) continue;
    report.grid_members.push_back(w);
    bool on_all = std::all_of(hypersurfaces.begin(), hypersurfaces.end(),
                              [&](const TropicalSet& h) { return h.contains(w); });
    if (!on_all) {
      report.grid_failures.push_back(w);
      report.passed = false;
    }
  }
  return report;
}

}  // namespace spherotrop
