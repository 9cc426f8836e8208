#include "spherotrop/grobner_fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "spherotrop/linear_program.hpp"

namespace spherotrop {

namespace {

constexpr std::size_t kMaxFanDim = 4;

RationalVector to_rational(const Exponent& e) {
  RationalVector v;
  for (long x : e) v.emplace_back(x);
  return v;
}

RationalVector difference(const Exponent& a, const Exponent& b) { return to_rational(a - b); }

void check_weight(const QPolynomial& f, const WeightVector& w) {
  if (w.size() != f.nvars()) throw RankMismatch("weight vector length does not match the ring");
}

std::string cone_key(const Cone& c) { return c.to_string(); }

}  // namespace

QPolynomial initial_form_weight(const QPolynomial& f, const WeightVector& w) {
  check_weight(f, w);
  if (f.is_zero()) throw ZeroPolynomial("initial form of the zero polynomial");
  Rational best = dot(w, f.terms().begin()->first);
  for (const auto& [e, c] : f.terms()) best = std::min(best, dot(w, e));
  QPolynomial out(f.nvars(), f.mode());
  for (const auto& [e, c] : f.terms())
    if (dot(w, e) == best) out.add_term(e, c);
  return out;
}

std::vector<QPolynomial> initial_ideal_weight(const std::vector<QPolynomial>& gens, const WeightVector& w,
                                              const TermOrder& tiebreak) {
  std::vector<QPolynomial> out;
  for (const auto& g : buchberger_reduced(gens, TermOrder::weight_refined(w, tiebreak)))
    out.push_back(initial_form_weight(g, w));
  return out;
}

std::vector<QPolynomial> initial_ideal_any_weight(const std::vector<QPolynomial>& gens, const WeightVector& w) {
  if (gens.empty()) throw ZeroPolynomial("empty generator list");
  std::size_t n = gens.front().nvars();
  if (w.size() != n) throw RankMismatch("weight vector length does not match the ring");
  bool homogeneous = std::all_of(gens.begin(), gens.end(), [](const QPolynomial& g) { return g.is_homogeneous(); });
  if (homogeneous) return initial_ideal_weight(gens, w, TermOrder::grevlex(n));
  std::vector<QPolynomial> hom = homogenize_ideal(gens);
  WeightVector wh = w;
  wh.emplace_back(0);
  std::vector<QPolynomial> out;
  for (const auto& g : initial_ideal_weight(hom, wh, TermOrder::grevlex(n + 1))) {
    QPolynomial d = dehomogenize(g);
    if (!d.is_zero()) out.push_back(d);
  }
  return out;
}

Cone groebner_cone_of_basis(const std::vector<QPolynomial>& basis, const WeightVector& w) {
  if (basis.empty()) throw ZeroPolynomial("empty basis");
  std::size_t n = basis.front().nvars();
  Cone cone(n);
  for (const auto& g : basis) {
    QPolynomial in = initial_form_weight(g, w);
    const Exponent& a0 = in.terms().begin()->first;
    for (const auto& [e, c] : g.terms()) {
      if (e == a0) continue;
      if (in.terms().count(e))
        cone.add_equality(difference(e, a0));
      else
        cone.add_inequality(difference(e, a0));
    }
  }
  return cone.canonical();
}

Cone groebner_cone(const std::vector<QPolynomial>& gens, const WeightVector& w, const TermOrder& tiebreak) {
  return groebner_cone_of_basis(buchberger_reduced(gens, TermOrder::weight_refined(w, tiebreak)), w);
}

namespace {

struct Visit {
  Cone cone;
  std::vector<QPolynomial> basis;
};

Visit visit(const std::vector<QPolynomial>& gens, const WeightVector& w, const TermOrder& tiebreak) {
  Visit v;
  v.basis = buchberger_reduced(gens, TermOrder::weight_refined(w, tiebreak));
  v.cone = groebner_cone_of_basis(v.basis, w);
  return v;
}

bool strictly_inside(const Cone& c, const WeightVector& w) {
  for (const auto& h : c.constraints()) {
    Rational v = h.evaluate(w);
    if (h.relation == Relation::Equal ? !v.is_zero() : v.sign() <= 0) return false;
  }
  return true;
}

/// Step length from a facet point q along -normal that stays clear of every
/// other wall visible in the current basis.
Rational step_length(const std::vector<QPolynomial>& basis, const WeightVector& q, const RationalVector& normal) {
  std::optional<Rational> best;
  for (const auto& g : basis) {
    for (auto i = g.terms().begin(); i != g.terms().end(); ++i) {
      for (auto j = std::next(i); j != g.terms().end(); ++j) {
        Exponent d = j->first - i->first;
        Rational slack = dot(q, d).abs();
        Rational rate = dot(normal, d).abs();
        if (slack.is_zero() || rate.is_zero()) continue;
        Rational s = slack / rate;
        if (!best || s < *best) best = s;
      }
    }
  }
  return best ? *best / Rational(2) : Rational(1);
}

}  // namespace

GroebnerFan groebner_fan_enumerate(const std::vector<QPolynomial>& gens) {
  if (gens.empty()) throw ZeroPolynomial("empty generator list");
  std::size_t n = gens.front().nvars();
  if (n > kMaxFanDim) throw DimensionTooLarge("Groebner fan enumeration supports at most 4 variables");
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      throw OrderNotWellFounded("Groebner fan enumeration needs a homogeneous ideal; homogenize first");
  TermOrder tiebreak = TermOrder::grevlex(n);

  // Start from the cone of the tiebreak order itself.
  std::vector<QPolynomial> start_basis = buchberger_reduced(gens, tiebreak);
  Cone start(n);
  for (const auto& g : start_basis) {
    Exponent lead = leading_term(g, tiebreak).first;
    for (const auto& [e, c] : g.terms())
      if (e != lead) start.add_inequality(difference(e, lead));
  }
  auto p = start.canonical().relative_interior_point();
  if (!p) throw InvalidArgument("empty starting cone");

  GroebnerFan fan;
  fan.ambient_dim = n;
  std::map<std::string, std::size_t> index;
  std::deque<std::size_t> queue;
  std::vector<std::vector<QPolynomial>> bases;

  auto record = [&](const WeightVector& w, Visit v) -> std::size_t {
    std::string key = cone_key(v.cone);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    FanCone fc;
    fc.cone = v.cone;
    fc.interior = w;
    for (const auto& g : v.basis) fc.initial_ideal.push_back(initial_form_weight(g, w));
    std::size_t id = fan.cones.size();
    fan.cones.push_back(std::move(fc));
    bases.push_back(std::move(v.basis));
    index.emplace(key, id);
    queue.push_back(id);
    return id;
  };

  record(*p, visit(gens, *p, tiebreak));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    Cone cone = fan.cones[id].cone;
    for (std::size_t k = 0; k < cone.constraints().size(); ++k) {
      const HalfSpace& wall = cone.constraints()[k];
      if (wall.relation != Relation::GreaterEq) continue;
      Polyhedron facet = cone;
      Polyhedron tight(n);
      tight.add_equality(wall.normal);
      auto q = facet.intersect(tight).relative_interior_point();
      if (!q) continue;
      Rational eps = step_length(bases[id], *q, wall.normal);
      std::optional<std::size_t> neighbour;
      for (int attempt = 0; attempt < 64 && !neighbour; ++attempt, eps /= Rational(2)) {
        WeightVector w = *q;
        for (std::size_t i = 0; i < n; ++i) w[i] -= eps * wall.normal[i];
        Visit v = visit(gens, w, tiebreak);
        if (v.cone.dimension() != static_cast<int>(n) || !strictly_inside(v.cone, w) || !v.cone.contains(*q))
          continue;
        neighbour = record(w, std::move(v));
      }
      if (!neighbour) throw InvalidArgument("could not cross a facet of the Groebner fan");
      edges.insert({std::min(id, *neighbour), std::max(id, *neighbour)});
    }
  }
  fan.adjacency.assign(edges.begin(), edges.end());
  return fan;
}

std::vector<Exponent> newton_polytope(const QPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("Newton polytope of the zero polynomial");
  std::size_t n = f.nvars();
  if (n > kMaxFanDim) throw DimensionTooLarge("Newton polytopes are supported in at most 4 variables");
  std::vector<Exponent> support;
  for (const auto& [e, c] : f.terms()) support.push_back(e);
  std::vector<Exponent> vertices;
  for (const auto& p : support) {
    std::vector<lp::Constraint> cs;
    for (const auto& u : support)
      if (u != p) cs.push_back({difference(u, p), lp::Sense::GreaterEq, Rational(1)});
    if (cs.empty() || lp::maximize(n, RationalVector(n), cs).status == lp::Status::Optimal) vertices.push_back(p);
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

}  // namespace spherotrop
