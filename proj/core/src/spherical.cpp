#include "spherotrop/spherical.hpp"

#include <algorithm>
#include <random>

#include "spherotrop/error.hpp"
#include "spherotrop/snf.hpp"

namespace spherotrop {

ValuationCone::ValuationCone(std::size_t rank, std::vector<RationalVector> roots) : rank_(rank), roots_(std::move(roots)) {
  for (const auto& r : roots_)
    if (r.size() != rank_) throw RankMismatch("spherical root has the wrong length");
  if (spherotrop::rank(roots_) != roots_.size()) throw InvalidArgument("spherical roots are not linearly independent");
}

ConeMembership ValuationCone::membership(const RationalVector& v) const {
  if (v.size() != rank_) throw RankMismatch("valuation has the wrong length");
  ConeMembership m;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < rank_; ++j) s += v[j] * roots_[i][j];
    if (s.sign() > 0) {
      m.kind = MembershipKind::Outside;
      m.tight_roots.clear();
      return m;
    }
    if (s.is_zero()) m.tight_roots.push_back(i);
  }
  m.kind = m.tight_roots.empty() ? MembershipKind::Interior : MembershipKind::Face;
  return m;
}

Cone ValuationCone::as_cone() const {
  Cone c(rank_);
  for (const auto& r : roots_) {
    RationalVector neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    c.add_inequality(neg);
  }
  return c;
}

SphericalModel SphericalModel::torus(std::size_t n) {
  if (n == 0) throw InvalidArgument("torus of rank zero");
  return {ModelKind::Torus, n, ValuationCone(n, {})};
}

SphericalModel SphericalModel::sl2() { return {ModelKind::Sl2PuncturedPlane, 2, ValuationCone(1, {})}; }

SphericalModel SphericalModel::gl(std::size_t n) {
  if (n == 0 || n > 8) throw InvalidArgument("GL(n) models need 1 <= n <= 8");
  std::vector<RationalVector> roots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RationalVector b(n);
    b[i] = Rational(-1);
    b[i + 1] = Rational(1);
    roots.push_back(b);
  }
  return {ModelKind::GeneralLinear, n, ValuationCone(n, roots)};
}

SphericalModel SphericalModel::parse(const std::string& name) {
  auto number = [&](const std::string& s) -> std::size_t {
    try {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size() || v <= 0) throw InvalidArgument("bad rank");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError("bad model rank in '" + name + "'");
    }
  };
  if (name == "sl2") return sl2();
  if (name == "gl2") return gl(2);
  if (name.rfind("torus:", 0) == 0) return torus(number(name.substr(6)));
  if (name.rfind("gl:", 0) == 0) return gl(number(name.substr(3)));
  throw ParseError("unknown model '" + name + "' (expected sl2, gl2, gl:n or torus:n)");
}

std::string SphericalModel::name() const {
  switch (kind) {
    case ModelKind::Torus: return "torus:" + std::to_string(n);
    case ModelKind::Sl2PuncturedPlane: return "sl2";
    case ModelKind::GeneralLinear: return n == 2 ? "gl2" : "gl:" + std::to_string(n);
  }
  return "";
}

std::size_t SphericalModel::chart_vars() const {
  switch (kind) {
    case ModelKind::Torus: return n;
    case ModelKind::Sl2PuncturedPlane: return 2;
    case ModelKind::GeneralLinear: return n * n;
  }
  return 0;
}

RationalVector model_tropicalize(const SphericalModel& model, const ModelPoint& point) {
  switch (model.kind) {
    case ModelKind::Torus: {
      const auto* p = std::get_if<TorusPoint>(&point);
      if (!p) throw InvalidPoint("torus model expects a torus point");
      if (p->size() != model.n) throw RankMismatch("torus point has the wrong length");
      return trop_point(*p);
    }
    case ModelKind::Sl2PuncturedPlane: {
      const auto* p = std::get_if<Sl2Point>(&point);
      if (!p) throw InvalidPoint("SL(2) model expects a pair of series");
      if (p->x.is_exact_zero() && p->y.is_exact_zero()) throw InvalidPoint("the origin is not on the punctured plane");
      std::optional<Rational> best;
      for (const auto* s : {&p->x, &p->y}) {
        if (s->is_exact_zero()) continue;
        if (s->is_unknown()) {
          // The minimum is still known if the other coordinate is smaller.
          const PuiseuxSeries& other = s == &p->x ? p->y : p->x;
          if (!other.terms().empty() && *other.ord() < *s->truncation()) continue;
          throw PrecisionLoss("SL(2) valuation needs an ord hidden by truncation", s->truncation()->to_string());
        }
        Rational o = *s->ord();
        if (!best || o < *best) best = o;
      }
      return {*best};
    }
    case ModelKind::GeneralLinear: {
      const auto* p = std::get_if<SeriesMatrix>(&point);
      if (!p) throw InvalidPoint("GL(n) model expects a matrix");
      if (p->size() != model.n) throw RankMismatch("matrix size does not match the model");
      return invariant_factors_minors(*p);
    }
  }
  throw InvalidArgument("unknown model");
}

ModelPoint make_model_point(const SphericalModel& model, const std::vector<PuiseuxSeries>& coords) {
  if (coords.size() != model.chart_vars()) throw RankMismatch("wrong number of chart coordinates for " + model.name());
  switch (model.kind) {
    case ModelKind::Torus: return TorusPoint(coords);
    case ModelKind::Sl2PuncturedPlane: return Sl2Point{coords[0], coords[1]};
    case ModelKind::GeneralLinear: {
      SeriesMatrix m(model.n);
      for (std::size_t i = 0; i < model.n; ++i)
        for (std::size_t j = 0; j < model.n; ++j) m.at(i, j) = coords[i * model.n + j];
      return m;
    }
  }
  throw InvalidArgument("unknown model");
}

namespace {

constexpr long kBound = 10;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long draw(std::mt19937_64& rng) { return static_cast<long>(rng() % (2 * kBound + 1)) - kBound; }

using IntMatrix = std::vector<std::vector<long>>;

Rational int_det(IntMatrix m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

IntMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    IntMatrix m(n, std::vector<long>(n));
    for (auto& row : m)
      for (auto& v : row) v = draw(rng);
    if (!int_det(m).is_zero()) return m;
  }
}

SeriesMatrix lift(const IntMatrix& m) {
  SeriesMatrix s(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) s.at(i, j) = PuiseuxSeries(m[i][j]);
  return s;
}

std::vector<PuiseuxSeries> translate(const SphericalModel& model, const ModelPoint& point, std::mt19937_64& rng) {
  switch (model.kind) {
    case ModelKind::Torus: {
      const auto& p = std::get<TorusPoint>(point);
      std::vector<PuiseuxSeries> out;
      for (const auto& c : p) {
        long g = 0;
        while (g == 0) g = draw(rng);
        out.push_back(PuiseuxSeries(g) * c);
      }
      return out;
    }
    case ModelKind::Sl2PuncturedPlane: {
      const auto& p = std::get<Sl2Point>(point);
      IntMatrix g = random_invertible(rng, 2);
      return {PuiseuxSeries(g[0][0]) * p.x + PuiseuxSeries(g[0][1]) * p.y,
              PuiseuxSeries(g[1][0]) * p.x + PuiseuxSeries(g[1][1]) * p.y};
    }
    case ModelKind::GeneralLinear: {
      const auto& p = std::get<SeriesMatrix>(point);
      SeriesMatrix g1 = lift(random_invertible(rng, model.n));
      SeriesMatrix g2 = lift(random_invertible(rng, model.n));
      SeriesMatrix m = g1 * p * g2;
      std::vector<PuiseuxSeries> out;
      for (std::size_t i = 0; i < model.n; ++i)
        for (std::size_t j = 0; j < model.n; ++j) out.push_back(m.at(i, j));
      return out;
    }
  }
  throw InvalidArgument("unknown model");
}

void check_point(const SphericalModel& model, const ModelPoint& point) {
  bool ok = (model.kind == ModelKind::Torus && std::holds_alternative<TorusPoint>(point)) ||
            (model.kind == ModelKind::Sl2PuncturedPlane && std::holds_alternative<Sl2Point>(point)) ||
            (model.kind == ModelKind::GeneralLinear && std::holds_alternative<SeriesMatrix>(point));
  if (!ok) throw InvalidPoint("point does not belong to model " + model.name());
}

}  // namespace

SumihiroEstimate sumihiro_estimate(const SphericalModel& model, const ModelPoint& point, const QPolynomial& f,
                                   std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw InvalidArgument("sumihiro_estimate needs at least two samples");
  if (f.is_zero()) throw ZeroPolynomial("sumihiro_estimate of the zero function");
  if (f.nvars() != model.chart_vars()) throw RankMismatch("function has the wrong number of chart variables");
  check_point(model, point);
  SumihiroEstimate est;
  est.samples = samples;
  std::size_t first_hit = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(s + 1)));
    std::vector<PuiseuxSeries> coords = translate(model, point, rng);
    PuiseuxSeries value = substitute(f, coords);
    std::optional<Rational> o;
    if (!value.is_exact_zero()) o = value.ord();
    est.sample_values.push_back(o);
    if (o && (!est.value || *o < *est.value)) {
      est.value = o;
      first_hit = s;
    }
  }
  est.certificate = est.value ? samples - first_hit : 0;
  est.non_generic_warning = 2 * est.certificate < samples;
  return est;
}

}  // namespace spherotrop
