#include "spherotrop/json_io.hpp"

#include <fstream>
#include <sstream>

#include "spherotrop/error.hpp"

namespace spherotrop::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long>();
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

std::string string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

RingMode decode_mode(const Json& j, RingMode fallback) {
  if (!j.is_object() || !j.contains("mode")) return fallback;
  std::string m = string(j.at("mode"), "mode");
  if (m == "poly") return RingMode::Polynomial;
  if (m == "laurent") return RingMode::Laurent;
  fail("mode must be 'poly' or 'laurent'");
}

const char* mode_name(RingMode m) { return m == RingMode::Laurent ? "laurent" : "poly"; }

std::vector<std::string> decode_vars(const Json& j, const std::vector<std::string>& fallback) {
  if (!j.is_object() || !j.contains("vars")) return fallback;
  std::vector<std::string> vars;
  for (const auto& v : array(j.at("vars"), "vars")) vars.push_back(string(v, "variable name"));
  return vars;
}

Json encode_json_vars(const std::vector<std::string>& vars) {
  Json a = Json::array();
  for (const auto& v : vars) a.push_back(v);
  return a;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

}  // namespace

Json encode(const Rational& r) { return r.to_string(); }

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  fail("expected a rational as \"p/q\" or an integer");
}

Json encode(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

RationalVector decode_rational_vector(const Json& j) {
  RationalVector v;
  for (const auto& x : array(j, "vector")) v.push_back(decode_rational(x));
  return v;
}

Json encode(const PuiseuxSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({e, encode(c)}));
  Json j;
  j["k"] = s.ramification();
  j["terms"] = terms;
  j["trunc"] = s.truncation() ? encode(*s.truncation()) : Json("exact");
  return j;
}

PuiseuxSeries decode_series(const Json& j) {
  if (!j.is_object()) return PuiseuxSeries(decode_rational(j));
  long k = j.contains("k") ? integer(j.at("k"), "k") : 1;
  if (k <= 0) fail("ramification k must be positive");
  PuiseuxSeries::Terms terms;
  if (j.contains("terms")) {
    for (const auto& t : array(j.at("terms"), "terms")) {
      if (!t.is_array() || t.size() != 2) fail("series term must be [exponent, coefficient]");
      long e = integer(t[0], "series exponent");
      Rational c = decode_rational(t[1]);
      auto [it, inserted] = terms.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  std::optional<Rational> trunc;
  if (j.contains("trunc") && !(j.at("trunc").is_string() && j.at("trunc").get<std::string>() == "exact"))
    trunc = decode_rational(j.at("trunc"));
  return PuiseuxSeries::from_terms(k, std::move(terms), trunc);
}

namespace {

template <class Coeff>
Json encode_poly(const std::vector<std::string>& vars, const Polynomial<Coeff>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json exps = Json::array();
    for (long v : e) exps.push_back(v);
    terms.push_back(Json::array({exps, encode(c)}));
  }
  Json j;
  j["vars"] = encode_json_vars(vars.empty() ? default_names(f.nvars()) : vars);
  j["mode"] = mode_name(f.mode());
  j["terms"] = terms;
  return j;
}

}  // namespace

Json encode(const std::vector<std::string>& vars, const SeriesPolynomial& f) { return encode_poly(vars, f); }
Json encode(const std::vector<std::string>& vars, const QPolynomial& f) { return encode_poly(vars, f); }

NamedPolynomial decode_polynomial(const Json& j, const std::vector<std::string>& default_vars, RingMode default_mode) {
  NamedPolynomial out;
  out.vars = decode_vars(j, default_vars);
  RingMode mode = decode_mode(j, default_mode);
  out.poly = SeriesPolynomial(out.vars.size(), mode);
  for (const auto& t : array(field(j, "terms"), "terms")) {
    if (!t.is_array() || t.size() != 2) fail("polynomial term must be [[exponents], coefficient]");
    Exponent e;
    for (const auto& v : array(t[0], "exponent")) e.push_back(integer(v, "exponent entry"));
    if (e.size() != out.vars.size()) fail("exponent length does not match the variable list");
    try {
      out.poly.add_term(e, decode_series(t[1]));
    } catch (const InvalidArgument& err) {
      fail(err.what());
    }
  }
  return out;
}

Json encode(const NamedIdeal& ideal) {
  Json gens = Json::array();
  RingMode mode = RingMode::Polynomial;
  for (const auto& g : ideal.generators) {
    Json p = encode(ideal.vars, g);
    if (g.mode() == RingMode::Laurent) mode = RingMode::Laurent;
    p.erase("vars");
    gens.push_back(p);
  }
  Json j;
  j["vars"] = encode_json_vars(ideal.vars);
  j["mode"] = mode_name(mode);
  j["generators"] = gens;
  return j;
}

NamedIdeal decode_ideal(const Json& j) {
  NamedIdeal out;
  const Json* gens = &j;
  std::vector<std::string> vars;
  RingMode mode = RingMode::Polynomial;
  if (j.is_object()) {
    gens = &field(j, "generators");
    vars = decode_vars(j, {});
    mode = decode_mode(j, RingMode::Polynomial);
  }
  for (const auto& g : array(*gens, "generators")) {
    NamedPolynomial p = decode_polynomial(g, vars, mode);
    if (vars.empty()) vars = p.vars;
    if (p.vars != vars) fail("generators use different variable lists");
    try {
      out.generators.push_back(p.rational());
    } catch (const InvalidArgument&) {
      fail("ideal generators must have rational coefficients");
    }
  }
  if (out.generators.empty()) fail("ideal needs at least one generator");
  out.vars = vars;
  return out;
}

Json encode(const SeriesMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(encode(m.at(i, k)));
    rows.push_back(row);
  }
  return Json{{"matrix", rows}};
}

SeriesMatrix decode_matrix(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "matrix") : j;
  std::vector<std::vector<PuiseuxSeries>> out;
  for (const auto& r : array(rows, "matrix")) {
    std::vector<PuiseuxSeries> row;
    for (const auto& e : array(r, "matrix row")) row.push_back(decode_series(e));
    out.push_back(std::move(row));
  }
  if (out.empty()) fail("matrix is empty");
  try {
    return SeriesMatrix(std::move(out));
  } catch (const RankMismatch& e) {
    fail(e.what());
  }
}

ModelPoint decode_model_point(const SphericalModel& model, const Json& j) {
  if (model.kind == ModelKind::GeneralLinear) {
    SeriesMatrix m = decode_matrix(j.is_object() && j.contains("point") ? j.at("point") : j);
    if (m.size() != model.n) fail("matrix size does not match model " + model.name());
    return m;
  }
  const Json& pts = j.is_object() ? field(j, "point") : j;
  std::vector<PuiseuxSeries> coords;
  for (const auto& c : array(pts, "point")) coords.push_back(decode_series(c));
  if (coords.size() != model.chart_vars()) fail("point has the wrong number of coordinates for " + model.name());
  return make_model_point(model, coords);
}

Json encode(const ModelPoint& p) {
  if (const auto* m = std::get_if<SeriesMatrix>(&p)) return encode(*m);
  Json pts = Json::array();
  if (const auto* t = std::get_if<TorusPoint>(&p))
    for (const auto& c : *t) pts.push_back(encode(c));
  if (const auto* s = std::get_if<Sl2Point>(&p)) {
    pts.push_back(encode(s->x));
    pts.push_back(encode(s->y));
  }
  return Json{{"point", pts}};
}

ModelFamily decode_family(const Json& j) {
  ModelFamily f;
  try {
    f.model = SphericalModel::parse(string(field(j, "model"), "model"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(e.what());
  }
  for (const auto& p : array(field(j, "params"), "params")) f.params.push_back(string(p, "parameter name"));
  for (const auto& e : array(field(j, "entries"), "entries")) {
    NamedPolynomial p = decode_polynomial(e, f.params, RingMode::Laurent);
    if (p.vars != f.params) fail("family entries must use the family parameters as variables");
    try {
      f.coordinates.push_back(p.rational().with_mode(RingMode::Laurent));
    } catch (const InvalidArgument&) {
      fail("family entries must have rational coefficients");
    }
  }
  if (f.coordinates.size() != f.model.chart_vars())
    fail("family needs " + std::to_string(f.model.chart_vars()) + " entries for model " + f.model.name());
  return f;
}

Json encode(const ModelFamily& f) {
  Json entries = Json::array();
  for (const auto& c : f.coordinates) {
    Json p = encode(f.params, c);
    p.erase("vars");
    entries.push_back(p);
  }
  return Json{{"model", f.model.name()}, {"params", encode_json_vars(f.params)}, {"entries", entries}};
}

std::vector<WeightVector> decode_grid(const Json& j) {
  std::vector<WeightVector> out;
  if (j.is_object() && j.contains("box")) {
    const Json& box = j.at("box");
    Rational lo = decode_rational(field(box, "lo"));
    Rational hi = decode_rational(field(box, "hi"));
    Rational step = decode_rational(field(box, "step"));
    long dim = integer(field(j, "dim"), "dim");
    if (step.sign() <= 0 || hi < lo || dim <= 0 || dim > 6) fail("invalid grid box");
    std::vector<Rational> axis;
    for (Rational v = lo; v <= hi; v += step) axis.push_back(v);
    out.push_back({});
    for (long d = 0; d < dim; ++d) {
      std::vector<WeightVector> next;
      for (const auto& prefix : out)
        for (const auto& v : axis) {
          auto w = prefix;
          w.push_back(v);
          next.push_back(std::move(w));
        }
      out = std::move(next);
    }
    return out;
  }
  const Json& pts = j.is_object() ? field(j, "points") : j;
  for (const auto& p : array(pts, "points")) out.push_back(decode_rational_vector(p));
  return out;
}

std::vector<TorusPoint> decode_curves(const Json& j) {
  std::vector<TorusPoint> out;
  const Json& cs = j.is_object() ? field(j, "curves") : j;
  for (const auto& c : array(cs, "curves")) {
    TorusPoint p;
    for (const auto& s : array(c, "curve")) p.push_back(decode_series(s));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<PuiseuxSeries>> decode_substitutions(const Json& j) {
  std::vector<std::vector<PuiseuxSeries>> out;
  const Json& ss = j.is_object() ? field(j, "substitutions") : j;
  for (const auto& s : array(ss, "substitutions")) {
    std::vector<PuiseuxSeries> row;
    for (const auto& v : array(s, "substitution")) row.push_back(decode_series(v));
    out.push_back(std::move(row));
  }
  return out;
}

AmoebaGrid decode_amoeba_grid(const Json& j, std::size_t nparams, double t) {
  if (j.is_object() && j.contains("polar")) {
    const Json& p = j.at("polar");
    try {
      return AmoebaGrid::polar(nparams, t, number(field(p, "rho_min"), "rho_min"), number(field(p, "rho_max"), "rho_max"),
                               static_cast<int>(integer(field(p, "rho_steps"), "rho_steps")),
                               static_cast<int>(integer(field(p, "angles"), "angles")));
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
  }
  AmoebaGrid grid;
  const Json& pts = j.is_object() ? field(j, "points") : j;
  for (const auto& p : array(pts, "points")) {
    ComplexVector v;
    for (const auto& z : array(p, "parameter tuple")) {
      if (z.is_number()) {
        v.emplace_back(z.get<double>(), 0.0);
      } else if (z.is_array() && z.size() == 2) {
        v.emplace_back(number(z[0], "real part"), number(z[1], "imaginary part"));
      } else {
        fail("parameter value must be a number or [re, im]");
      }
    }
    if (v.size() != nparams) fail("parameter tuple has the wrong length");
    grid.points.push_back(std::move(v));
  }
  return grid;
}

Json encode(const Polyhedron& p) {
  Json eq = Json::array(), ineq = Json::array();
  for (const auto& h : p.constraints()) {
    Json c{{"normal", encode(h.normal)}, {"offset", encode(h.offset)}};
    (h.relation == Relation::Equal ? eq : ineq).push_back(c);
  }
  return Json{{"equalities", eq}, {"inequalities", ineq}};
}

Polyhedron decode_polyhedron(const Json& j, std::size_t dim) {
  Polyhedron p(dim);
  auto read = [&](const char* key, Relation rel) {
    if (!j.contains(key)) return;
    for (const auto& c : array(j.at(key), key)) {
      RationalVector n = decode_rational_vector(field(c, "normal"));
      if (n.size() != dim) fail("constraint normal has the wrong length");
      Rational off = c.contains("offset") ? decode_rational(c.at("offset")) : Rational(0);
      p.add({n, off, rel});
    }
  };
  if (!j.is_object()) fail("polyhedron must be an object");
  read("equalities", Relation::Equal);
  read("inequalities", Relation::GreaterEq);
  return p;
}

Json encode(const TropicalSet& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces) pieces.push_back(encode(p));
  return Json{{"dim", s.ambient_dim}, {"pieces", pieces}};
}

TropicalSet decode_tropical_set(const Json& j) {
  TropicalSet s;
  s.ambient_dim = static_cast<std::size_t>(integer(field(j, "dim"), "dim"));
  for (const auto& p : array(field(j, "pieces"), "pieces")) s.pieces.push_back(decode_polyhedron(p, s.ambient_dim));
  return s;
}

Json encode(const GroebnerFan& fan, const std::vector<std::string>& vars) {
  Json cones = Json::array();
  for (const auto& c : fan.cones) {
    Json normals = Json::array(), relations = Json::array();
    for (const auto& h : c.cone.constraints()) {
      normals.push_back(encode(h.normal));
      relations.push_back(h.relation == Relation::Equal ? "=" : ">=");
    }
    Json ideal = Json::array();
    for (const auto& g : c.initial_ideal) {
      Json p = encode(vars, g);
      p.erase("vars");
      ideal.push_back(p);
    }
    cones.push_back(Json{{"normals", normals}, {"relations", relations}, {"interior", encode(c.interior)},
                         {"initial_ideal", ideal}});
  }
  Json adj = Json::array();
  for (const auto& [a, b] : fan.adjacency) adj.push_back(Json::array({a, b}));
  return Json{{"vars", encode_json_vars(vars)}, {"ambient_dim", fan.ambient_dim}, {"cones", cones}, {"adjacency", adj}};
}

GroebnerFan decode_fan(const Json& j) {
  GroebnerFan fan;
  fan.ambient_dim = static_cast<std::size_t>(integer(field(j, "ambient_dim"), "ambient_dim"));
  std::vector<std::string> vars = decode_vars(j, default_names(fan.ambient_dim));
  for (const auto& c : array(field(j, "cones"), "cones")) {
    FanCone fc;
    fc.cone = Cone(fan.ambient_dim);
    const Json& normals = array(field(c, "normals"), "normals");
    const Json& relations = array(field(c, "relations"), "relations");
    if (normals.size() != relations.size()) fail("normals and relations differ in length");
    for (std::size_t i = 0; i < normals.size(); ++i) {
      std::string rel = string(relations[i], "relation");
      if (rel != "=" && rel != ">=") fail("relation must be '=' or '>='");
      fc.cone.add({decode_rational_vector(normals[i]), Rational(0), rel == "=" ? Relation::Equal : Relation::GreaterEq});
    }
    fc.interior = decode_rational_vector(field(c, "interior"));
    for (const auto& g : array(field(c, "initial_ideal"), "initial_ideal"))
      fc.initial_ideal.push_back(decode_polynomial(g, vars).rational());
    fan.cones.push_back(std::move(fc));
  }
  for (const auto& e : array(field(j, "adjacency"), "adjacency")) {
    if (!e.is_array() || e.size() != 2) fail("adjacency entries are pairs");
    fan.adjacency.emplace_back(static_cast<std::size_t>(integer(e[0], "cone index")),
                               static_cast<std::size_t>(integer(e[1], "cone index")));
  }
  return fan;
}

Json encode(const Sl2Hypersurface& h) {
  return Json{{"chart_B", h.chart_b.to_string()},
              {"chart_Bminus", h.chart_b_minus.to_string()},
              {"combined", h.combined.to_string()}};
}

Sl2Hypersurface decode_sl2_hypersurface(const Json& j) {
  Sl2Hypersurface h;
  h.chart_b = RaySet1D::parse(string(field(j, "chart_B"), "chart_B"));
  h.chart_b_minus = RaySet1D::parse(string(field(j, "chart_Bminus"), "chart_Bminus"));
  h.combined = RaySet1D::parse(string(field(j, "combined"), "combined"));
  return h;
}

Json encode(const Cone2Set& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces) pieces.push_back(encode(p));
  return Json{{"pieces", pieces}};
}

Cone2Set decode_cone2set(const Json& j) {
  Cone2Set s;
  for (const auto& p : array(field(j, "pieces"), "pieces")) s.pieces.push_back(decode_polyhedron(p, 2));
  return s;
}

Json encode(const SnfOutput& s) {
  return Json{{"factors", encode(s.factors)}, {"ord_det", encode(s.ord_det)}};
}

SnfOutput decode_snf(const Json& j) {
  return {decode_rational_vector(field(j, "factors")), decode_rational(field(j, "ord_det"))};
}

Json encode(const LimitReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"t", row.t}, {"log_singular_values", row.log_singular_values}, {"deviation", row.deviation}});
  return Json{{"factors", encode(r.factors)},     {"rows", rows},
              {"nonincreasing", r.nonincreasing}, {"final_deviation", r.final_deviation},
              {"tolerance", r.tolerance},         {"passed", r.passed}};
}

LimitReport decode_limit_report(const Json& j) {
  LimitReport r;
  r.factors = decode_rational_vector(field(j, "factors"));
  for (const auto& row : array(field(j, "rows"), "rows")) {
    LimitRow lr;
    lr.t = number(field(row, "t"), "t");
    for (const auto& v : array(field(row, "log_singular_values"), "log_singular_values"))
      lr.log_singular_values.push_back(number(v, "log singular value"));
    lr.deviation = number(field(row, "deviation"), "deviation");
    r.rows.push_back(std::move(lr));
  }
  r.nonincreasing = field(j, "nonincreasing").get<bool>();
  r.final_deviation = number(field(j, "final_deviation"), "final_deviation");
  r.tolerance = number(field(j, "tolerance"), "tolerance");
  r.passed = field(j, "passed").get<bool>();
  return r;
}

namespace {

Json encode_optional(const std::optional<Rational>& v) { return v ? encode(*v) : Json(nullptr); }
std::optional<Rational> decode_optional(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return decode_rational(j);
}

}  // namespace

Json encode(const SumihiroEstimate& e) {
  Json values = Json::array();
  for (const auto& v : e.sample_values) values.push_back(encode_optional(v));
  return Json{{"value", encode_optional(e.value)},
              {"certificate", e.certificate},
              {"samples", e.samples},
              {"non_generic_warning", e.non_generic_warning},
              {"sample_values", values}};
}

SumihiroEstimate decode_sumihiro(const Json& j) {
  SumihiroEstimate e;
  e.value = decode_optional(field(j, "value"));
  e.certificate = static_cast<std::size_t>(integer(field(j, "certificate"), "certificate"));
  e.samples = static_cast<std::size_t>(integer(field(j, "samples"), "samples"));
  e.non_generic_warning = field(j, "non_generic_warning").get<bool>();
  for (const auto& v : array(field(j, "sample_values"), "sample_values")) e.sample_values.push_back(decode_optional(v));
  return e;
}

namespace {

Json encode_points(const std::vector<RationalVector>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(encode(p));
  return a;
}

std::vector<RationalVector> decode_points(const Json& j) {
  std::vector<RationalVector> out;
  for (const auto& p : array(j, "points")) out.push_back(decode_rational_vector(p));
  return out;
}

}  // namespace

Json encode(const FundamentalReport& r) {
  return Json{{"passed", r.passed},
              {"curve_points", encode_points(r.curve_points)},
              {"curve_failures", encode_points(r.curve_failures)},
              {"grid_members", encode_points(r.grid_members)},
              {"grid_failures", encode_points(r.grid_failures)}};
}

FundamentalReport decode_fundamental(const Json& j) {
  FundamentalReport r;
  r.passed = field(j, "passed").get<bool>();
  r.curve_points = decode_points(field(j, "curve_points"));
  r.curve_failures = decode_points(field(j, "curve_failures"));
  r.grid_members = decode_points(field(j, "grid_members"));
  r.grid_failures = decode_points(field(j, "grid_failures"));
  return r;
}

Json encode(const AmoebaCloud& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) {
    Json params = Json::array();
    for (const auto& z : p.params) params.push_back(Json::array({z.real(), z.imag()}));
    pts.push_back(Json{{"coords", p.coords}, {"params", params}});
  }
  return Json{{"t", c.t}, {"points", pts}, {"skipped", c.skipped}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace spherotrop::io
