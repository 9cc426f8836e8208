#include "spherotrop/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "spherotrop/amoeba.hpp"
#include "spherotrop/error.hpp"
#include "spherotrop/grobner_fan.hpp"
#include "spherotrop/json_io.hpp"
#include "spherotrop/snf.hpp"
#include "spherotrop/spherical.hpp"
#include "spherotrop/spherical_trop.hpp"
#include "spherotrop/tropical.hpp"

namespace spherotrop::cli {

namespace {

using io::Json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::uint64_t seed = 0;
};

void emit(Context& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

void diagnose(std::ostream& err, const std::string& level, const std::string& kind, const std::string& message,
              Json extra = Json::object()) {
  Json j{{"level", level}, {"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  err << j.dump() << "\n";
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("cannot parse number '" + item + "'");
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// ---- subcommands ---------------------------------------------------------

int cmd_gfan(Context& ctx, const std::string& ideal_path) {
  io::NamedIdeal ideal = io::decode_ideal(io::read_file(ideal_path));
  emit(ctx, io::encode(groebner_fan_enumerate(ideal.generators), ideal.vars));
  return kOk;
}

int cmd_trop(Context& ctx, const std::string& ideal_path, const std::string& poly_path, const std::string& grid_path) {
  Json out;
  if (!poly_path.empty()) {
    io::NamedPolynomial f = io::decode_polynomial(io::read_file(poly_path));
    out["hypersurface"] = io::encode(trop_hypersurface(f.poly));
  }
  if (!ideal_path.empty()) {
    io::NamedIdeal ideal = io::decode_ideal(io::read_file(ideal_path));
    Json hs = Json::array();
    for (const auto& g : ideal.generators) hs.push_back(io::encode(trop_hypersurface(g)));
    out["hypersurfaces"] = hs;
    if (!grid_path.empty()) {
      Json members = Json::array();
      for (const auto& w : io::decode_grid(io::read_file(grid_path)))
        if (trop_membership(ideal.generators, w)) members.push_back(io::encode(w));
      out["members"] = members;
    }
  } else if (!grid_path.empty()) {
    throw InvalidArgument("--grid needs --ideal");
  }
  if (out.is_null()) throw InvalidArgument("trop needs --ideal or --poly");
  emit(ctx, out);
  return kOk;
}

const char* membership_name(MembershipKind k) {
  switch (k) {
    case MembershipKind::Interior: return "interior";
    case MembershipKind::Face: return "face";
    case MembershipKind::Outside: return "outside";
  }
  return "";
}

int cmd_trop_point(Context& ctx, const std::string& model_name, const std::string& point_path,
                   const std::string& function_path, std::size_t samples) {
  SphericalModel model = SphericalModel::parse(model_name);
  ModelPoint point = io::decode_model_point(model, io::read_file(point_path));
  RationalVector v = model_tropicalize(model, point);
  ConeMembership m = model.cone.membership(v);
  Json out{{"model", model.name()}, {"value", io::encode(v)}, {"membership", membership_name(m.kind)},
           {"tight_roots", m.tight_roots}};
  if (!function_path.empty()) {
    io::NamedPolynomial f = io::decode_polynomial(io::read_file(function_path), {}, RingMode::Laurent);
    SumihiroEstimate est = sumihiro_estimate(model, point, f.rational(), samples, ctx.seed);
    if (est.non_generic_warning)
      diagnose(ctx.err, "warning", "NonGenericWarning",
               "minimum stabilized for only " + std::to_string(est.certificate) + " of " +
                   std::to_string(est.samples) + " samples");
    out["sumihiro"] = io::encode(est);
  }
  emit(ctx, out);
  return kOk;
}

int cmd_sph_trop(Context& ctx, const std::string& example, const std::string& input_path,
                 const std::string& family_path, const std::string& subs_path) {
  if (!family_path.empty()) {
    ModelFamily family = io::decode_family(io::read_file(family_path));
    auto subs = subs_path.empty() ? default_substitutions(family.params.size())
                                  : io::decode_substitutions(io::read_file(subs_path));
    CurveSample s = curve_sampling_trop(family, subs, InvalidPolicy::Skip);
    if (s.skipped)
      diagnose(ctx.err, "warning", "InvalidPoint", std::to_string(s.skipped) + " substitutions left the model");
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(io::encode(p));
    emit(ctx, Json{{"model", family.model.name()}, {"points", pts}, {"skipped", s.skipped}});
    return kOk;
  }
  if (input_path.empty()) throw InvalidArgument("sph-trop needs --input or --family");
  io::NamedPolynomial f = io::decode_polynomial(io::read_file(input_path));
  QPolynomial h = f.rational();
  if (example == "sl2") {
    Json out = io::encode(sl2_trop_hypersurface(h));
    auto [m, d] = delta_polytope(h);
    out["delta"] = Json::array({m, d});
    emit(ctx, out);
    return kOk;
  }
  if (example == "gl2") {
    emit(ctx, io::encode(gl2_borel_trop(h)));
    return kOk;
  }
  throw InvalidArgument("--example must be sl2 or gl2");
}

Json encode_list(const std::vector<std::string>& vars, const std::vector<QPolynomial>& polys) {
  Json a = Json::array();
  for (const auto& g : polys) {
    Json p = io::encode(vars, g);
    p.erase("vars");
    a.push_back(p);
  }
  return a;
}

int cmd_sph_gb(Context& ctx, const std::string& ideal_path) {
  io::NamedIdeal ideal = io::decode_ideal(io::read_file(ideal_path));
  Sl2SphericalBasis gb = sl2_spherical_gb(ideal.generators);
  Sl2FanCells cells = sl2_spherical_fan(ideal.generators);
  emit(ctx, Json{{"vars", ideal.vars},
                 {"basis", encode_list(ideal.vars, gb.basis)},
                 {"spherical_initial", encode_list(ideal.vars, gb.spherical_initial)},
                 {"fan",
                  {{"negative", encode_list(ideal.vars, cells.negative)},
                   {"zero", encode_list(ideal.vars, cells.zero)},
                   {"positive", encode_list(ideal.vars, cells.positive)}}}});
  return kOk;
}

int cmd_snf(Context& ctx, const std::string& matrix_path, const std::string& method) {
  SeriesMatrix a = io::decode_matrix(io::read_file(matrix_path));
  io::SnfOutput out;
  if (method == "minors")
    out.factors = invariant_factors_minors(a);
  else if (method == "elimination")
    out.factors = invariant_factors_elimination(a).factors;
  else
    throw InvalidArgument("--method must be minors or elimination");
  for (const auto& f : out.factors) out.ord_det += f;
  emit(ctx, io::encode(out));
  return kOk;
}

int cmd_svd_limit(Context& ctx, const std::string& matrix_path, const std::string& ts, double tol) {
  SeriesMatrix a = io::decode_matrix(io::read_file(matrix_path));
  LimitReport r = snf_svd_limit_check(a, parse_doubles(ts), tol);
  emit(ctx, io::encode(r));
  if (!r.passed) {
    diagnose(ctx.err, "error", "CheckFailed", "singular values do not approach the invariant factors within tolerance");
    return kCheckFailed;
  }
  return kOk;
}

int cmd_amoeba(Context& ctx, const std::string& model_name, const std::string& param_path, double t,
               const std::string& outs, const std::string& grid_path) {
  ModelFamily family = io::decode_family(io::read_file(param_path));
  if (!model_name.empty() && SphericalModel::parse(model_name).name() != family.model.name())
    throw InvalidArgument("--model does not match the family's model");
  AmoebaGrid grid = grid_path.empty() ? AmoebaGrid::polar(family.params.size(), t, -3.0, 3.0, 61, 8)
                                      : io::decode_amoeba_grid(io::read_file(grid_path), family.params.size(), t);
  AmoebaCloud cloud = amoeba_sample(family, t, grid);
  if (cloud.skipped)
    diagnose(ctx.err, "warning", "DegeneratePoint", std::to_string(cloud.skipped) + " samples were degenerate");
  if (outs.empty()) {
    emit(ctx, io::encode(cloud));
    return kOk;
  }
  Json written = Json::array();
  for (const auto& path : split(outs)) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".svg")
      write_file(path, amoeba_svg(cloud, family.model));
    else if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
      write_file(path, amoeba_csv(cloud));
    else
      throw InvalidArgument("output '" + path + "' must end in .csv or .svg");
    written.push_back(path);
  }
  emit(ctx, Json{{"t", t}, {"points", cloud.points.size()}, {"skipped", cloud.skipped}, {"outputs", written}});
  return kOk;
}

int cmd_check_fundamental(Context& ctx, const std::string& ideal_path, const std::string& curves_path,
                          const std::string& grid_path) {
  io::NamedIdeal ideal = io::decode_ideal(io::read_file(ideal_path));
  std::vector<TorusPoint> curves = curves_path.empty() ? std::vector<TorusPoint>{} : io::decode_curves(io::read_file(curves_path));
  std::vector<WeightVector> grid = grid_path.empty() ? std::vector<WeightVector>{} : io::decode_grid(io::read_file(grid_path));
  FundamentalReport r = fundamental_check(ideal.generators, curves, grid);
  emit(ctx, io::encode(r));
  if (!r.passed) {
    diagnose(ctx.err, "error", "CheckFailed", "fundamental theorem cross-check failed");
    return kCheckFailed;
  }
  return kOk;
}

QPolynomial poly2(std::initializer_list<std::pair<Exponent, long>> terms, std::size_t n = 2) {
  QPolynomial p(n);
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

PuiseuxSeries series(std::initializer_list<std::pair<long, long>> terms) {
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : terms) t[e] = Rational(c);
  return PuiseuxSeries::from_terms(1, t);
}

int cmd_check_all(Context& ctx) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"sl2 x+y-1 is Q<=0",
       [] { return sl2_trop_hypersurface(poly2({{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -1}})).combined == RaySet1D::nonpositive(); }},
      {"sl2 x-y is Q", [] { return sl2_trop_hypersurface(poly2({{{1, 0}, 1}, {{0, 1}, -1}})).combined == RaySet1D::line(); }},
      {"gl2 c-1 is the ray R1",
       [] {
         Cone r1(2);
         r1.add_equality({Rational(0), Rational(1)});
         r1.add_inequality({Rational(1), Rational(0)});
         Cone2Set expected{{r1.canonical()}};
         return gl2_borel_trop(poly2({{{0, 0, 1, 0}, 1}, {{0, 0, 0, 0}, -1}}, 4)).same_pieces(expected);
       }},
      {"snf of [[t+1,t],[t,0]] is (2,0)",
       [] {
         SeriesMatrix a({{series({{0, 1}, {1, 1}}), series({{1, 1}})}, {series({{1, 1}}), PuiseuxSeries()}});
         std::vector<Rational> expected{Rational(2), Rational(0)};
         return invariant_factors_minors(a) == expected && invariant_factors_elimination(a).factors == expected;
       }},
      {"singular values approach invariant factors",
       [] {
         SeriesMatrix a({{series({{0, 1}, {1, 1}}), series({{1, 1}})}, {series({{1, 1}}), PuiseuxSeries()}});
         return snf_svd_limit_check(a, {1e-1, 1e-2, 1e-3, 1e-4}).passed;
       }},
      {"fundamental theorem on x+y+1",
       [] {
         QPolynomial f = poly2({{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 1}});
         TorusPoint curve{series({{0, -1}, {1, -1}}), series({{1, 1}})};
         std::vector<WeightVector> grid;
         for (long a = -2; a <= 2; ++a)
           for (long b = -2; b <= 2; ++b) grid.push_back({Rational(a), Rational(b)});
         return fundamental_check({f}, {curve}, grid).passed;
       }},
      {"sumihiro estimate on (t^2, t^3)",
       [&ctx] {
         SumihiroEstimate e = sumihiro_estimate(SphericalModel::sl2(), Sl2Point{series({{2, 1}}), series({{3, 1}})},
                                                poly2({{{0, 1}, 1}}), 16, ctx.seed);
         return e.value && *e.value == Rational(2);
       }},
  };
  Json results = Json::array();
  bool all = true;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const Error& e) {
      diagnose(ctx.err, "error", e.kind(), name + ": " + e.what());
    }
    all = all && ok;
    results.push_back(Json{{"name", name}, {"passed", ok}});
  }
  emit(ctx, Json{{"checks", results}, {"passed", all}});
  return all ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner, tropical and spherical tropical computations over Puiseux series", "spherotrop"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  Context ctx{out, err};
  std::string precision;
  app.add_option("--seed", ctx.seed, "Seed for randomized estimators")->default_val(0);
  app.add_option("--precision", precision, "Series truncation used when expanding exact series (default 20)");

  std::string ideal, poly, grid, model, point, function, example, input, family, subs, matrix, method = "minors",
                                                                                               ts = "0.1,0.01,0.001,0.0001",
                                                                                               outs, curves;
  std::size_t samples = 16;
  double tol = 0.05, t = 0.01;

  auto* gfan = app.add_subcommand("gfan", "Groebner fan of a homogeneous ideal");
  gfan->add_option("--ideal", ideal, "Ideal JSON")->required()->check(CLI::ExistingFile);

  auto* trop = app.add_subcommand("trop", "Tropical hypersurfaces and membership on a grid");
  trop->add_option("--ideal", ideal, "Ideal JSON")->check(CLI::ExistingFile);
  trop->add_option("--poly", poly, "Polynomial with series coefficients")->check(CLI::ExistingFile);
  trop->add_option("--grid", grid, "Weight grid JSON")->check(CLI::ExistingFile);

  auto* tpoint = app.add_subcommand("trop-point", "Tropicalize a model point");
  tpoint->add_option("--model", model, "sl2, gl2, gl:n or torus:n")->required();
  tpoint->add_option("--point", point, "Point JSON")->required()->check(CLI::ExistingFile);
  tpoint->add_option("--function", function, "Chart function for the generic-translate estimate")
      ->check(CLI::ExistingFile);
  tpoint->add_option("--samples", samples, "Number of group samples")->check(CLI::Range(2, 100000));

  auto* sph = app.add_subcommand("sph-trop", "Spherical tropical sets of the worked examples");
  sph->add_option("--example", example, "sl2 or gl2")->check(CLI::IsMember({"sl2", "gl2"}));
  sph->add_option("--input", input, "Polynomial JSON")->check(CLI::ExistingFile);
  sph->add_option("--family", family, "Parametrized family JSON for curve sampling")->check(CLI::ExistingFile);
  sph->add_option("--substitutions", subs, "Substitutions JSON")->check(CLI::ExistingFile);

  auto* sgb = app.add_subcommand("sph-gb", "SL(2) spherical Groebner basis and fan");
  sgb->add_option("--ideal", ideal, "Ideal JSON in x, y")->required()->check(CLI::ExistingFile);

  auto* snf = app.add_subcommand("snf", "Invariant factors of a series matrix");
  snf->add_option("--matrix", matrix, "Matrix JSON")->required()->check(CLI::ExistingFile);
  snf->add_option("--method", method, "minors or elimination")->check(CLI::IsMember({"minors", "elimination"}));

  auto* svd = app.add_subcommand("svd-limit", "Singular values versus invariant factors as t -> 0");
  svd->add_option("--matrix", matrix, "Matrix JSON")->required()->check(CLI::ExistingFile);
  svd->add_option("--ts", ts, "Decreasing comma-separated t values");
  svd->add_option("--tol", tol, "Final deviation tolerance");

  auto* amoeba = app.add_subcommand("amoeba", "Spherical amoeba point cloud");
  amoeba->add_option("--model", model, "Model name (checked against the family)");
  amoeba->add_option("--param", family, "Parametrized family JSON")->required()->check(CLI::ExistingFile);
  amoeba->add_option("--t", t, "Logarithm base in (0, 1)");
  amoeba->add_option("--out", outs, "Comma-separated .csv/.svg outputs");
  amoeba->add_option("--grid", grid, "Sample grid JSON")->check(CLI::ExistingFile);

  auto* fund = app.add_subcommand("check-fundamental", "Cross-check the fundamental theorem on a torus ideal");
  fund->add_option("--ideal", ideal, "Ideal JSON")->required()->check(CLI::ExistingFile);
  fund->add_option("--curves", curves, "Curves JSON")->check(CLI::ExistingFile);
  fund->add_option("--grid", grid, "Weight grid JSON")->check(CLI::ExistingFile);

  auto* all = app.add_subcommand("check-all", "Run the built-in golden checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    diagnose(err, "error", "UsageError", e.what());
    return kInputError;
  }

  try {
    if (!precision.empty()) set_default_precision(Rational::parse(precision));
    int code = kOk;
    if (*gfan) code = cmd_gfan(ctx, ideal);
    else if (*trop) code = cmd_trop(ctx, ideal, poly, grid);
    else if (*tpoint) code = cmd_trop_point(ctx, model, point, function, samples);
    else if (*sph) code = cmd_sph_trop(ctx, example, input, family, subs);
    else if (*sgb) code = cmd_sph_gb(ctx, ideal);
    else if (*snf) code = cmd_snf(ctx, matrix, method);
    else if (*svd) code = cmd_svd_limit(ctx, matrix, ts, tol);
    else if (*amoeba) code = cmd_amoeba(ctx, model, family, t, outs, grid);
    else if (*fund) code = cmd_check_fundamental(ctx, ideal, curves, grid);
    else if (*all) code = cmd_check_all(ctx);
    set_default_precision(std::nullopt);
    return code;
  } catch (const PrecisionLoss& e) {
    set_default_precision(std::nullopt);
    diagnose(err, "error", e.kind(), e.what(), Json{{"bound", e.bound()}});
    return kPrecisionLoss;
  } catch (const NoConvergence& e) {
    set_default_precision(std::nullopt);
    diagnose(err, "error", e.kind(), e.what(), Json{{"residual", e.residual()}});
    return kFailure;
  } catch (const Error& e) {
    set_default_precision(std::nullopt);
    diagnose(err, "error", e.kind(), e.what());
    return kInputError;
  }
}

}  // namespace spherotrop::cli
