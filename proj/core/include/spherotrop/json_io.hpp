#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spherotrop/amoeba.hpp"
#include "spherotrop/grobner_fan.hpp"
#include "spherotrop/polyhedron.hpp"
#include "spherotrop/puiseux.hpp"
#include "spherotrop/snf.hpp"
#include "spherotrop/spherical.hpp"
#include "spherotrop/spherical_trop.hpp"
#include "spherotrop/tropical.hpp"

/// JSON encodings. Exact values are strings "p/q" (plain "p" for integers);
/// decoders also accept JSON integers. Every encoder has a matching decoder.
namespace spherotrop::io {

using Json = nlohmann::json;

Json encode(const Rational& r);
Rational decode_rational(const Json& j);
Json encode(const RationalVector& v);
RationalVector decode_rational_vector(const Json& j);

/// {"k": k, "terms": [[e, "c"], ...], "trunc": "T" | "exact"}: sum c t^(e/k).
/// A bare rational decodes as an exact constant.
Json encode(const PuiseuxSeries& s);
PuiseuxSeries decode_series(const Json& j);

/// Polynomial with named variables.
struct NamedPolynomial {
  std::vector<std::string> vars;
  SeriesPolynomial poly;

  QPolynomial rational() const { return to_rational_polynomial(poly); }
};

/// {"vars": [...], "mode": "poly" | "laurent", "terms": [[[exps], coeff], ...]}.
/// `vars` and `mode` may be omitted when supplied by the context.
Json encode(const std::vector<std::string>& vars, const SeriesPolynomial& f);
Json encode(const std::vector<std::string>& vars, const QPolynomial& f);
NamedPolynomial decode_polynomial(const Json& j, const std::vector<std::string>& default_vars = {},
                                  RingMode default_mode = RingMode::Polynomial);

struct NamedIdeal {
  std::vector<std::string> vars;
  std::vector<QPolynomial> generators;
};

/// {"vars", "mode", "generators": [polynomial...]} or a bare array.
Json encode(const NamedIdeal& ideal);
NamedIdeal decode_ideal(const Json& j);

/// {"matrix": [[series-or-rational, ...], ...]} or the bare nested array.
Json encode(const SeriesMatrix& m);
SeriesMatrix decode_matrix(const Json& j);

/// Torus/SL(2): {"point": [series...]}; GL(n): a matrix.
ModelPoint decode_model_point(const SphericalModel& model, const Json& j);
Json encode(const ModelPoint& p);

/// {"model": "gl2", "params": ["u"], "entries": [polynomial...]}.
ModelFamily decode_family(const Json& j);
Json encode(const ModelFamily& f);

/// {"points": [[w...], ...]} or {"box": {"lo", "hi", "step"}, "dim": n}.
std::vector<WeightVector> decode_grid(const Json& j);

/// {"curves": [[series...], ...]}.
std::vector<TorusPoint> decode_curves(const Json& j);
/// {"substitutions": [[series...], ...]}.
std::vector<std::vector<PuiseuxSeries>> decode_substitutions(const Json& j);

/// {"points": [[[re, im], ...], ...]} or {"polar": {"rho_min", "rho_max", "rho_steps", "angles"}}.
AmoebaGrid decode_amoeba_grid(const Json& j, std::size_t nparams, double t);

Json encode(const Polyhedron& p);
Polyhedron decode_polyhedron(const Json& j, std::size_t dim);
Json encode(const TropicalSet& s);
TropicalSet decode_tropical_set(const Json& j);

Json encode(const GroebnerFan& fan, const std::vector<std::string>& vars);
GroebnerFan decode_fan(const Json& j);

Json encode(const Sl2Hypersurface& h);
Sl2Hypersurface decode_sl2_hypersurface(const Json& j);
Json encode(const Cone2Set& s);
Cone2Set decode_cone2set(const Json& j);

struct SnfOutput {
  std::vector<Rational> factors;
  Rational ord_det;
  friend bool operator==(const SnfOutput&, const SnfOutput&) = default;
};
Json encode(const SnfOutput& s);
SnfOutput decode_snf(const Json& j);

Json encode(const LimitReport& r);
LimitReport decode_limit_report(const Json& j);

Json encode(const SumihiroEstimate& e);
SumihiroEstimate decode_sumihiro(const Json& j);

Json encode(const FundamentalReport& r);
FundamentalReport decode_fundamental(const Json& j);

Json encode(const AmoebaCloud& c);

/// Parse a whole file; wraps syntax errors in ParseError.
Json read_file(const std::string& path);
Json parse_text(const std::string& text);

}  // namespace spherotrop::io
