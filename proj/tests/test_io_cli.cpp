#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spherotrop/cli.hpp"
#include "spherotrop/error.hpp"
#include "spherotrop/json_io.hpp"
#include "support/builders.hpp"

using namespace spherotrop;
using io::Json;
using testing_support::P;
using testing_support::Q;
using testing_support::S;
using testing_support::T;

namespace {

const std::vector<std::string> XY{"x", "y"};

std::string data(const std::string& name) { return std::string(SPHEROTROP_DATA_DIR) + "/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json last_diagnostic(const std::string& err) {
  std::istringstream in(err);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return Json::parse(last);
}

}  // namespace

TEST(JsonCodec, SeriesRoundTrip) {
  for (const auto& s : {PuiseuxSeries(), PuiseuxSeries(Rational(-3, 4)), T(2, Rational(-5, 3)) + T(1, Rational(1, 2)),
                        S({{0, 1}, {2, 7}}).truncated(Rational(5, 2)), PuiseuxSeries::big_o(Rational(4))}) {
    Json j = io::encode(s);
    EXPECT_EQ(io::decode_series(j), s) << j.dump();
    EXPECT_EQ(io::encode(io::decode_series(j)), j);
  }
  EXPECT_EQ(io::decode_series(Json("7/2")), PuiseuxSeries(Rational(7, 2)));
  EXPECT_THROW(io::decode_series(Json::parse(R"({"k":0,"terms":[]})")), ParseError);
  EXPECT_THROW(io::decode_series(Json(1.5)), ParseError);
}

TEST(JsonCodec, PolynomialAndIdealRoundTrip) {
  QPolynomial f = P("x^-2*y + 3/7", XY, RingMode::Laurent);
  Json j = io::encode(XY, f);
  auto back = io::decode_polynomial(j);
  EXPECT_EQ(back.vars, XY);
  EXPECT_EQ(back.rational(), f);
  io::NamedIdeal ideal{XY, {P("x + y", XY), P("x*y - 1", XY)}};
  auto ib = io::decode_ideal(io::encode(ideal));
  EXPECT_EQ(ib.generators, ideal.generators);
  EXPECT_THROW(io::decode_polynomial(Json::parse(R"({"vars":["x"],"terms":[[[1,2],"1"]]})")), ParseError);
}

TEST(JsonCodec, StructuredOutputsRoundTrip) {
  io::SnfOutput snf{Q({2, 0}), Rational(2)};
  EXPECT_EQ(io::decode_snf(io::encode(snf)), snf);
  Polyhedron p(2);
  p.add_equality(Q({1, -1}));
  p.add_inequality(Q({-1, 0}), Rational(3));
  EXPECT_EQ(io::decode_polyhedron(io::encode(p), 2), p);
  Sl2Hypersurface h{RaySet1D::origin(), RaySet1D::nonpositive(), RaySet1D::nonpositive()};
  Sl2Hypersurface hb = io::decode_sl2_hypersurface(io::encode(h));
  EXPECT_EQ(hb.combined, h.combined);
  EXPECT_EQ(hb.chart_b, h.chart_b);
  SeriesMatrix m = testing_support::M({{S({{0, 1}, {1, 1}}), S({{1, 1}})}, {S({{1, 1}}), PuiseuxSeries()}});
  EXPECT_EQ(io::decode_matrix(io::encode(m)), m);
}

TEST(Cli, SnfIdentity) {
  CliResult r = run_cli({"snf", "--matrix", data("id2.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["factors"], Json::parse(R"(["0","0"])"));
  EXPECT_EQ(io::encode(io::decode_snf(j)), j);
}

TEST(Cli, SnfMethodsAgree) {
  CliResult a = run_cli({"snf", "--matrix", data("fig1.json"), "--method", "minors"});
  CliResult b = run_cli({"snf", "--matrix", data("fig1.json"), "--method", "elimination"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["factors"], Json::parse(R"(["2","0"])"));
}

TEST(Cli, SphTropSl2) {
  CliResult r = run_cli({"sph-trop", "--example", "sl2", "--input", data("f_xminusy.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["combined"], "Q");
  EXPECT_EQ(io::decode_sl2_hypersurface(j).combined, RaySet1D::line());
  CliResult s = run_cli({"sph-trop", "--example", "sl2", "--input", data("f_xplusyminus1.json")});
  EXPECT_EQ(Json::parse(s.out)["combined"], "Q<=0");
}

TEST(Cli, SphTropGl2RoundTrip) {
  CliResult r = run_cli({"sph-trop", "--example", "gl2", "--input", data("h_dminus1.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(io::encode(io::decode_cone2set(j)), j);
  CliResult bad = run_cli({"sph-trop", "--example", "gl2", "--input", data("line_xy1.json")});
  EXPECT_EQ(bad.code, cli::kInputError);
}

TEST(Cli, SvdLimitTable) {
  CliResult r = run_cli({"svd-limit", "--matrix", data("fig1.json"), "--ts", "1e-1,1e-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  LimitReport rep = io::decode_limit_report(j);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_LE(rep.rows.back().deviation, 0.05);
  EXPECT_EQ(io::encode(rep), j);
  CliResult strict = run_cli({"svd-limit", "--matrix", data("fig1.json"), "--ts", "1e-1", "--tol", "1e-6"});
  EXPECT_EQ(strict.code, cli::kCheckFailed);
}

TEST(Cli, GfanRoundTrip) {
  CliResult r = run_cli({"gfan", "--ideal", data("homog_cubic.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  GroebnerFan fan = io::decode_fan(j);
  EXPECT_EQ(io::encode(fan, j["vars"].get<std::vector<std::string>>()), j);
}

TEST(Cli, TropAndMembers) {
  CliResult r = run_cli({"trop", "--ideal", data("line_xy1.json"), "--grid", data("grid_quarter.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  TropicalSet t = io::decode_tropical_set(j["hypersurfaces"][0]);
  EXPECT_EQ(io::encode(t), j["hypersurfaces"][0]);
  for (const auto& w : j["members"]) EXPECT_TRUE(t.contains(io::decode_rational_vector(w)));
  EXPECT_EQ(j["members"].size(), 37u);
}

TEST(Cli, TropPointAndSumihiro) {
  CliResult r = run_cli({"trop-point", "--model", "sl2", "--point", data("sl2_point.json"), "--function", data("sl2_y.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"], Json::parse(R"(["2"])"));
  SumihiroEstimate e = io::decode_sumihiro(j["sumihiro"]);
  EXPECT_EQ(*e.value, Rational(2));
  EXPECT_EQ(io::encode(e), j["sumihiro"]);
}

TEST(Cli, SphGbAndFamily) {
  CliResult gb = run_cli({"sph-gb", "--ideal", data("sl2_ideal.json")});
  ASSERT_EQ(gb.code, 0) << gb.err;
  Json j = Json::parse(gb.out);
  auto pos = io::decode_polynomial(j["fan"]["positive"][0], j["vars"].get<std::vector<std::string>>());
  EXPECT_EQ(pos.rational(), P("x", XY));
  CliResult fam = run_cli({"sph-trop", "--family", data("fig1_family.json")});
  ASSERT_EQ(fam.code, 0) << fam.err;
  Json f = Json::parse(fam.out);
  EXPECT_NE(std::find(f["points"].begin(), f["points"].end(), Json::parse(R"(["2","0"])")), f["points"].end());
}

TEST(Cli, CheckFundamentalAndAll) {
  CliResult r = run_cli({"check-fundamental", "--ideal", data("line_xy1.json"), "--curves", data("line_curves.json"), "--grid",
               data("grid_quarter.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(io::encode(io::decode_fundamental(j)), j);
  CliResult all = run_cli({"check-all"});
  EXPECT_EQ(all.code, 0) << all.err;
  EXPECT_TRUE(Json::parse(all.out)["passed"].get<bool>());
}

TEST(Cli, AmoebaWritesFiles) {
  auto dir = std::filesystem::temp_directory_path() / "spherotrop_cli_test";
  std::filesystem::create_directories(dir);
  std::string csv = (dir / "cloud.csv").string(), svg = (dir / "cloud.svg").string();
  CliResult r = run_cli({"amoeba", "--model", "gl2", "--param", data("fig1_family.json"), "--t", "0.01", "--out", csv + "," + svg});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::filesystem::file_size(csv) > 0);
  EXPECT_TRUE(std::filesystem::file_size(svg) > 0);
  CliResult mismatch = run_cli({"amoeba", "--model", "sl2", "--param", data("fig1_family.json")});
  EXPECT_EQ(mismatch.code, cli::kInputError);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodesAndDiagnostics) {
  CliResult missing = run_cli({"snf", "--matrix", data("does_not_exist.json")});
  EXPECT_EQ(missing.code, cli::kInputError);
  EXPECT_EQ(last_diagnostic(missing.err)["level"], "error");
  CliResult usage = run_cli({"snf", "--bogus"});
  EXPECT_EQ(usage.code, cli::kInputError);
  EXPECT_EQ(last_diagnostic(usage.err)["kind"], "UsageError");
  CliResult none = run_cli({});
  EXPECT_EQ(none.code, cli::kInputError);
  CliResult help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_FALSE(help.out.empty());
}

TEST(Cli, PrecisionLossExitCode) {
  auto dir = std::filesystem::temp_directory_path() / "spherotrop_cli_prec";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "m.json").string();
  std::ofstream(path) << R"({"matrix": [[{"terms": [[0, "1"]], "trunc": "1"}, "1"], ["1", "1"]]})";
  CliResult r = run_cli({"snf", "--matrix", path});
  EXPECT_EQ(r.code, cli::kPrecisionLoss);
  Json d = last_diagnostic(r.err);
  EXPECT_EQ(d["kind"], "PrecisionLoss");
  EXPECT_EQ(d["bound"], "1");
  std::filesystem::remove_all(dir);
}

TEST(Cli, ByteIdenticalAcrossRuns) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gfan", "--ideal", data("homog_cubic.json")},
           {"--seed", "17", "trop-point", "--model", "sl2", "--point", data("sl2_point.json"), "--function",
            data("sl2_y.json")},
           {"amoeba", "--param", data("torus_line_family.json"), "--t", "0.05"},
           {"check-all"}}) {
    CliResult a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
