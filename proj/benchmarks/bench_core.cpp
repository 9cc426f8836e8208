#include <benchmark/benchmark.h>

#include "spherotrop/amoeba.hpp"
#include "spherotrop/groebner.hpp"
#include "spherotrop/grobner_fan.hpp"
#include "spherotrop/snf.hpp"
#include "spherotrop/svd.hpp"
#include "spherotrop/tropical.hpp"

#include <cmath>

using namespace spherotrop;

namespace {

QPolynomial poly(std::size_t n, std::initializer_list<std::pair<Exponent, long>> terms) {
  QPolynomial p(n);
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

PuiseuxSeries series(std::initializer_list<std::pair<long, long>> terms) {
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : terms) t[e] = Rational(c);
  return PuiseuxSeries::from_terms(1, t);
}

SeriesMatrix fig1() { return SeriesMatrix({{series({{0, 1}, {1, 1}}), series({{1, 1}})}, {series({{1, 1}}), PuiseuxSeries()}}); }

SeriesMatrix dense4() {
  std::vector<std::vector<PuiseuxSeries>> rows(4);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) rows[i].push_back(series({{(i * j) % 3 - 1, i + j + 1}, {(i + j) % 4, 1 - i}}));
  return SeriesMatrix(rows);
}

void BM_SeriesInverse(benchmark::State& state) {
  PuiseuxSeries f = series({{0, 1}, {1, -1}, {3, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(inverse(f, Rational(state.range(0))));
}
BENCHMARK(BM_SeriesInverse)->Arg(10)->Arg(40);

void BM_Buchberger(benchmark::State& state) {
  std::vector<QPolynomial> gens{poly(3, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}, {{0, 0, 0}, -1}}),
                                poly(3, {{{1, 1, 0}, 1}, {{0, 0, 1}, -1}}),
                                poly(3, {{{0, 2, 0}, 1}, {{1, 0, 0}, -1}, {{0, 0, 0}, 2}})};
  TermOrder ord = TermOrder::degree_descending(3);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_reduced(gens, ord));
}
BENCHMARK(BM_Buchberger);

void BM_GroebnerFanTwistedCubic(benchmark::State& state) {
  std::vector<QPolynomial> gens{poly(3, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}}), poly(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, -1}})};
  for (auto _ : state) benchmark::DoNotOptimize(groebner_fan_enumerate(gens));
}
BENCHMARK(BM_GroebnerFanTwistedCubic)->Unit(benchmark::kMillisecond);

void BM_TropMembership(benchmark::State& state) {
  std::vector<QPolynomial> gens{poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 1}})};
  WeightVector w{Rational(0), Rational(2)};
  for (auto _ : state) benchmark::DoNotOptimize(trop_membership(gens, w));
}
BENCHMARK(BM_TropMembership);

void BM_SnfMinors(benchmark::State& state) {
  SeriesMatrix a = dense4();
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors_minors(a));
}
BENCHMARK(BM_SnfMinors);

void BM_SnfElimination(benchmark::State& state) {
  SeriesMatrix a = dense4();
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors_elimination(a));
}
BENCHMARK(BM_SnfElimination);

void BM_SvdValues(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n * n; ++i) m.a[i] = {std::sin(1.0 + i), std::cos(3.0 * i)};
  for (auto _ : state) benchmark::DoNotOptimize(svd_values(m));
}
BENCHMARK(BM_SvdValues)->Arg(2)->Arg(4)->Arg(8);

void BM_LimitCheck(benchmark::State& state) {
  SeriesMatrix a = fig1();
  for (auto _ : state) benchmark::DoNotOptimize(snf_svd_limit_check(a, {1e-1, 1e-2, 1e-3, 1e-4}));
}
BENCHMARK(BM_LimitCheck);

}  // namespace

BENCHMARK_MAIN();
