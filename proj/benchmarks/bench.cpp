#include <benchmark/benchmark.h>

#include "bqec/analysis.hpp"
#include "bqec/family.hpp"
#include "bqec/quad.hpp"
#include "bqec/tables.hpp"

namespace {

using bqec::CurvePoint;
using bqec::Rational;

void BM_CountPoints(benchmark::State& state) {
  const bqec::Curve c = bqec::family_curve(Rational::parse("21/5")).curve;
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bqec::count_points_mod_p(c, p));
}
BENCHMARK(BM_CountPoints)->Arg(523)->Arg(1979)->Arg(10007);

void BM_ScalarMul(benchmark::State& state) {
  const bqec::Curve c = bqec::family_curve(Rational(10)).curve;
  const CurvePoint g(Rational(-32), Rational(-864));
  for (auto _ : state) benchmark::DoNotOptimize(bqec::scalar_mul(c, state.range(0), g));
}
BENCHMARK(BM_ScalarMul)->Arg(8)->Arg(32)->Arg(128);

void BM_CanonicalHeight(benchmark::State& state) {
  const bqec::Curve c = bqec::Curve::ab(10334, 9150625);
  const CurvePoint p(Rational(625), Rational(100000));
  for (auto _ : state) benchmark::DoNotOptimize(bqec::canonical_height(c, p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CanonicalHeight)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SearchQuads(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bqec::search_quads(state.range(0)));
}
BENCHMARK(BM_SearchQuads)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  const auto th = bqec::tables::default_thresholds(1);
  const std::vector<Rational> ks{Rational::parse("257/134"), Rational::parse("311/129")};
  for (auto _ : state) benchmark::DoNotOptimize(bqec::sieve(1, ks, th));
}
BENCHMARK(BM_Sieve)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
