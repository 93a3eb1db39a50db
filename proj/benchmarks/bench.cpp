#include <benchmark/benchmark.h>

#include "moebius/algebra.hpp"
#include "moebius/band.hpp"
#include "moebius/certificates.hpp"
#include "moebius/example.hpp"

using namespace moebius;

static void BM_SturmDegree8(benchmark::State& state) {
  auto p = cert::printed_P2_on_Z();
  for (int k = 0; k < 3; ++k) p *= algebra::parse_poly("3 b^2 - 2 b + 7");
  for (auto _ : state) {
    benchmark::DoNotOptimize(algebra::sturm_count(p, algebra::Scalar(0), algebra::Scalar(algebra::Rational(1, 2))));
  }
}
BENCHMARK(BM_SturmDegree8);

static void BM_Certificate(benchmark::State& state) {
  const auto name = cert::certificate_names()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(cert::run_certificate(name));
}
BENCHMARK(BM_Certificate)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_SolveDe(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(example::solve_de(example::default_a(), example::default_b(), example::default_c()));
  }
}
BENCHMARK(BM_SolveDe)->Unit(benchmark::kMillisecond);

static void BM_FindTPatterns(benchmark::State& state) {
  auto band = example::build_default_sim().band;
  for (auto _ : state) benchmark::DoNotOptimize(band::find_t_patterns(band));
}
BENCHMARK(BM_FindTPatterns)->Unit(benchmark::kMillisecond);

static void BM_BuildSim(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(example::build_default_sim());
}
BENCHMARK(BM_BuildSim)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
