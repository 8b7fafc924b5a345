#include <benchmark/benchmark.h>

#include <random>

#include "tw/cover.hpp"
#include "tw/geometry.hpp"
#include "tw/model_cover.hpp"
#include "tw/pipeline.hpp"
#include "tw/smith.hpp"

using namespace tw;

static void BM_Cokernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(cokernel(a));
}
BENCHMARK(BM_Cokernel)->Arg(4)->Arg(8)->Arg(16);

static void BM_Pullback(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BridgeSurfaceData locus = trivial_disks(n);
  for (int k = 0; k < n; ++k) locus = perturb(locus, {k % 3 + 1, k});
  const auto rho = standard_rho(n);
  for (auto _ : state) benchmark::DoNotOptimize(pullback_trisection(standard_b4(), locus, rho));
}
BENCHMARK(BM_Pullback)->Arg(1)->Arg(3)->Arg(6);

static void BM_CertifyLinear(benchmark::State& state) {
  const Scales sc;
  const PolyhedronQM q(sc.M);
  std::vector<GraphSurface> fam;
  for (int k = 1; k <= state.range(0); ++k) fam.push_back(linear_member(k, sc));
  for (auto _ : state) benchmark::DoNotOptimize(certify_bridge_position(fam, q, sc.R, Tolerances{}));
}
BENCHMARK(BM_CertifyLinear)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PolynomialCover(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(polynomial_cover_check(static_cast<int>(state.range(0)), 1.0));
}
BENCHMARK(BM_PolynomialCover)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SteinB4(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.n = {1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_stein_b4(cfg));
}
BENCHMARK(BM_SteinB4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
