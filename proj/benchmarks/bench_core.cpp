#include <benchmark/benchmark.h>

#include "tbtinv/extraction.hpp"
#include "tbtinv/linalg.hpp"
#include "tbtinv/reconstruction.hpp"
#include "tbtinv/symbol.hpp"
#include "tbtinv/theta.hpp"

using namespace tbtinv;

static void bm_assemble(benchmark::State& state) {
  const int d = int(state.range(0));
  const TbtSymbol sym = random_symbol(d, d, 1, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(sym));
}
BENCHMARK(bm_assemble)->Arg(2)->Arg(3)->Arg(4);

static void bm_extract(benchmark::State& state) {
  const int d = int(state.range(0));
  const TbtSymbol sym = random_symbol(d, d, 1, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(extract_g(sym));
}
BENCHMARK(bm_extract)->Arg(2)->Arg(3)->Arg(4);

static void bm_pfaffian(benchmark::State& state) {
  const int order = int(state.range(0));
  const TbtSymbol sym = random_symbol(order / 4, order / 4, 3, 4.0);
  const GPair gp = extract_g(sym).pair;
  const CMat s = skew_g(gp, Complex(0.3, 0.1), Complex(-0.2, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::pfaffian(s));
}
BENCHMARK(bm_pfaffian)->Arg(8)->Arg(16);

static void bm_theta(benchmark::State& state) {
  const int d = int(state.range(0));
  const GPair gp = extract_g(random_symbol(d, d, 5, 4.0)).pair;
  for (auto _ : state) benchmark::DoNotOptimize(theta_poly(gp));
}
BENCHMARK(bm_theta)->Arg(2)->Arg(3)->Arg(4);

static void bm_recover(benchmark::State& state) {
  const int d = int(state.range(0));
  const GPair gp = extract_g(random_symbol(d, d, 7, 4.0)).pair;
  const ThetaResult tr = theta_poly(gp);
  for (auto _ : state) benchmark::DoNotOptimize(recover_r(gp, tr.theta));
}
BENCHMARK(bm_recover)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
