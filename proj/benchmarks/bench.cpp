#include <benchmark/benchmark.h>

#include "braidnorm/brm_pipeline.hpp"
#include "braidnorm/commands.hpp"
#include "braidnorm/cxmat.hpp"
#include "braidnorm/l1_extrema.hpp"
#include "braidnorm/wigner.hpp"

namespace {

using namespace braidnorm;

void BM_LittleD(benchmark::State& state) {
  const int tj = static_cast<int>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(little_d(tj, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_LittleD)->Arg(1)->Arg(3)->Arg(8)->Arg(20);

void BM_L1Profile(benchmark::State& state) {
  const int tj = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(l1_profile(tj, tj));
}
BENCHMARK(BM_L1Profile)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Expm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  CMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = cplx(0.1 * (i + 1), 0.05 * j) + (i == j ? 1.0 : 0.0);
  const CMatrix a = kI * (h + dagger(h));
  for (auto _ : state) benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(4)->Arg(16);

void BM_CanonicalBrm(benchmark::State& state) {
  const int tj = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_brm(tj, BrmTag::TypeII));
}
BENCHMARK(BM_CanonicalBrm)->DenseRange(1, 3);

void BM_Verify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cmd_verify(std::nullopt));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
