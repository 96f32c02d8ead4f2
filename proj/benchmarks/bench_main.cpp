#include <benchmark/benchmark.h>

#include "expmde/densela.hpp"
#include "expmde/expm_de.hpp"
#include "expmde/matgen.hpp"
#include "expmde/reference.hpp"
#include "expmde/talbot.hpp"

using namespace expmde;

namespace {

const ComplexMatrix& a1(std::size_t n) {
  static std::size_t cached_n = 0;
  static ComplexMatrix m;
  if (cached_n != n) {
    m = test_matrix({1, n, 1});
    cached_n = n;
  }
  return m;
}

void BM_ExpmDe(benchmark::State& state) {
  const auto& a = a1(static_cast<std::size_t>(state.range(0)));
  QuadOptions opts;
  opts.mode = state.range(1) == 0 ? EvalMode::Direct : EvalMode::Split;
  long nodes = 0;
  for (auto _ : state) {
    auto r = expm_de(a, 0.1, 2.2e-16, kDefaultSigma, opts);
    nodes = r.nodes_evaluated;
    benchmark::DoNotOptimize(r.X.data().data());
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExpmDe)->ArgsProduct({{20, 50, 100}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Pade(benchmark::State& state) {
  const auto& a = a1(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expm_pade(a).data().data());
}
BENCHMARK(BM_Pade)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_LuFactor(benchmark::State& state) {
  const auto& a = a1(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lu_factor(a).lu.data().data());
}
BENCHMARK(BM_LuFactor)->Arg(50)->Arg(100)->Arg(200);

void BM_Eigenvalues(benchmark::State& state) {
  const auto& a = a1(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a).eigenvalues.data());
}
BENCHMARK(BM_Eigenvalues)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Talbot(benchmark::State& state) {
  const auto a = convection_diffusion({10, 0.01, {0.4, 0.4}});
  TalbotParams p;
  p.m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expm_talbot(a, p).data().data());
}
BENCHMARK(BM_Talbot)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
