#include <benchmark/benchmark.h>

#include "amalgam/decomposition.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/trace.hpp"
#include "amalgam/verify/corpus.hpp"

using namespace amalgam;

namespace {

SampledField member(int n, int N, int K) {
  return verify::generate_corpus(verify::CorpusSpec{n, 4, K, 2, 3})[1].sample(GridSpec::uniform(n, 4, N));
}

}  // namespace

static void BM_Transform(benchmark::State& state) {
  const SampledField f = member(2, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(f.size()));
}
BENCHMARK(BM_Transform)->Arg(32)->Arg(64)->Arg(128);

static void BM_Decompose(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), K = static_cast<int>(state.range(1));
  const SampledField f = member(2, N, K);
  const WindowFamily family(2, K);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f, family));
}
BENCHMARK(BM_Decompose)->Args({32, 2})->Args({64, 6})->Args({128, 6})->Unit(benchmark::kMillisecond);

static void BM_Decompose3(benchmark::State& state) {
  const SampledField f = member(3, 32, 2);
  const WindowFamily family(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f, family));
}
BENCHMARK(BM_Decompose3)->Unit(benchmark::kMillisecond);

static void BM_WienerNorm(benchmark::State& state) {
  const BandSet bands = decompose(member(2, 64, 6), WindowFamily(2, 6));
  const double q = static_cast<double>(state.range(0)) / 2.0;
  const NormSpec spec = NormSpec::isotropic(2.0, q, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(wiener_norm(bands, spec));
}
BENCHMARK(BM_WienerNorm)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_AnisoNorm(benchmark::State& state) {
  const BandSet bands = decompose(member(2, 64, 6), WindowFamily(2, 6));
  const NormSpec spec = NormSpec::aniso_last(2.0, 2.0, 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(aniso_norm(bands, spec));
}
BENCHMARK(BM_AnisoNorm)->Unit(benchmark::kMillisecond);

static void BM_MaximalOp(benchmark::State& state) {
  const BandSet bands = decompose(member(2, 32, 2), WindowFamily(2, 2));
  const SampledField& band = bands.band(bands.size() / 2);
  const ShiftSet shifts = state.range(0) ? ShiftSet::sample_grid : ShiftSet::integer_lattice;
  for (auto _ : state) benchmark::DoNotOptimize(maximal_op(band, 2.01, shifts));
}
BENCHMARK(BM_MaximalOp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Extend(benchmark::State& state) {
  const SampledField g = member(1, 64, 6);
  const GridSpec target({4, 16}, {64, 256});
  const ExtensionProfile profile;
  for (auto _ : state) benchmark::DoNotOptimize(extend(g, profile, target));
}
BENCHMARK(BM_Extend)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
