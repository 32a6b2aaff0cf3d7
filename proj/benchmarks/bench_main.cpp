#include <benchmark/benchmark.h>

#include "gmanvol/gmanvol.hpp"
#include "support/random_graph.hpp"

using namespace gmanvol;

namespace {

GraphManifold sample(std::int64_t pieces, std::int64_t max_degree) {
  gmanvol::testing::Rng rng(static_cast<std::uint64_t>(pieces * 100 + max_degree));
  return gmanvol::testing::random_graph(rng, {pieces, pieces, 2, max_degree, 6});
}

void BM_AbsoluteEuler(benchmark::State& state) {
  const auto gm = sample(state.range(0), 6);
  for (auto _ : state) benchmark::DoNotOptimize(absolute_euler_number(gm));
}
BENCHMARK(BM_AbsoluteEuler)->Arg(8)->Arg(32)->Arg(128);

void BM_CharacteristicCover(benchmark::State& state) {
  const auto gm = sample(state.range(0), 6);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_cover(gm, 7));
}
BENCHMARK(BM_CharacteristicCover)->Arg(8)->Arg(32)->Arg(128);

void BM_GenusRaisingCover(benchmark::State& state) {
  const auto gm = sample(state.range(0), 6);
  const auto center = gm.pieces.front().id;
  for (auto _ : state) benchmark::DoNotOptimize(genus_raising_cover(gm, center, 7));
}
BENCHMARK(BM_GenusRaisingCover)->Arg(8)->Arg(32)->Arg(128);

void BM_VerifyCertificate(benchmark::State& state) {
  const auto gm = sample(state.range(0), 6);
  const auto cov = characteristic_cover(gm, 7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_covering_certificate(cov, gm));
}
BENCHMARK(BM_VerifyCertificate)->Arg(8)->Arg(32)->Arg(128);

void BM_VolumeBound(benchmark::State& state) {
  const auto gm = sample(state.range(0), 6);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(volume_lower_bound(gm));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_VolumeBound)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
