// Throughput of the thresholding stage: serial reference loop against the
// OpenMP driver at several worker counts, plus the per-group HOSVD kernel.
#include <benchmark/benchmark.h>

#include <map>

#include "cdid/hosvd.hpp"
#include "cdid/pipelines.hpp"
#include "cdid/sim/noise.hpp"
#include "cdid/sim/rng.hpp"
#include "cdid/sim/scenes.hpp"

namespace {

const cdid::NoisyObservation& observation(std::size_t size) {
  static std::map<std::size_t, cdid::NoisyObservation> cache;
  auto it = cache.find(size);
  if (it == cache.end()) {
    const auto scene = cdid::build_scene("gauss", cdid::truncated_gauss_source(size),
                                         cdid::PhaseKind::Interferometric);
    it = cache.emplace(size, cdid::make_noisy(scene, {0.1, 7, 1})).first;
  }
  return it->second;
}

void BM_HtSerialReference(benchmark::State& state) {
  const auto& obs = observation(static_cast<std::size_t>(state.range(0)));
  cdid::FilterConfig cfg;
  cfg.sigma = obs.sigma;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdid::cdf_ht(obs.z, cfg, {cdid::Execution::SerialReference, {}}));
  }
}
BENCHMARK(BM_HtSerialReference)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_HtParallel(benchmark::State& state) {
  const auto& obs = observation(static_cast<std::size_t>(state.range(0)));
  cdid::FilterConfig cfg;
  cfg.sigma = obs.sigma;
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdid::cdf_ht(obs.z, cfg, {cdid::Execution::Parallel, {}}));
  }
  state.counters["threads"] = static_cast<double>(cdid::resolve_threads(cfg));
}
BENCHMARK(BM_HtParallel)
    ->ArgsProduct({{128, 256}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_HosvdGroup(benchmark::State& state) {
  cdid::Rng rng(3);
  std::vector<cdid::cplx> data(8 * 8 * static_cast<std::size_t>(state.range(0)));
  for (auto& v : data) v = {rng.normal(), rng.normal()};
  const cdid::CTensor t({8, 8, static_cast<std::size_t>(state.range(0))}, data);
  for (auto _ : state) benchmark::DoNotOptimize(cdid::hosvd(t));
}
BENCHMARK(BM_HosvdGroup)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
