#include <benchmark/benchmark.h>

#include <vector>

#include "thzsim/atmosphere.hpp"

using namespace thzsim;

static void BM_GasAttenuationPoint(benchmark::State& state) {
  const atmosphere::Environment env{288.15, 1013.0, 0.6};
  const auto& cat = atmosphere::GasLineCatalog::builtin();
  for (auto _ : state) {
    double a = atmosphere::specific_gas_attenuation_db_km(env, 300.0, cat);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_GasAttenuationPoint);

static void BM_GasSpectrum(benchmark::State& state) {
  const atmosphere::Environment env{288.15, 1013.0, 0.6};
  const auto& cat = atmosphere::GasLineCatalog::builtin();
  std::vector<double> grid;
  for (int i = 0; i < state.range(0); ++i)
    grid.push_back(100.0 + 1100.0 * i / (state.range(0) - 1));
  for (auto _ : state) {
    auto spec = atmosphere::attenuation_spectrum_db_km(env, grid, cat);
    benchmark::DoNotOptimize(spec);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GasSpectrum)->Arg(128)->Arg(1024);
