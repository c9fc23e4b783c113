#include <benchmark/benchmark.h>

#include "thzsim/secrecy.hpp"

using namespace thzsim;

namespace {
secrecy::MapScenario demo_scenario() {
  secrecy::MapScenario ms;
  ms.distance_m = 1000.0;
  ms.g_los = 3.0e-9;
  ms.medium = {12.0, 5.0, 0.5, 0.5};
  ms.counts_per_gain = 1.0e9;
  ms.lambda_b = 10.0;
  ms.duty = 0.5;
  ms.slot_rate_hz = 1e10;
  return ms;
}
}  // namespace

static void BM_NlosGain(benchmark::State& state) {
  const auto ms = demo_scenario();
  secrecy::EveGeometry eve;
  eve.x = 300.0;
  eve.y = 25.0;
  eve.pointing_rad = -2.8;
  for (auto _ : state) {
    double g = secrecy::nlos_gain(eve, ms.medium, ms.distance_m, secrecy::NlosMode::as_printed);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_NlosGain);

static void BM_PointingOptimization(benchmark::State& state) {
  const auto ms = demo_scenario();
  secrecy::EveGeometry eve;
  eve.x = 300.0;
  eve.y = 25.0;
  for (auto _ : state) {
    auto p = secrecy::optimize_pointing(eve, ms.medium, ms.distance_m, secrecy::NlosMode::as_printed);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PointingOptimization);

static void BM_SecrecyMapRow(benchmark::State& state) {
  const auto ms = demo_scenario();
  secrecy::MapGrid grid;
  grid.x_min = 0.0;
  grid.x_max = 1000.0;
  grid.nx = static_cast<int>(state.range(0));
  grid.y_min = 10.0;
  grid.y_max = 10.0;
  grid.ny = 1;
  for (auto _ : state) {
    auto res = secrecy::secrecy_map(ms, grid, 1);
    benchmark::DoNotOptimize(res);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SecrecyMapRow)->Arg(50)->Arg(200);
