#include <benchmark/benchmark.h>

#include "thzsim/dielectrics.hpp"
#include "thzsim/hydrometeors.hpp"
#include "thzsim/mie.hpp"

using namespace thzsim;

static void BM_MieEfficiencies(benchmark::State& state) {
  const auto eps = dielectrics::permittivity_water(300.0, 298.15);
  const auto m = dielectrics::refractive_index(eps);
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto q = mie::mie_efficiencies(m, x);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_MieEfficiencies)->Arg(1)->Arg(5)->Arg(20)->Arg(50)->Arg(100);

static void BM_RainAttenuationIntegral(benchmark::State& state) {
  const double f = static_cast<double>(state.range(0));
  const auto eps = dielectrics::permittivity_water(f, 298.15);
  const auto dsd = hydro::marshall_palmer(25.0);
  for (auto _ : state) {
    auto a = hydro::specific_attenuation_mie(dsd, eps, f, 8.0);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_RainAttenuationIntegral)->Arg(140)->Arg(300)->Arg(625);
