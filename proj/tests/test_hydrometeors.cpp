#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "thzsim/dielectrics.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/hydrometeors.hpp"

using namespace thzsim;
using hydro::DropSizeDistribution;
using hydro::SnowVariant;

TEST_CASE("marshall-palmer parameters and density") {
  const auto dsd = hydro::marshall_palmer(12.0);
  const auto& exp12 = std::get<hydro::Exponential>(dsd);
  CHECK(exp12.n0 == 8000.0);
  CHECK(exp12.lambda == doctest::Approx(4.1 * std::pow(12.0, -0.21)).epsilon(1e-14));
  CHECK(exp12.lambda == doctest::Approx(2.433).epsilon(1e-3));
  CHECK(hydro::dsd_density(dsd, 1.0) == doctest::Approx(8000.0 * std::exp(-exp12.lambda)));
  CHECK(hydro::dsd_density(dsd, 1.0) == doctest::Approx(703.0).epsilon(2e-3));

  // lambda strictly decreasing in rate
  double prev = 1e9;
  for (double r : {1.0, 5.0, 20.0, 100.0, 450.0}) {
    const double l = std::get<hydro::Exponential>(hydro::marshall_palmer(r)).lambda;
    CHECK(l < prev);
    prev = l;
  }
  CHECK_THROWS_AS(hydro::marshall_palmer(0.0), std::domain_error);
}

TEST_CASE("snow distribution parameters per variant") {
  const auto gm = std::get<hydro::SnowExponential>(
      hydro::snow_distribution(SnowVariant::gunn_marshall, 10.0));
  CHECK(gm.n0 == doctest::Approx(7.6e3 * std::pow(10.0, -0.87)).epsilon(1e-14));
  CHECK(gm.n0 == doctest::Approx(1025.2).epsilon(2e-2));
  CHECK(gm.a == doctest::Approx(5.1 * std::pow(10.0, -0.48)).epsilon(1e-14));
  CHECK(gm.a == doctest::Approx(1.69).epsilon(1e-2));
  CHECK(!gm.needs_size_conversion);

  for (double r : {0.5, 3.0, 21.0}) {
    const auto mp =
        std::get<hydro::SnowExponential>(hydro::snow_distribution(SnowVariant::marshall_palmer, r));
    CHECK(mp.n0 == 16000.0);  // rate-independent
  }

  const auto scott = std::get<hydro::SnowExponential>(hydro::snow_distribution(SnowVariant::scott, 5.0));
  CHECK(scott.needs_size_conversion);
  CHECK(scott.n0 == 100.0e3);

  const auto ss = std::get<hydro::SnowExponential>(
      hydro::snow_distribution(SnowVariant::sekhon_srivastava, 5.0));
  CHECK(ss.n0 == doctest::Approx(5.0e3 * std::pow(5.0, -0.94)));

  // all variants decrease with size
  for (auto v : {SnowVariant::marshall_palmer, SnowVariant::scott, SnowVariant::gunn_marshall,
                 SnowVariant::sekhon_srivastava}) {
    const auto d = hydro::snow_distribution(v, 8.0);
    CHECK(hydro::dsd_density(d, 0.5) > hydro::dsd_density(d, 1.5));
  }
  CHECK_THROWS_AS(hydro::snow_variant_from_name("nope"), std::invalid_argument);
}

TEST_CASE("dsd density closed forms") {
  // exponential tends to n0 at vanishing size
  const auto mp = hydro::marshall_palmer(10.0);
  CHECK(hydro::dsd_density(mp, 1e-9) == doctest::Approx(8000.0).epsilon(1e-6));

  // log-normal peaks near d_bar for small spread
  const DropSizeDistribution ln = hydro::LogNormal{1000.0, 1.05, 1.96};
  const double peak = hydro::dsd_density(ln, 1.96);
  CHECK(peak > hydro::dsd_density(ln, 1.7));
  CHECK(peak > hydro::dsd_density(ln, 2.3));

  // gamma with mu = 0 degenerates to the exponential
  const DropSizeDistribution g0 = hydro::Gamma{8000.0, 0.0, 2.4};
  const DropSizeDistribution e0 = hydro::Exponential{8000.0, 2.4};
  for (double d : {0.1, 0.7, 2.0, 5.0})
    CHECK(hydro::dsd_density(g0, d) == doctest::Approx(hydro::dsd_density(e0, d)).epsilon(1e-14));

  CHECK_THROWS_AS(hydro::dsd_density(mp, 0.0), std::domain_error);
}

TEST_CASE("normalized gamma density evaluates the printed closed form") {
  const hydro::NormalizedGamma ng{8000.0, 2.0, 1.5};
  const double d = 1.0;
  const double m4 = 6.0;
  const double want = 8000.0 * (6.0 / 256.0) * std::pow(m4, m4) / std::tgamma(m4) *
                      std::pow(d / 1.5, 2.0) * std::exp(-m4 * d / 1.5);
  CHECK(hydro::dsd_density(DropSizeDistribution{ng}, d) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("presets") {
  const auto ty = std::get<hydro::Exponential>(hydro::typhoon_preset(0));
  CHECK(ty.n0 == 1850.0);
  CHECK_THROWS_AS(hydro::typhoon_preset(4), std::invalid_argument);
  const auto hail = std::get<hydro::Gamma>(hydro::thawing_preset("hail", 4.0));
  CHECK(hail.n0 == doctest::Approx(64500.0 * std::pow(4.0, -0.5)));
  CHECK_THROWS_AS(hydro::thawing_preset("slush", 4.0), std::invalid_argument);
}

TEST_CASE("melted/actual size conversion round trip") {
  const double r = 0.8;
  const double rho = 0.31;
  const double actual = hydro::melted_to_actual_radius_mm(r, rho);
  CHECK(actual > r);
  CHECK(hydro::actual_to_melted_radius_mm(actual, rho) == doctest::Approx(r).epsilon(1e-14));
}

TEST_CASE("attenuation components add up and vanish for empty spectra") {
  const auto eps = dielectrics::permittivity_water(300.0, 298.15);
  const DropSizeDistribution empty = hydro::Exponential{0.0, 2.0};
  const auto zero = hydro::specific_attenuation_mie(empty, eps, 300.0, 8.0);
  CHECK(zero.total == 0.0);
  CHECK(zero.absorption == 0.0);
  CHECK(zero.scattering == 0.0);

  for (double f : {140.0, 300.0, 625.0}) {
    const auto a = hydro::specific_attenuation_mie(hydro::marshall_palmer(25.0),
                                                   dielectrics::permittivity_water(f, 298.15), f, 8.0);
    CHECK(a.total == doctest::Approx(a.absorption + a.scattering).epsilon(1e-9));
    CHECK(a.total > 0.0);
  }
}

TEST_CASE("mie rain attenuation increases with rain rate") {
  const auto eps = dielectrics::permittivity_water(140.0, 298.15);
  double prev = 0.0;
  for (double r : {1.0, 3.0, 10.0, 30.0, 100.0, 250.0, 450.0}) {
    const double a =
        hydro::specific_attenuation_mie(hydro::marshall_palmer(r), eps, 140.0, 8.0).total;
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("quadrature refinement changes the result less than the tolerance") {
  const auto eps = dielectrics::permittivity_water(300.0, 298.15);
  numerics::QuadratureConfig coarse;  // defaults: rel 1e-4
  numerics::QuadratureConfig fine;
  fine.rel_tol = 1e-7;
  const auto a = hydro::specific_attenuation_mie(hydro::marshall_palmer(20.0), eps, 300.0, 8.0, coarse);
  const auto b = hydro::specific_attenuation_mie(hydro::marshall_palmer(20.0), eps, 300.0, 8.0, fine);
  CHECK(std::abs(a.total - b.total) <= 2e-4 * b.total);
}

TEST_CASE("wet snow attenuates more than dry snow at 300 GHz") {
  const auto dsd = hydro::snow_distribution(SnowVariant::gunn_marshall, 10.0);
  const auto dry = hydro::specific_attenuation_mie(
      dsd, dielectrics::permittivity_dry_snow(0.1, 300.0, 272.15), 300.0, 20.0, {}, {0.1});
  const auto wet = hydro::specific_attenuation_mie(
      dsd, dielectrics::permittivity_wet_snow(300.0, 273.15, 0.52, 0.25), 300.0, 20.0, {}, {0.52});
  CHECK(wet.total > dry.total);
}

TEST_CASE("dry snow at 140 GHz is scattering dominated") {
  const auto dsd = hydro::snow_distribution(SnowVariant::gunn_marshall, 10.0);
  const auto dry = hydro::specific_attenuation_mie(
      dsd, dielectrics::permittivity_dry_snow(0.1, 140.0, 272.15), 140.0, 20.0, {}, {0.1});
  CHECK(dry.scattering > dry.absorption);
}

TEST_CASE("rain power-law model") {
  CHECK(hydro::rain_attenuation_itu_db_km(140.0, 0.0) == 0.0);
  double prev = 0.0;
  for (double r : {1.0, 10.0, 50.0, 200.0}) {
    const double a = hydro::rain_attenuation_itu_db_km(140.0, r);
    CHECK(a > prev);
    prev = a;
  }
  CHECK_THROWS_AS(hydro::rain_attenuation_itu_db_km(0.5, 10.0), std::domain_error);
  CHECK_THROWS_AS(hydro::rain_attenuation_itu_db_km(1200.0, 10.0), std::domain_error);

  // same order of magnitude as the spectrum-integrated model
  const double itu = hydro::rain_attenuation_itu_db_km(140.0, 50.0);
  const double mie = hydro::specific_attenuation_mie(hydro::marshall_palmer(50.0),
                                                     dielectrics::permittivity_water(140.0, 298.15),
                                                     140.0, 8.0)
                         .total;
  CHECK(mie / itu > 0.5);
  CHECK(mie / itu < 2.0);
}

TEST_CASE("gunn-east closed form") {
  CHECK(hydro::snow_attenuation_gunn_east_db_km(100.0, 0.0) == 0.0);
  CHECK(hydro::snow_attenuation_gunn_east_db_km(100.0, 10.0) == doctest::Approx(17.23).epsilon(1e-3));
  double prev = 0.0;
  for (double f : {50.0, 100.0, 200.0, 400.0}) {
    const double a = hydro::snow_attenuation_gunn_east_db_km(f, 10.0);
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("generic snow power law") {
  CHECK(hydro::snow_attenuation_power_law_db_km(2.0, 0.5, 0.0) == 0.0);
  CHECK(hydro::snow_attenuation_power_law_db_km(2.0, 0.5, 4.0) == doctest::Approx(4.0));
  CHECK(hydro::snow_attenuation_power_law_db_km(3.0, 1.0, 7.0) == doctest::Approx(21.0));
  CHECK_THROWS_AS(hydro::snow_attenuation_power_law_db_km(-1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("shipped rain coefficient table matches the built-in table") {
  const auto file = hydro::ItuRainTable::load(THZSIM_SOURCE_DATA_DIR "/itu_rain_v1.txt");
  const auto& builtin = hydro::ItuRainTable::builtin();
  CHECK(file.version() == builtin.version());
  REQUIRE(file.rows().size() == builtin.rows().size());
  for (size_t i = 0; i < file.rows().size(); ++i) {
    CHECK(file.rows()[i].f_ghz == builtin.rows()[i].f_ghz);
    CHECK(file.rows()[i].k == builtin.rows()[i].k);
    CHECK(file.rows()[i].a == builtin.rows()[i].a);
  }
}

TEST_CASE("frozen regression: heavy-rain extinction at 625 GHz") {
  // self-consistency pin for the spectrum-integrated model; guards the
  // dielectric table and quadrature against accidental drift
  const auto a = hydro::specific_attenuation_mie(hydro::marshall_palmer(100.0),
                                                 dielectrics::permittivity_water(625.0, 298.15),
                                                 625.0, 8.0);
  CHECK(a.total == doctest::Approx(34.79).epsilon(0.02));
  CHECK(a.scattering > a.absorption);  // large lossy drops scatter more than they absorb here
}
