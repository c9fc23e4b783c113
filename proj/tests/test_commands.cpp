#include <string>

#include "doctest.h"
#include "thzsim/commands.hpp"
#include "thzsim/errors.hpp"

using namespace thzsim;
namespace sc = thzsim::scenario;

namespace {
sc::Scenario scenario_file(const char* name) {
  return sc::load_scenario(std::string(THZSIM_SCENARIO_DIR "/") + name);
}
}  // namespace

TEST_CASE("gas spectrum: dry air yields an all-zero column") {
  sc::Scenario s = scenario_file("gas_spectrum_rh30.json");
  s.environment.relative_humidity = 0.0;
  const auto t = commands::gas_spectrum(s, 100.0, 1200.0, 45);
  REQUIRE(t.rows.size() == 45);
  for (const auto& row : t.rows) CHECK(row[1] == 0.0);
}

TEST_CASE("gas spectrum: three humidity levels nest pointwise") {
  const auto t30 = commands::gas_spectrum(scenario_file("gas_spectrum_rh30.json"), 100.0, 1200.0, 56);
  const auto t60 = commands::gas_spectrum(scenario_file("gas_spectrum_rh60.json"), 100.0, 1200.0, 56);
  const auto t90 = commands::gas_spectrum(scenario_file("gas_spectrum_rh90.json"), 100.0, 1200.0, 56);
  for (size_t i = 0; i < t30.rows.size(); ++i) {
    CHECK(t30.rows[i][1] < t60.rows[i][1]);
    CHECK(t60.rows[i][1] < t90.rows[i][1]);
  }
}

TEST_CASE("gas spectrum is deterministic") {
  const auto a = commands::gas_spectrum(scenario_file("gas_spectrum_rh60.json"), 100.0, 1200.0, 31);
  const auto b = commands::gas_spectrum(scenario_file("gas_spectrum_rh60.json"), 100.0, 1200.0, 31);
  CHECK(a.rows == b.rows);
  CHECK(a.metadata == b.metadata);
}

TEST_CASE("gas spectrum argument validation") {
  const auto s = scenario_file("gas_spectrum_rh30.json");
  CHECK_THROWS_AS(commands::gas_spectrum(s, 500.0, 100.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(commands::gas_spectrum(s, 100.0, 500.0, 1), std::invalid_argument);
}

TEST_CASE("weather attenuation table composes hydrometeor and gas parts") {
  // gas disabled: the zero-rate row is all-zero
  const auto dry = commands::weather_attenuation(scenario_file("rain_flatness_12mmhr.json"),
                                                 {0.0, 5.0, 12.0});
  CHECK(dry.rows[0][1] == 0.0);
  CHECK(dry.rows[0][2] == 0.0);
  CHECK(dry.rows[0][3] == 0.0);
  CHECK(dry.rows[2][1] > dry.rows[1][1]);
  for (const auto& row : dry.rows)
    CHECK(row[1] == doctest::Approx(row[2] + row[3]).epsilon(1e-9));

  // gas enabled: the zero-rate row carries the gas floor in the absorption part
  const auto wet = commands::weather_attenuation(scenario_file("rain_anchor_625ghz.json"), {0.0});
  CHECK(wet.rows[0][1] > 100.0);
  CHECK(wet.rows[0][1] == doctest::Approx(wet.rows[0][2]).epsilon(1e-12));
}

TEST_CASE("weather attenuation rejects clear scenarios and bad rates") {
  CHECK_THROWS_AS(commands::weather_attenuation(scenario_file("gas_spectrum_rh30.json"), {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(commands::weather_attenuation(scenario_file("rain_anchor_625ghz.json"), {-1.0}),
                  std::invalid_argument);
}

TEST_CASE("ber sweep: ask always at or below 16-qam, distance sweep degrades") {
  const auto snr = commands::ber(scenario_file("ber_snow_140ghz.json"), commands::BerSweep::snr,
                                 0.0, 18.0, 19);
  for (const auto& row : snr.rows) {
    CHECK(row[2] <= row[3] + 1e-15);
    CHECK(row[2] <= 0.5);
  }

  const auto dist = commands::ber(scenario_file("ber_snow_140ghz.json"),
                                  commands::BerSweep::distance, 200.0, 2000.0, 10);
  for (size_t i = 1; i < dist.rows.size(); ++i) CHECK(dist.rows[i][2] >= dist.rows[i - 1][2]);
}

TEST_CASE("ber at matched settings favors the lower carrier in snow") {
  const auto f140 =
      commands::ber(scenario_file("ber_snow_140ghz.json"), commands::BerSweep::rate, 0.5, 5.0, 10);
  const auto f220 =
      commands::ber(scenario_file("ber_snow_220ghz.json"), commands::BerSweep::rate, 0.5, 5.0, 10);
  for (size_t i = 0; i < f140.rows.size(); ++i) {
    CHECK(f140.rows[i][2] <= f220.rows[i][2]);
    CHECK(f140.rows[i][3] <= f220.rows[i][3]);
  }
}

TEST_CASE("secrecy map summary and provenance") {
  sc::Scenario s = scenario_file("secrecy_rain_140ghz.json");
  s.secrecy.grid.nx = 40;
  s.secrecy.grid.ny = 16;
  const auto out = commands::secrecy_map(s, 2);
  CHECK(out.map.cells.size() == 640);
  CHECK(out.map.msc_gbps > 0.0);
  CHECK(out.map.error_cells == 0);
  CHECK(out.table.rows.size() == 640);

  bool has_g = false, has_f = false, has_version = false;
  for (const auto& [k, v] : out.table.metadata) {
    if (k == "phase_g") has_g = true;
    if (k == "phase_f") has_f = true;
    if (k == "thzsim_version") has_version = true;
  }
  CHECK(has_g);
  CHECK(has_f);
  CHECK(has_version);
}

TEST_CASE("secrecy map requires a spectrum-resolved weather model") {
  sc::Scenario s = scenario_file("secrecy_rain_140ghz.json");
  s.rain.model = sc::RainModel::itu;
  CHECK_THROWS_AS(commands::secrecy_map(s, 1), std::invalid_argument);
}

TEST_CASE("outage table is monotone and the monte-carlo column tracks the closed form") {
  sc::Scenario s = scenario_file("outage_340ghz.json");
  commands::MonteCarloOptions mc;
  mc.seed = 7;
  mc.samples = 20000;
  const auto t = commands::outage(s, {0.0, 1.0, 2.0, 5.0, 10.0, 20.0}, mc);
  REQUIRE(t.columns.size() == 3);
  double prev = -1.0;
  for (const auto& row : t.rows) {
    CHECK(row[1] >= prev - 1e-12);
    prev = row[1];
    CHECK(std::abs(row[1] - row[2]) <= 0.02 + 3.0 * std::sqrt(0.25 / 20000.0));
  }
  CHECK(t.rows[0][1] == 0.0);  // zero target rate never suffers an outage
}

TEST_CASE("outage requires a turbulence block") {
  CHECK_THROWS_AS(commands::outage(scenario_file("rain_anchor_625ghz.json"), {1.0}, {}),
                  std::invalid_argument);
}

TEST_CASE("stronger turbulence raises the outage probability at a fixed rate") {
  sc::Scenario s = scenario_file("outage_340ghz.json");
  s.turbulence.cn2 = 1e-12;
  const auto weak = commands::outage(s, {5.0, 10.0}, {});
  s.turbulence.cn2 = 1e-11;
  const auto strong = commands::outage(s, {5.0, 10.0}, {});
  for (size_t i = 0; i < weak.rows.size(); ++i)
    CHECK(strong.rows[i][1] >= weak.rows[i][1]);
  CHECK(strong.rows[0][1] > weak.rows[0][1]);
}
