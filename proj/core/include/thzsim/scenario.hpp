#ifndef THZSIM_SCENARIO_HPP
#define THZSIM_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "thzsim/atmosphere.hpp"
#include "thzsim/dielectrics.hpp"
#include "thzsim/hydrometeors.hpp"
#include "thzsim/link.hpp"
#include "thzsim/numerics.hpp"
#include "thzsim/secrecy.hpp"

namespace thzsim::scenario {

enum class WeatherType { clear, rain, snow, turbulence };
enum class RainModel { mie, itu };
enum class SnowModel { mie, gunn_east, power_law };

struct RainBlock {
  RainModel model = RainModel::mie;
  double rate_mm_hr = 0.0;
  // Either a named family parameterized by the rate, or explicit parameters.
  std::string dsd = "marshall_palmer";
  std::optional<hydro::DropSizeDistribution> custom_dsd;
};

struct SnowBlock {
  SnowModel model = SnowModel::mie;
  hydro::SnowVariant variant = hydro::SnowVariant::gunn_marshall;
  double rate_mm_hr = 0.0;
  double wetness = 0.0;             // liquid volume fraction
  double density_g_cm3 = 0.1;       // bulk flake density
  double power_a = 0.0, power_b = 1.0;  // for the power-law model
};

struct TurbulenceBlock {
  double cn2 = 0.0;
  std::string distribution = "gamma_gamma";  // log_normal | gamma_gamma | k | neg_exp
  std::string wave = "plane";                // plane | spherical
};

struct SecrecyBlock {
  secrecy::MapGrid grid;
  double eve_fov_rad = 20.0 * 3.14159265358979323846 / 180.0;
  double eve_rx_area_m2 = 1e-4;
  double eve_efficiency_scale = 1.0;
  double eve_x = 200.0;  // fixed position, used by the outage command
  double eve_y = 10.0;
  double phase_g = 0.9;
  double phase_f = 0.5;
  double duty = 0.5;
  secrecy::MiVariant mi_variant = secrecy::MiVariant::corrected;
  secrecy::NlosMode nlos_mode = secrecy::NlosMode::as_printed;
};

struct Scenario {
  std::string name;
  atmosphere::Environment environment;
  double frequency_ghz = 140.0;
  link::LinkGeometry geometry;
  double tx_power_dbm = 10.0;
  link::DetectorModel detector;

  WeatherType weather = WeatherType::clear;
  RainBlock rain;
  SnowBlock snow;
  TurbulenceBlock turbulence;

  bool gas_enabled = true;
  std::string gas_catalog_path;    // empty = builtin
  std::string dielectrics_path;    // empty = builtin
  std::string itu_rain_path;       // empty = builtin

  SecrecyBlock secrecy;

  numerics::QuadratureConfig quadrature;
  double d_max_rain_mm = 8.0;
  double d_max_snow_mm = 20.0;  // melted-equivalent

  // provenance for output headers
  std::uint64_t source_hash = 0;
  std::string source_path;

  const atmosphere::GasLineCatalog& catalog() const;
  const dielectrics::DielectricTable& dielectrics() const;
  const hydro::ItuRainTable& itu_table() const;
};

// Parse and schema-validate a scenario document. Field errors carry the JSON
// path of the offending entry; throws config_error.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text, const std::string& origin = "<memory>");

// Medium coefficients assembled from the weather block at a given frequency
// and precipitation rate (rate ignored for clear/turbulence).
struct MediumSummary {
  double gas_db_km = 0.0;
  hydro::WeatherAttenuation weather;    // hydrometeor part only
  double scintillation_db_km = 0.0;     // turbulence path-averaged loss rate
  double k_ext_db_km = 0.0;             // gas + weather.total + scintillation
  double k_sca_db_km = 0.0;             // weather.scattering + scintillation
};

MediumSummary evaluate_medium(const Scenario& s, double f_ghz, double rate_mm_hr);
inline MediumSummary evaluate_medium(const Scenario& s) {
  double rate = 0.0;
  if (s.weather == WeatherType::rain) rate = s.rain.rate_mm_hr;
  if (s.weather == WeatherType::snow) rate = s.snow.rate_mm_hr;
  return evaluate_medium(s, s.frequency_ghz, rate);
}

// Counts-per-gain scale tau * eta * P / E_p, so lambda = scale * G.
double counts_per_gain(const Scenario& s);

}  // namespace thzsim::scenario

#endif
