#include "thzsim/scenario.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/turbulence.hpp"

namespace thzsim::scenario {

using nlohmann::json;

namespace {

// Cache for data tables loaded from explicit paths.
template <typename T>
const T& cached_load(const std::string& path) {
  static std::map<std::string, std::unique_ptr<T>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(path);
  if (it == cache.end()) it = cache.emplace(path, std::make_unique<T>(T::load(path))).first;
  return *it->second;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw config_error("scenario: " + path + ": " + what);
}

double get_number(const json& j, const std::string& path, const char* key,
                  std::optional<double> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required number");
  }
  if (!j[key].is_number()) fail(path + "." + key, "expected a number");
  return j[key].get<double>();
}

std::string get_string(const json& j, const std::string& path, const char* key,
                       std::optional<std::string> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required string");
  }
  if (!j[key].is_string()) fail(path + "." + key, "expected a string");
  return j[key].get<std::string>();
}

bool get_bool(const json& j, const std::string& path, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) fail(path + "." + key, "expected a boolean");
  return j[key].get<bool>();
}

void require_range(double v, double lo, double hi, const std::string& path) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream os;
    os << "value " << v << " outside [" << lo << ", " << hi << "]";
    fail(path, os.str());
  }
}

}  // namespace

const atmosphere::GasLineCatalog& Scenario::catalog() const {
  if (gas_catalog_path.empty()) return atmosphere::GasLineCatalog::builtin();
  return cached_load<atmosphere::GasLineCatalog>(gas_catalog_path);
}

const dielectrics::DielectricTable& Scenario::dielectrics() const {
  if (dielectrics_path.empty()) return dielectrics::DielectricTable::builtin();
  return cached_load<dielectrics::DielectricTable>(dielectrics_path);
}

const hydro::ItuRainTable& Scenario::itu_table() const {
  if (itu_rain_path.empty()) return hydro::ItuRainTable::builtin();
  return cached_load<hydro::ItuRainTable>(itu_rain_path);
}

Scenario parse_scenario(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error("scenario: " + origin + ": " + e.what());
  }

  Scenario s;
  s.source_hash = numerics::fnv1a64(text);
  s.source_path = origin;

  const int schema = static_cast<int>(get_number(j, "$", "schema_version", 1.0));
  if (schema != 1) fail("$.schema_version", "unsupported schema version");
  s.name = get_string(j, "$", "name", std::string{});

  if (!j.contains("environment")) fail("$.environment", "missing required object");
  {
    const json& e = j["environment"];
    s.environment.temperature_k = get_number(e, "$.environment", "temperature_K");
    s.environment.pressure_hpa = get_number(e, "$.environment", "pressure_hPa", 1013.0);
    s.environment.relative_humidity = get_number(e, "$.environment", "relative_humidity");
    require_range(s.environment.relative_humidity, 0.0, 1.0, "$.environment.relative_humidity");
  }

  s.frequency_ghz = get_number(j, "$", "frequency_GHz");
  require_range(s.frequency_ghz, 1e-3, 10000.0, "$.frequency_GHz");

  {
    const json l = j.contains("link") ? j["link"] : json::object();
    s.geometry.distance_m = get_number(l, "$.link", "distance_m", 1000.0);
    s.tx_power_dbm = get_number(l, "$.link", "tx_power_dBm", 10.0);
    s.geometry.tx_gain_db = get_number(l, "$.link", "tx_gain_dB", 0.0);
    s.geometry.rx_gain_db = get_number(l, "$.link", "rx_gain_dB", 0.0);
    s.geometry.divergence_rad = get_number(l, "$.link", "divergence_rad", 0.02);
    s.geometry.rx_area_m2 = get_number(l, "$.link", "rx_area_m2", 1e-4);
    s.geometry.pattern_tx = get_number(l, "$.link", "pattern_tx", 1.0);
    s.geometry.pattern_rx = get_number(l, "$.link", "pattern_rx", 1.0);
    s.geometry.polarization_efficiency = get_number(l, "$.link", "polarization_efficiency", 1.0);
    s.detector.noise_floor_dbm = get_number(l, "$.link", "noise_floor_dBm", -60.0);
  }

  {
    const json d = j.contains("detector") ? j["detector"] : json::object();
    s.detector.efficiency = get_number(d, "$.detector", "efficiency", 1.0);
    s.detector.integration_time_s = get_number(d, "$.detector", "integration_time_s", 1e-10);
    s.detector.background_rate = get_number(d, "$.detector", "background_rate", 0.0);
  }

  if (!j.contains("weather")) fail("$.weather", "missing required object (exactly one block)");
  {
    const json& w = j["weather"];
    const std::string type = get_string(w, "$.weather", "type");
    if (type == "clear") {
      s.weather = WeatherType::clear;
    } else if (type == "rain") {
      s.weather = WeatherType::rain;
      const std::string model = get_string(w, "$.weather", "model", std::string("mie"));
      if (model == "mie")
        s.rain.model = RainModel::mie;
      else if (model == "itu")
        s.rain.model = RainModel::itu;
      else
        fail("$.weather.model", "expected mie|itu, got " + model);
      s.rain.rate_mm_hr = get_number(w, "$.weather", "rate_mm_hr");
      require_range(s.rain.rate_mm_hr, 0.0, 1e4, "$.weather.rate_mm_hr");
      s.rain.dsd = get_string(w, "$.weather", "dsd", std::string("marshall_palmer"));
      if (s.rain.dsd == "log_normal") {
        hydro::LogNormal ln;
        ln.n_t = get_number(w, "$.weather", "dsd_n_t");
        ln.sigma_g = get_number(w, "$.weather", "dsd_sigma_g");
        ln.d_bar = get_number(w, "$.weather", "dsd_d_bar");
        s.rain.custom_dsd = ln;
      } else if (s.rain.dsd != "marshall_palmer") {
        fail("$.weather.dsd", "expected marshall_palmer|log_normal, got " + s.rain.dsd);
      }
    } else if (type == "snow") {
      s.weather = WeatherType::snow;
      const std::string model = get_string(w, "$.weather", "model", std::string("mie"));
      if (model == "mie")
        s.snow.model = SnowModel::mie;
      else if (model == "gunn_east")
        s.snow.model = SnowModel::gunn_east;
      else if (model == "power_law")
        s.snow.model = SnowModel::power_law;
      else
        fail("$.weather.model", "expected mie|gunn_east|power_law, got " + model);
      s.snow.variant =
          hydro::snow_variant_from_name(get_string(w, "$.weather", "variant", std::string("gm")));
      s.snow.rate_mm_hr = get_number(w, "$.weather", "rate_mm_hr");
      require_range(s.snow.rate_mm_hr, 0.0, 1e4, "$.weather.rate_mm_hr");
      s.snow.wetness = get_number(w, "$.weather", "wetness", 0.0);
      require_range(s.snow.wetness, 0.0, 0.99, "$.weather.wetness");
      s.snow.density_g_cm3 =
          get_number(w, "$.weather", "snow_density_g_cm3", s.snow.wetness > 0.0 ? 0.52 : 0.1);
      require_range(s.snow.density_g_cm3, 0.01, 0.917, "$.weather.snow_density_g_cm3");
      if (s.snow.model == SnowModel::power_law) {
        s.snow.power_a = get_number(w, "$.weather", "power_a");
        s.snow.power_b = get_number(w, "$.weather", "power_b");
      }
    } else if (type == "turbulence") {
      s.weather = WeatherType::turbulence;
      s.turbulence.cn2 = get_number(w, "$.weather", "cn2");
      require_range(s.turbulence.cn2, 0.0, 1.0, "$.weather.cn2");
      s.turbulence.distribution =
          get_string(w, "$.weather", "distribution", std::string("gamma_gamma"));
      s.turbulence.wave = get_string(w, "$.weather", "wave", std::string("plane"));
    } else {
      fail("$.weather.type", "expected clear|rain|snow|turbulence, got " + type);
    }
  }

  if (j.contains("gas")) {
    const json& g = j["gas"];
    s.gas_enabled = get_bool(g, "$.gas", "enabled", true);
    const std::string cat = get_string(g, "$.gas", "catalog", std::string("builtin"));
    if (cat != "builtin") s.gas_catalog_path = cat;
  }
  if (j.contains("data")) {
    const json& d = j["data"];
    const std::string diel = get_string(d, "$.data", "dielectrics", std::string("builtin"));
    if (diel != "builtin") s.dielectrics_path = diel;
    const std::string itu = get_string(d, "$.data", "itu_rain", std::string("builtin"));
    if (itu != "builtin") s.itu_rain_path = itu;
  }

  if (j.contains("secrecy")) {
    const json& sec = j["secrecy"];
    if (sec.contains("grid")) {
      const json& g = sec["grid"];
      s.secrecy.grid.x_min = get_number(g, "$.secrecy.grid", "x_min", 0.0);
      s.secrecy.grid.x_max = get_number(g, "$.secrecy.grid", "x_max", 1000.0);
      s.secrecy.grid.nx = static_cast<int>(get_number(g, "$.secrecy.grid", "nx", 100.0));
      s.secrecy.grid.y_min = get_number(g, "$.secrecy.grid", "y_min", 1.0);
      s.secrecy.grid.y_max = get_number(g, "$.secrecy.grid", "y_max", 100.0);
      s.secrecy.grid.ny = static_cast<int>(get_number(g, "$.secrecy.grid", "ny", 50.0));
      if (s.secrecy.grid.y_min <= 0.0) fail("$.secrecy.grid.y_min", "must be positive");
    }
    if (sec.contains("eve")) {
      const json& e = sec["eve"];
      const double fov_deg = get_number(e, "$.secrecy.eve", "fov_deg", 20.0);
      require_range(fov_deg, 0.1, 179.0, "$.secrecy.eve.fov_deg");
      s.secrecy.eve_fov_rad = fov_deg * constants::pi / 180.0;
      s.secrecy.eve_rx_area_m2 = get_number(e, "$.secrecy.eve", "rx_area_m2", 1e-4);
      s.secrecy.eve_efficiency_scale = get_number(e, "$.secrecy.eve", "efficiency_scale", 1.0);
      s.secrecy.eve_x = get_number(e, "$.secrecy.eve", "x", 200.0);
      s.secrecy.eve_y = get_number(e, "$.secrecy.eve", "y", 10.0);
    }
    s.secrecy.phase_g = get_number(sec, "$.secrecy", "phase_g", 0.9);
    require_range(s.secrecy.phase_g, -0.999, 0.999, "$.secrecy.phase_g");
    s.secrecy.phase_f = get_number(sec, "$.secrecy", "phase_f", 0.5);
    s.secrecy.duty = get_number(sec, "$.secrecy", "duty", 0.5);
    require_range(s.secrecy.duty, 0.0, 1.0, "$.secrecy.duty");
    const std::string mi = get_string(sec, "$.secrecy", "mi_variant", std::string("corrected"));
    if (mi == "corrected")
      s.secrecy.mi_variant = secrecy::MiVariant::corrected;
    else if (mi == "as_printed" || mi == "as-printed")
      s.secrecy.mi_variant = secrecy::MiVariant::as_printed;
    else
      fail("$.secrecy.mi_variant", "expected corrected|as_printed, got " + mi);
    const std::string nm = get_string(sec, "$.secrecy", "nlos_mode", std::string("as_printed"));
    if (nm == "as_printed" || nm == "as-printed")
      s.secrecy.nlos_mode = secrecy::NlosMode::as_printed;
    else if (nm == "physical")
      s.secrecy.nlos_mode = secrecy::NlosMode::physical;
    else
      fail("$.secrecy.nlos_mode", "expected as_printed|physical, got " + nm);
  }

  if (j.contains("quadrature")) {
    const json& q = j["quadrature"];
    s.quadrature.rel_tol = get_number(q, "$.quadrature", "rel_tol", 1e-4);
    require_range(s.quadrature.rel_tol, 1e-12, 1e-1, "$.quadrature.rel_tol");
    s.d_max_rain_mm = get_number(q, "$.quadrature", "d_max_rain_mm", 8.0);
    s.d_max_snow_mm = get_number(q, "$.quadrature", "d_max_snow_mm", 20.0);
  }

  // resolve referenced data files now so config errors surface before compute
  s.catalog();
  s.dielectrics();
  s.itu_table();
  s.environment.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str(), path);
  return s;
}

MediumSummary evaluate_medium(const Scenario& s, double f_ghz, double rate_mm_hr) {
  MediumSummary m;
  if (s.gas_enabled)
    m.gas_db_km = atmosphere::specific_gas_attenuation_db_km(s.environment, f_ghz, s.catalog());

  switch (s.weather) {
    case WeatherType::clear:
      break;
    case WeatherType::rain: {
      if (rate_mm_hr <= 0.0) break;
      if (s.rain.model == RainModel::itu) {
        m.weather.total = hydro::rain_attenuation_itu_db_km(f_ghz, rate_mm_hr, s.itu_table());
        m.weather.absorption = m.weather.total;
      } else {
        const hydro::DropSizeDistribution dsd =
            s.rain.custom_dsd ? *s.rain.custom_dsd : hydro::marshall_palmer(rate_mm_hr);
        const dielectrics::ComplexPermittivity eps =
            dielectrics::permittivity_water(f_ghz, s.environment.temperature_k, s.dielectrics());
        m.weather = hydro::specific_attenuation_mie(dsd, eps, f_ghz, s.d_max_rain_mm, s.quadrature);
      }
      break;
    }
    case WeatherType::snow: {
      if (rate_mm_hr <= 0.0) break;
      if (s.snow.model == SnowModel::gunn_east) {
        const double first = 0.00349 * std::pow(rate_mm_hr, 1.6) / std::pow(30.0 / f_ghz, 4);
        m.weather.total = hydro::snow_attenuation_gunn_east_db_km(f_ghz, rate_mm_hr);
        m.weather.scattering = first;
        m.weather.absorption = m.weather.total - first;
      } else if (s.snow.model == SnowModel::power_law) {
        m.weather.total =
            hydro::snow_attenuation_power_law_db_km(s.snow.power_a, s.snow.power_b, rate_mm_hr);
        m.weather.absorption = m.weather.total;
      } else {
        const hydro::DropSizeDistribution dsd = hydro::snow_distribution(s.snow.variant, rate_mm_hr);
        const double t_snow = std::min(s.environment.temperature_k, 273.15);
        const dielectrics::ComplexPermittivity eps =
            s.snow.wetness > 0.0
                ? dielectrics::permittivity_wet_snow(f_ghz, t_snow, s.snow.density_g_cm3,
                                                     s.snow.wetness, s.dielectrics())
                : dielectrics::permittivity_dry_snow(s.snow.density_g_cm3, f_ghz, t_snow,
                                                     s.dielectrics());
        m.weather = hydro::specific_attenuation_mie(dsd, eps, f_ghz, s.d_max_snow_mm, s.quadrature,
                                                    {s.snow.density_g_cm3});
      }
      break;
    }
    case WeatherType::turbulence: {
      const turbulence::ScintillationAttenuation sc = turbulence::scintillation_attenuation_rytov(
          s.turbulence.cn2, f_ghz, s.geometry.distance_m);
      m.scintillation_db_km = sc.attenuation_db / (s.geometry.distance_m / 1000.0);
      break;
    }
  }
  m.k_ext_db_km = m.gas_db_km + m.weather.total + m.scintillation_db_km;
  m.k_sca_db_km = m.weather.scattering + m.scintillation_db_km;
  return m;
}

double counts_per_gain(const Scenario& s) {
  return s.detector.integration_time_s * s.detector.efficiency *
         constants::dbm_to_watt(s.tx_power_dbm) / link::photon_energy_j(s.frequency_ghz);
}

}  // namespace thzsim::scenario
