#include "thzsim/commands.hpp"

#include <cmath>
#include <sstream>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/turbulence.hpp"
#include "thzsim/version.hpp"

namespace thzsim::commands {

namespace sc = thzsim::scenario;

void add_provenance(Table& t, const sc::Scenario& s) {
  std::ostringstream hash;
  hash << std::hex << s.source_hash;
  t.metadata.emplace_back("thzsim_version", kVersion);
  t.metadata.emplace_back("gas_catalog", s.catalog().version());
  t.metadata.emplace_back("dielectrics", s.dielectrics().version());
  t.metadata.emplace_back("itu_rain", s.itu_table().version());
  t.metadata.emplace_back("scenario", s.source_path);
  t.metadata.emplace_back("scenario_fnv1a64", hash.str());
  if (!s.name.empty()) t.metadata.emplace_back("scenario_name", s.name);
}

Table gas_spectrum(const sc::Scenario& s, double f_start_ghz, double f_stop_ghz, int n_points) {
  detail::require_arg(f_start_ghz > 0.0 && f_start_ghz < f_stop_ghz,
                      "gas_spectrum: need 0 < f_start < f_stop");
  detail::require_arg(n_points >= 2, "gas_spectrum: need at least two points");

  std::vector<double> grid(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i)
    grid[static_cast<size_t>(i)] = f_start_ghz + (f_stop_ghz - f_start_ghz) * i / (n_points - 1);
  const std::vector<double> atten =
      atmosphere::attenuation_spectrum_db_km(s.environment, grid, s.catalog());

  Table t;
  t.columns = {"f_GHz", "atten_dB_per_km"};
  for (int i = 0; i < n_points; ++i)
    t.rows.push_back({grid[static_cast<size_t>(i)], atten[static_cast<size_t>(i)]});
  add_provenance(t, s);
  return t;
}

Table weather_attenuation(const sc::Scenario& s, const std::vector<double>& rates_mm_hr) {
  detail::require_arg(!rates_mm_hr.empty(), "weather_attenuation: empty rate sweep");
  detail::require_arg(s.weather == sc::WeatherType::rain || s.weather == sc::WeatherType::snow,
                      "weather_attenuation: scenario must carry a rain or snow block");

  Table t;
  t.columns = {"rate_mm_hr", "total_dB_per_km", "absorption_dB_per_km", "scattering_dB_per_km"};
  for (double rate : rates_mm_hr) {
    detail::require_arg(rate >= 0.0, "weather_attenuation: rates must be nonnegative");
    const sc::MediumSummary m = sc::evaluate_medium(s, s.frequency_ghz, rate);
    // gas absorption folds into the absorption column when enabled
    t.rows.push_back({rate, m.weather.total + m.gas_db_km, m.weather.absorption + m.gas_db_km,
                      m.weather.scattering});
  }
  add_provenance(t, s);
  std::ostringstream f;
  f << s.frequency_ghz;
  t.metadata.emplace_back("frequency_GHz", f.str());
  return t;
}

BerSweep ber_sweep_from_name(const std::string& name) {
  if (name == "distance") return BerSweep::distance;
  if (name == "rate") return BerSweep::rate;
  if (name == "snr") return BerSweep::snr;
  throw std::invalid_argument("ber: unknown sweep kind (expected distance|rate|snr): " + name);
}

Table ber(const sc::Scenario& s, BerSweep sweep, double start, double stop, int n_points) {
  detail::require_arg(n_points >= 2, "ber: need at least two sweep points");
  detail::require_arg(start < stop, "ber: need start < stop");

  Table t;
  const char* label = (sweep == BerSweep::distance) ? "distance_m"
                      : (sweep == BerSweep::rate)   ? "rate_mm_hr"
                                                    : "snr_dB";
  t.columns = {label, "snr_dB", "ber_ask", "ber_qam16"};

  for (int i = 0; i < n_points; ++i) {
    const double v = start + (stop - start) * i / (n_points - 1);
    double snr_db = 0.0;
    if (sweep == BerSweep::snr) {
      snr_db = v;
    } else {
      sc::Scenario swept = s;
      double rate = 0.0;
      if (s.weather == sc::WeatherType::rain) rate = s.rain.rate_mm_hr;
      if (s.weather == sc::WeatherType::snow) rate = s.snow.rate_mm_hr;
      if (sweep == BerSweep::distance)
        swept.geometry.distance_m = v;  // turbulence loss follows the path
      else
        rate = v;
      const sc::MediumSummary m = sc::evaluate_medium(swept, s.frequency_ghz, rate);
      const double p_rx = link::friis_received_power_dbm(s.tx_power_dbm, swept.geometry,
                                                         s.frequency_ghz, m.k_ext_db_km);
      snr_db = p_rx - s.detector.noise_floor_dbm;
    }
    const double snr = constants::db_to_linear(snr_db);
    t.rows.push_back({v, snr_db, link::ber_ask(snr), link::ber_mqam(snr, 16)});
  }
  add_provenance(t, s);
  return t;
}

namespace {

secrecy::MapScenario map_scenario_from(const sc::Scenario& s) {
  const sc::MediumSummary m = sc::evaluate_medium(s);
  secrecy::MapScenario ms;
  ms.distance_m = s.geometry.distance_m;
  ms.g_los = link::los_gain(s.geometry, m.k_ext_db_km).total;
  ms.medium.k_ext_db_km = m.k_ext_db_km;
  ms.medium.k_sca_db_km = m.k_sca_db_km;
  ms.medium.phase_g = s.secrecy.phase_g;
  ms.medium.phase_f = s.secrecy.phase_f;
  ms.eve_fov_rad = s.secrecy.eve_fov_rad;
  ms.eve_rx_area_m2 = s.secrecy.eve_rx_area_m2;
  ms.eve_counts_scale = s.secrecy.eve_efficiency_scale;
  ms.counts_per_gain = sc::counts_per_gain(s);
  ms.lambda_b = s.detector.background_rate;
  ms.duty = s.secrecy.duty;
  ms.slot_rate_hz = 1.0 / s.detector.integration_time_s;
  ms.mi_variant = s.secrecy.mi_variant;
  ms.nlos_mode = s.secrecy.nlos_mode;
  ms.quad = s.quadrature;
  return ms;
}

void append_medium_metadata(Table& t, const sc::Scenario& s) {
  const sc::MediumSummary m = sc::evaluate_medium(s);
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
  };
  t.metadata.emplace_back("frequency_GHz", num(s.frequency_ghz));
  t.metadata.emplace_back("k_ext_dB_per_km", num(m.k_ext_db_km));
  t.metadata.emplace_back("k_sca_dB_per_km", num(m.k_sca_db_km));
  t.metadata.emplace_back("gas_dB_per_km", num(m.gas_db_km));
  t.metadata.emplace_back("phase_g", num(s.secrecy.phase_g));
  t.metadata.emplace_back("phase_f", num(s.secrecy.phase_f));
  t.metadata.emplace_back("duty", num(s.secrecy.duty));
  t.metadata.emplace_back("mi_variant", s.secrecy.mi_variant == secrecy::MiVariant::corrected
                                            ? "corrected"
                                            : "as_printed");
  t.metadata.emplace_back(
      "nlos_mode", s.secrecy.nlos_mode == secrecy::NlosMode::as_printed ? "as_printed" : "physical");
}

}  // namespace

SecrecyMapOutput secrecy_map(const sc::Scenario& s, int threads) {
  detail::require_arg(s.weather != sc::WeatherType::rain || s.rain.model == sc::RainModel::mie,
                      "secrecy_map: rain scenarios need the mie model for a scattering split");
  detail::require_arg(s.weather != sc::WeatherType::snow || s.snow.model == sc::SnowModel::mie,
                      "secrecy_map: snow scenarios need the mie model for a scattering split");

  SecrecyMapOutput out;
  const secrecy::MapScenario ms = map_scenario_from(s);
  out.map = secrecy::secrecy_map(ms, s.secrecy.grid, threads);

  out.table.columns = {"x_m", "y_m", "cs_gbps"};
  for (const secrecy::MapCell& c : out.map.cells)
    out.table.rows.push_back({c.x, c.y, c.cs_gbps});
  add_provenance(out.table, s);
  append_medium_metadata(out.table, s);
  {
    std::ostringstream os;
    os.precision(10);
    os << ms.g_los;
    out.table.metadata.emplace_back("g_los", os.str());
  }
  return out;
}

Table outage(const sc::Scenario& s, const std::vector<double>& target_rates_gbps,
             const MonteCarloOptions& mc) {
  detail::require_arg(!target_rates_gbps.empty(), "outage: empty target rate sweep");
  detail::require_arg(s.weather == sc::WeatherType::turbulence,
                      "outage: scenario must carry a turbulence block");

  const sc::MediumSummary m = sc::evaluate_medium(s);
  const double sigma_r2 = turbulence::rytov_variance(s.turbulence.cn2, s.frequency_ghz,
                                                     s.geometry.distance_m);

  secrecy::OutageScenario os;
  os.mean_g_los = link::los_gain(s.geometry, m.k_ext_db_km).total;
  os.counts_per_gain = sc::counts_per_gain(s);
  os.lambda_b = s.detector.background_rate;
  os.duty = s.secrecy.duty;
  os.slot_rate_hz = 1.0 / s.detector.integration_time_s;
  os.variant = s.secrecy.mi_variant;

  // Eve's counts at the configured position with optimal pointing.
  secrecy::EveGeometry eve;
  eve.x = s.secrecy.eve_x;
  eve.y = s.secrecy.eve_y;
  eve.fov_rad = s.secrecy.eve_fov_rad;
  eve.rx_area_m2 = s.secrecy.eve_rx_area_m2;
  secrecy::ScatterMedium med;
  med.k_ext_db_km = m.k_ext_db_km;
  med.k_sca_db_km = m.k_sca_db_km;
  med.phase_g = s.secrecy.phase_g;
  med.phase_f = s.secrecy.phase_f;
  const secrecy::PointingResult p =
      secrecy::optimize_pointing(eve, med, s.geometry.distance_m, s.secrecy.nlos_mode, s.quadrature);
  os.lambda_n = os.counts_per_gain * s.secrecy.eve_efficiency_scale * p.gain;

  Table t;
  t.columns = {"R_gbps", "P0"};
  const bool with_mc = mc.samples > 0;
  if (with_mc) t.columns.push_back("P0_mc");
  for (double r : target_rates_gbps) {
    detail::require_arg(r >= 0.0, "outage: target rates must be nonnegative");
    std::vector<double> row = {r, secrecy::outage_probability(r, os, sigma_r2)};
    if (with_mc) row.push_back(secrecy::outage_probability_mc(r, os, sigma_r2, mc.seed, mc.samples));
    t.rows.push_back(std::move(row));
  }
  add_provenance(t, s);
  append_medium_metadata(t, s);
  {
    std::ostringstream ss;
    ss.precision(10);
    ss << sigma_r2;
    t.metadata.emplace_back("sigma_r2", ss.str());
    std::ostringstream ln;
    ln.precision(10);
    ln << os.lambda_n;
    t.metadata.emplace_back("lambda_n", ln.str());
  }
  return t;
}

}  // namespace thzsim::commands
