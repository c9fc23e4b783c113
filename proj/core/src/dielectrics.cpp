#include "thzsim/dielectrics.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "thzsim/errors.hpp"

namespace thzsim::dielectrics {

std::complex<double> refractive_index(const ComplexPermittivity& eps) {
  // principal sqrt keeps re >= 0, im >= 0 for im(eps) >= 0; re >= 1 given re(eps) >= 1
  return std::sqrt(eps.value());
}

DielectricTable DielectricTable::parse(const std::string& text, const std::string& origin) {
  DielectricTable t;
  std::map<std::string, double*> keys = {
      {"water.eps_static_a", &t.water_eps_static_a},
      {"water.eps_static_b", &t.water_eps_static_b},
      {"water.eps_one_ratio", &t.water_eps_one_ratio},
      {"water.eps_inf", &t.water_eps_inf},
      {"water.fp_a", &t.water_fp_a},
      {"water.fp_b", &t.water_fp_b},
      {"water.fp_c", &t.water_fp_c},
      {"water.fs_ratio", &t.water_fs_ratio},
      {"ice.real_a", &t.ice_real_a},
      {"ice.real_b", &t.ice_real_b},
      {"ice.loss_a", &t.ice_loss_a},
      {"ice.loss_b", &t.ice_loss_b},
      {"snow.dry_p1", &t.snow_dry_p1},
      {"snow.dry_p3", &t.snow_dry_p3},
      {"snow.ice_density", &t.snow_ice_density},
      {"snow.poly_max_density", &t.snow_poly_max_density},
      {"snow.wet_a", &t.snow_wet_a},
      {"snow.wet_a_exp", &t.snow_wet_a_exp},
      {"snow.wet_b", &t.snow_wet_b},
      {"snow.wet_b_exp", &t.snow_wet_b_exp},
      {"snow.wet_f0_ghz", &t.snow_wet_f0_ghz},
      {"snow.wet_c", &t.snow_wet_c},
      {"snow.wet_f1_ghz", &t.snow_wet_f1_ghz},
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string s = (hash == std::string::npos) ? raw : raw.substr(0, hash);
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    const auto e = s.find_last_not_of(" \t\r\n");
    s = s.substr(b, e - b + 1);
    if (s.rfind("version=", 0) == 0) {
      t.version_ = s.substr(8);
      continue;
    }
    std::istringstream ls(s);
    std::string medium, key;
    double value;
    if (!(ls >> medium >> key >> value))
      throw config_error(origin + ":" + std::to_string(lineno) + ": bad dielectric row: " + s);
    const auto it = keys.find(medium + "." + key);
    if (it == keys.end())
      throw config_error(origin + ":" + std::to_string(lineno) + ": unknown key " + medium + "." + key);
    *it->second = value;
  }
  return t;
}

DielectricTable DielectricTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open dielectric table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

ComplexPermittivity permittivity_water(double f_ghz, double t_k, const DielectricTable& tb) {
  detail::require(f_ghz > 0.0 && f_ghz <= 1200.0, "permittivity_water: f outside (0, 1200] GHz");
  detail::require(t_k >= 253.0 && t_k <= 333.0, "permittivity_water: t outside [253, 333] K");

  const double theta = 300.0 / t_k;
  const double eps_s = tb.water_eps_static_a + tb.water_eps_static_b * (theta - 1.0);
  const double eps_1 = tb.water_eps_one_ratio * eps_s;
  const double eps_inf = tb.water_eps_inf;
  const double fp = tb.water_fp_a + tb.water_fp_b * (theta - 1.0) +
                    tb.water_fp_c * (theta - 1.0) * (theta - 1.0);
  const double fs = tb.water_fs_ratio * fp;

  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> eps =
      eps_inf + (eps_s - eps_1) / (1.0 - i * (f_ghz / fp)) + (eps_1 - eps_inf) / (1.0 - i * (f_ghz / fs));
  return {eps.real(), eps.imag()};
}

ComplexPermittivity permittivity_ice(double f_ghz, double t_k, const DielectricTable& tb) {
  detail::require(f_ghz > 0.0, "permittivity_ice: frequency must be positive");
  detail::require(t_k >= 230.0 && t_k <= 273.15, "permittivity_ice: t outside [230, 273.15] K");
  const double t_c = t_k - 273.15;
  const double re = tb.ice_real_a + tb.ice_real_b * t_c;
  const double im = tb.ice_loss_a / f_ghz + tb.ice_loss_b * f_ghz;
  return {re, im};
}

namespace {

double dry_snow_real(double rho, const DielectricTable& tb, double f_ghz, double t_k) {
  const auto poly = [&](double r) { return 1.0 + tb.snow_dry_p1 * r + tb.snow_dry_p3 * r * r * r; };
  if (rho <= tb.snow_poly_max_density) return poly(rho);
  // Above the polynomial's validity ceiling: Looyenga mixture toward the ice
  // value, scaled for continuity at the crossover density.
  const double eps_ice = permittivity_ice(f_ghz, std::min(t_k, 273.15), tb).real_part;
  const auto looyenga = [&](double r) {
    const double v = r / tb.snow_ice_density;
    const double e13 = 1.0 + v * (std::cbrt(eps_ice) - 1.0);
    return e13 * e13 * e13;
  };
  const double x0 = tb.snow_poly_max_density;
  return looyenga(rho) * (poly(x0) / looyenga(x0));
}

}  // namespace

ComplexPermittivity permittivity_dry_snow(double density_g_cm3, double f_ghz, double t_k,
                                          const DielectricTable& tb) {
  detail::require(density_g_cm3 > 0.0 && density_g_cm3 <= tb.snow_ice_density,
                  "permittivity_dry_snow: density outside (0, ice density]");
  const double re = dry_snow_real(density_g_cm3, tb, f_ghz, t_k);
  const double ice_fraction = density_g_cm3 / tb.snow_ice_density;
  const double im = ice_fraction * permittivity_ice(f_ghz, std::min(t_k, 273.15), tb).imag_part;
  return {re, im};
}

ComplexPermittivity permittivity_wet_snow(double f_ghz, double t_k, double density_g_cm3,
                                          double wetness, const DielectricTable& tb) {
  detail::require(wetness >= 0.0 && wetness < 1.0, "permittivity_wet_snow: wetness outside [0, 1)");
  detail::require(f_ghz >= 15.0, "permittivity_wet_snow: model valid only for f >= 15 GHz");

  const ComplexPermittivity dry = permittivity_dry_snow(density_g_cm3, f_ghz, t_k, tb);
  if (wetness == 0.0) return dry;

  const double w_pct = 100.0 * wetness;
  const double wa = std::pow(w_pct, tb.snow_wet_a_exp);
  const double wb = std::pow(w_pct, tb.snow_wet_b_exp);
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> debye0 = 1.0 / (1.0 - i * (f_ghz / tb.snow_wet_f0_ghz));
  const std::complex<double> debye1 = 1.0 / (1.0 - i * (f_ghz / tb.snow_wet_f1_ghz));
  const std::complex<double> inc =
      tb.snow_wet_a * wa + tb.snow_wet_b * wb * debye0 + tb.snow_wet_c * wb * debye1;

  return {dry.real_part + inc.real(), dry.imag_part + inc.imag()};
}

}  // namespace thzsim::dielectrics
