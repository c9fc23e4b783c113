#include "thzsim/atmosphere.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "thzsim/errors.hpp"

namespace thzsim::atmosphere {

namespace {
constexpr double kReferencePressureHpa = 1013.25;
constexpr double kReferenceTemperatureK = 300.0;
}  // namespace

void Environment::validate() const {
  detail::require(temperature_k > 0.0, "Environment: temperature must be positive");
  detail::require(pressure_hpa > 0.0, "Environment: pressure must be positive");
  detail::require(relative_humidity >= 0.0 && relative_humidity <= 1.0,
                  "Environment: relative humidity must be in [0, 1]");
}

GasLineCatalog GasLineCatalog::parse(const std::string& text, const std::string& origin) {
  GasLineCatalog cat;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string s = (hash == std::string::npos) ? raw : raw.substr(0, hash);
    // trim
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    const auto e = s.find_last_not_of(" \t\r\n");
    s = s.substr(b, e - b + 1);

    if (s.rfind("version=", 0) == 0) {
      cat.version_ = s.substr(8);
      continue;
    }
    std::istringstream ls(s);
    std::string first;
    ls >> first;
    if (first == "continuum") {
      if (!(ls >> cat.continuum_.c0 >> cat.continuum_.c1))
        throw config_error(origin + ":" + std::to_string(lineno) + ": bad continuum row");
      continue;
    }
    GasLine line;
    std::istringstream ls2(s);
    if (!(ls2 >> line.center_ghz >> line.intensity >> line.halfwidth_ghz >>
          line.pressure_exponent >> line.temperature_exponent))
      throw config_error(origin + ":" + std::to_string(lineno) + ": bad catalog row: " + s);
    cat.lines_.push_back(line);
  }
  cat.validate(origin);
  return cat;
}

GasLineCatalog GasLineCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open gas line catalog: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void GasLineCatalog::validate(const std::string& origin) const {
  if (lines_.empty()) throw config_error(origin + ": gas line catalog has no lines");
  double prev = 0.0;
  for (const GasLine& l : lines_) {
    if (l.center_ghz <= prev)
      throw config_error(origin + ": line centers must be strictly positive and sorted ascending");
    if (l.halfwidth_ghz <= 0.0) throw config_error(origin + ": line half-widths must be positive");
    prev = l.center_ghz;
  }
  if (continuum_.c0 < 0.0 || continuum_.c1 < 0.0)
    throw config_error(origin + ": continuum coefficients must be nonnegative");
}

double saturation_vapor_pressure_hpa(double t_k) {
  detail::require(t_k >= 200.0 && t_k <= 350.0,
                  "saturation_vapor_pressure: temperature outside [200, 350] K");
  const double t_c = t_k - 273.15;
  return 6.1121 * std::exp(17.502 * t_c / (240.97 + t_c));
}

double water_vapor_pressure_hpa(const Environment& env) {
  env.validate();
  return env.relative_humidity * saturation_vapor_pressure_hpa(env.temperature_k);
}

double water_vapor_density_g_m3(const Environment& env) {
  return 216.7 * water_vapor_pressure_hpa(env) / env.temperature_k;
}

double vapor_density_to_pressure_hpa(double rho_g_m3, double t_k) {
  return rho_g_m3 * t_k / 216.7;
}

double refractive_index_thz(const Environment& env) {
  env.validate();
  const double pv = water_vapor_pressure_hpa(env);
  return 1.0 + 77.6 / env.temperature_k * (env.pressure_hpa + 4810.0 * pv / env.temperature_k) * 1e-6;
}

double refractive_index_dT(const Environment& env) {
  env.validate();
  const double t = env.temperature_k;
  const double pv = water_vapor_pressure_hpa(env);
  return -77.6e-6 / (t * t) * (env.pressure_hpa + 9620.0 * pv / t);
}

namespace {

// Van Vleck-Weisskopf shape, units 1/GHz.
double vvw_shape(double f, double f0, double df) {
  const double ratio = f / f0;
  const double a = df / ((f0 - f) * (f0 - f) + df * df);
  const double b = df / ((f0 + f) * (f0 + f) + df * df);
  return ratio * ratio * (a + b);
}

}  // namespace

double specific_gas_attenuation_db_km(const Environment& env, double f_ghz,
                                      const GasLineCatalog& catalog) {
  env.validate();
  detail::require(f_ghz > 0.0, "specific_gas_attenuation: frequency must be positive");
  if (catalog.lines().empty()) throw config_error("specific_gas_attenuation: empty catalog");

  const double pv = water_vapor_pressure_hpa(env);
  if (pv == 0.0) return 0.0;
  const double rho = 216.7 * pv / env.temperature_k;
  const double theta = kReferenceTemperatureK / env.temperature_k;

  double alpha = 0.0;
  for (const GasLine& l : catalog.lines()) {
    const double df =
        l.halfwidth_ghz * std::pow(env.pressure_hpa / kReferencePressureHpa, l.pressure_exponent);
    alpha += l.intensity * rho * std::pow(theta, l.temperature_exponent) *
             vvw_shape(f_ghz, l.center_ghz, df);
  }
  const GasContinuum& c = catalog.continuum();
  alpha += (c.c0 * pv * env.pressure_hpa + c.c1 * pv * pv) * f_ghz * f_ghz;
  return alpha;
}

std::vector<double> attenuation_spectrum_db_km(const Environment& env,
                                               std::span<const double> f_ghz,
                                               const GasLineCatalog& catalog) {
  for (size_t i = 0; i + 1 < f_ghz.size(); ++i)
    detail::require_arg(f_ghz[i] < f_ghz[i + 1], "attenuation_spectrum: grid must be sorted");
  if (!f_ghz.empty())
    detail::require_arg(f_ghz.front() > 0.0, "attenuation_spectrum: grid must be positive");

  std::vector<double> out;
  out.reserve(f_ghz.size());
  for (double f : f_ghz) out.push_back(specific_gas_attenuation_db_km(env, f, catalog));
  return out;
}

}  // namespace thzsim::atmosphere
