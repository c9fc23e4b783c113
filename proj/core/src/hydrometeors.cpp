#include "thzsim/hydrometeors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/mie.hpp"

namespace thzsim::hydro {

DropSizeDistribution marshall_palmer(double rate_mm_hr) {
  detail::require(rate_mm_hr > 0.0, "marshall_palmer: rate must be positive");
  return Exponential{8000.0, 4.1 * std::pow(rate_mm_hr, -0.21)};
}

DropSizeDistribution snow_distribution(SnowVariant variant, double rate_mm_hr) {
  detail::require(rate_mm_hr > 0.0, "snow_distribution: rate must be positive");
  SnowExponential s;
  s.variant = variant;
  s.rate_mm_hr = rate_mm_hr;
  switch (variant) {
    case SnowVariant::marshall_palmer:
      s.n0 = 16.0e3;
      s.a = 8.2 * std::pow(rate_mm_hr, -0.21);
      break;
    case SnowVariant::scott:
      s.n0 = 100.0e3;
      s.a = 5.76 * std::pow(rate_mm_hr, -0.31);
      s.needs_size_conversion = true;
      break;
    case SnowVariant::gunn_marshall:
      s.n0 = 7.6e3 * std::pow(rate_mm_hr, -0.87);
      s.a = 5.1 * std::pow(rate_mm_hr, -0.48);
      break;
    case SnowVariant::sekhon_srivastava:
      s.n0 = 5.0e3 * std::pow(rate_mm_hr, -0.94);
      s.a = 4.58 * std::pow(rate_mm_hr, -0.45);
      break;
    default:
      throw std::invalid_argument("snow_distribution: unknown variant");
  }
  return s;
}

SnowVariant snow_variant_from_name(const std::string& name) {
  if (name == "marshall_palmer" || name == "mp") return SnowVariant::marshall_palmer;
  if (name == "scott") return SnowVariant::scott;
  if (name == "gunn_marshall" || name == "gm") return SnowVariant::gunn_marshall;
  if (name == "sekhon_srivastava" || name == "ss") return SnowVariant::sekhon_srivastava;
  throw std::invalid_argument("unknown snow distribution variant: " + name);
}

DropSizeDistribution typhoon_preset(int index) {
  static const double n0[] = {1850.0, 1680.0, 1000.0, 620.0};
  static const double rate[] = {6.8, 7.6, 15.3, 30.6};
  detail::require_arg(index >= 0 && index < 4, "typhoon_preset: index must be in [0, 3]");
  return Exponential{n0[index], 4.0 * std::pow(rate[index], -0.21)};
}

DropSizeDistribution thawing_preset(const std::string& name, double rate_mm_hr) {
  detail::require(rate_mm_hr > 0.0, "thawing_preset: rate must be positive");
  // Exponential-family gamma presets (shape parameter left at zero; only the
  // scale laws are tabulated for these media).
  if (name == "hail")
    return Gamma{64500.0 * std::pow(rate_mm_hr, -0.5), 0.0, 5.7 * std::pow(rate_mm_hr, -0.27)};
  if (name == "granular_sleet")
    return Gamma{11750.0 * std::pow(rate_mm_hr, -0.29), 0.0, 4.1 * std::pow(rate_mm_hr, -0.2)};
  if (name == "nongranular_sleet")
    return Gamma{2820.0 * std::pow(rate_mm_hr, -0.18), 0.0, 3.0 * std::pow(rate_mm_hr, -0.19)};
  throw std::invalid_argument("unknown thawing preset: " + name);
}

double dsd_density(const DropSizeDistribution& dsd, double size_mm) {
  detail::require(size_mm > 0.0, "dsd_density: size must be positive");
  return std::visit(
      [size_mm](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return d.n0 * std::exp(-d.lambda * size_mm);
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          const double ls = std::log(d.sigma_g);
          const double z = std::log(size_mm / d.d_bar);
          return d.n_t / (std::sqrt(2.0 * constants::pi) * ls * size_mm) *
                 std::exp(-z * z / (2.0 * ls * ls));
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return d.n0 * std::pow(size_mm, d.mu) * std::exp(-d.lambda * size_mm);
        } else if constexpr (std::is_same_v<T, NormalizedGamma>) {
          const double m4 = 4.0 + d.mu;
          const double c = 6.0 / 256.0 * std::pow(m4, m4) / std::tgamma(m4);
          return d.n_w * c * std::pow(size_mm / d.d_m, d.mu) * std::exp(-m4 * size_mm / d.d_m);
        } else {
          return d.n0 * std::exp(-d.a * size_mm);
        }
      },
      dsd);
}

double melted_to_actual_radius_mm(double r_melted_mm, double snow_density_g_cm3) {
  detail::require(snow_density_g_cm3 > 0.0, "snow density must be positive");
  return r_melted_mm * std::cbrt(1.0 / snow_density_g_cm3);
}

double actual_to_melted_radius_mm(double r_actual_mm, double snow_density_g_cm3) {
  detail::require(snow_density_g_cm3 > 0.0, "snow density must be positive");
  return r_actual_mm * std::cbrt(snow_density_g_cm3);
}

namespace {

bool is_snow(const DropSizeDistribution& dsd) {
  return std::holds_alternative<SnowExponential>(dsd);
}

}  // namespace

WeatherAttenuation specific_attenuation_mie(const DropSizeDistribution& dsd,
                                            const dielectrics::ComplexPermittivity& medium,
                                            double f_ghz, double d_max_mm,
                                            const numerics::QuadratureConfig& quad,
                                            const SnowMicrophysics& snow) {
  detail::require(d_max_mm > 0.0, "specific_attenuation_mie: d_max must be positive");
  detail::require(f_ghz > 0.0, "specific_attenuation_mie: frequency must be positive");

  const std::complex<double> m = dielectrics::refractive_index(medium);
  const double lambda_mm = constants::wavelength_m(f_ghz) * 1e3;
  const bool snow_dsd = is_snow(dsd);
  const bool convert_size = snow_dsd && std::get<SnowExponential>(dsd).needs_size_conversion;
  const double size_scale =
      convert_size ? melted_to_actual_radius_mm(1.0, snow.density_g_cm3) : 1.0;

  // radius (mm) of the scattering sphere for the integration variable
  auto radius_mm = [&](double s) { return snow_dsd ? size_scale * s : 0.5 * s; };

  auto integrand = [&](double s, bool scattering) -> double {
    if (s <= 0.0) return 0.0;
    const double r_mm = radius_mm(s);
    const double x = 2.0 * constants::pi * r_mm / lambda_mm;
    if (x <= 0.0) return 0.0;
    const mie::MieEfficiencies q = mie::mie_efficiencies(m, x);
    const double r_m = r_mm * 1e-3;
    const double c = mie::cross_section_m2(scattering ? q.q_sca : q.q_ext, r_m);
    return dsd_density(dsd, s) * c;
  };

  const double prefactor = 4.343e3;
  WeatherAttenuation out;
  out.total = prefactor *
              numerics::integrate([&](double s) { return integrand(s, false); }, 0.0, d_max_mm, quad);
  out.scattering = prefactor *
              numerics::integrate([&](double s) { return integrand(s, true); }, 0.0, d_max_mm, quad);
  out.scattering = std::min(out.scattering, out.total);
  out.absorption = out.total - out.scattering;
  return out;
}

ItuRainTable ItuRainTable::parse(const std::string& text, const std::string& origin) {
  ItuRainTable t;
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
    Row row;
    std::istringstream ls(s);
    if (!(ls >> row.f_ghz >> row.k >> row.a))
      throw config_error(origin + ":" + std::to_string(lineno) + ": bad coefficient row: " + s);
    if (!t.rows_.empty() && row.f_ghz <= t.rows_.back().f_ghz)
      throw config_error(origin + ": frequencies must be strictly ascending");
    t.rows_.push_back(row);
  }
  if (t.rows_.size() < 2) throw config_error(origin + ": coefficient table needs at least two rows");
  return t;
}

ItuRainTable ItuRainTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open rain coefficient table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void ItuRainTable::coefficients(double f_ghz, double& k, double& a) const {
  detail::require(f_ghz >= rows_.front().f_ghz && f_ghz <= rows_.back().f_ghz,
                  "rain coefficient table: frequency outside tabulated range");
  size_t i = 1;
  while (i + 1 < rows_.size() && rows_[i].f_ghz < f_ghz) ++i;
  const Row& lo = rows_[i - 1];
  const Row& hi = rows_[i];
  const double t = (std::log(f_ghz) - std::log(lo.f_ghz)) / (std::log(hi.f_ghz) - std::log(lo.f_ghz));
  k = std::exp(std::log(lo.k) + t * (std::log(hi.k) - std::log(lo.k)));
  a = lo.a + t * (hi.a - lo.a);
}

double rain_attenuation_itu_db_km(double f_ghz, double rate_mm_hr, const ItuRainTable& table) {
  detail::require(rate_mm_hr >= 0.0, "rain_attenuation_itu: rate must be nonnegative");
  if (rate_mm_hr == 0.0) return 0.0;
  double k, a;
  table.coefficients(f_ghz, k, a);
  return k * std::pow(rate_mm_hr, a);
}

double snow_attenuation_gunn_east_db_km(double f_ghz, double rate_mm_hr) {
  detail::require(f_ghz > 0.0, "snow_attenuation_gunn_east: frequency must be positive");
  detail::require(rate_mm_hr >= 0.0, "snow_attenuation_gunn_east: rate must be nonnegative");
  const double lambda_cm = 30.0 / f_ghz;
  return 0.00349 * std::pow(rate_mm_hr, 1.6) / std::pow(lambda_cm, 4) +
         0.00224 * rate_mm_hr / lambda_cm;
}

double snow_attenuation_power_law_db_km(double a, double b, double rate_mm_hr) {
  detail::require(a >= 0.0, "snow_attenuation_power_law: coefficient a must be nonnegative");
  detail::require(rate_mm_hr >= 0.0, "snow_attenuation_power_law: rate must be nonnegative");
  if (rate_mm_hr == 0.0) return 0.0;
  return a * std::pow(rate_mm_hr, b);
}

}  // namespace thzsim::hydro
