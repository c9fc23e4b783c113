#ifndef THZSIM_ATMOSPHERE_HPP
#define THZSIM_ATMOSPHERE_HPP

#include <span>
#include <string>
#include <vector>

namespace thzsim::atmosphere {

struct Environment {
  double temperature_k = 288.15;
  double pressure_hpa = 1013.0;   // total pressure
  double relative_humidity = 0.0; // fraction in [0, 1]

  void validate() const;
};

struct GasLine {
  double center_ghz = 0.0;
  double intensity = 0.0;            // calibrated scale at the 300 K reference
  double halfwidth_ghz = 0.0;        // at 1013.25 hPa reference pressure
  double pressure_exponent = 0.0;    // width ~ (P/P0)^p_exp
  double temperature_exponent = 0.0; // intensity ~ (300/T)^t_exp
};

struct GasContinuum {
  double c0 = 0.0;  // dB/km per (hPa^2 GHz^2), scales with Pv*Pa
  double c1 = 0.0;  // dB/km per (hPa^2 GHz^2), scales with Pv^2
};

// Water-vapor spectral line catalog. Lines are sorted by center frequency;
// the text format is one line per entry plus a `continuum c0 c1` row and a
// `version=<string>` header. `#` starts a comment.
class GasLineCatalog {
 public:
  static GasLineCatalog parse(const std::string& text, const std::string& origin = "<memory>");
  static GasLineCatalog load(const std::string& path);
  static const GasLineCatalog& builtin();

  const std::vector<GasLine>& lines() const { return lines_; }
  const GasContinuum& continuum() const { return continuum_; }
  const std::string& version() const { return version_; }

 private:
  std::vector<GasLine> lines_;
  GasContinuum continuum_;
  std::string version_;
  void validate(const std::string& origin) const;
};

// Saturation water-vapor pressure over liquid water, Buck form, in hPa.
// Valid for t in [200, 350] K.
double saturation_vapor_pressure_hpa(double t_k);

// Partial pressure of water vapor, P_v = RH * svp(T), in hPa.
double water_vapor_pressure_hpa(const Environment& env);

// Water-vapor density rho = 216.7 * P_v / T in g/m^3.
double water_vapor_density_g_m3(const Environment& env);
double vapor_density_to_pressure_hpa(double rho_g_m3, double t_k);

// THz-band refractive index n = 1 + 77.6/T * (P_a + 4810 P_v / T) * 1e-6.
double refractive_index_thz(const Environment& env);
// Analytic dn/dT of the closed form above at fixed P_a, P_v.
double refractive_index_dT(const Environment& env);

// Specific gaseous attenuation in dB/km: Van Vleck-Weisskopf line sum scaled by
// vapor density and temperature power laws, plus the two-term empirical continuum.
double specific_gas_attenuation_db_km(const Environment& env, double f_ghz,
                                      const GasLineCatalog& catalog);

// Pointwise application of the scalar operation over a sorted frequency grid.
std::vector<double> attenuation_spectrum_db_km(const Environment& env,
                                               std::span<const double> f_ghz,
                                               const GasLineCatalog& catalog);

}  // namespace thzsim::atmosphere

#endif
