#ifndef THZSIM_HYDROMETEORS_HPP
#define THZSIM_HYDROMETEORS_HPP

#include <string>
#include <variant>
#include <vector>

#include "thzsim/dielectrics.hpp"
#include "thzsim/numerics.hpp"

namespace thzsim::hydro {

// Rain spectra are densities over drop diameter D in mm; snow spectra are
// densities over particle radius in mm (melted-equivalent radius, except the
// Scott variant whose native variable is the actual flake radius).

struct Exponential {
  double n0 = 0.0;      // m^-3 mm^-1
  double lambda = 0.0;  // mm^-1
};

struct LogNormal {
  double n_t = 0.0;      // m^-3
  double sigma_g = 1.0;  // standard geometric deviation (> 1)
  double d_bar = 1.0;    // geometric mean diameter, mm
};

struct Gamma {
  double n0 = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
};

struct NormalizedGamma {
  double n_w = 0.0;
  double mu = 0.0;
  double d_m = 1.0;  // mass-weighted mean diameter, mm
};

enum class SnowVariant { marshall_palmer, scott, gunn_marshall, sekhon_srivastava };

struct SnowExponential {
  SnowVariant variant = SnowVariant::marshall_palmer;
  double rate_mm_hr = 0.0;  // LWE (equivalent rainfall) rate
  double n0 = 0.0;          // m^-3 mm^-1
  double a = 0.0;           // mm^-1
  // The Scott form is written for the actual flake size; using it against the
  // melted-radius spectra requires the mass-conservation size conversion at
  // the configured bulk density.
  bool needs_size_conversion = false;
};

using DropSizeDistribution =
    std::variant<Exponential, LogNormal, Gamma, NormalizedGamma, SnowExponential>;

// Marshall-Palmer rain: N0 = 8000 m^-3 mm^-1, Lambda = 4.1 R^-0.21 mm^-1.
DropSizeDistribution marshall_palmer(double rate_mm_hr);

// Negative-exponential snow spectra, N0 and A parameterized by the LWE rate.
DropSizeDistribution snow_distribution(SnowVariant variant, double rate_mm_hr);
SnowVariant snow_variant_from_name(const std::string& name);

// Exponential rain spectra fitted during a typhoon campaign, Lambda = 4 R^-0.21.
// Preset index selects N0 in {1850, 1680, 1000, 620} for rates {6.8, 7.6, 15.3, 30.6}.
DropSizeDistribution typhoon_preset(int index);

// Gamma spectra for melting hydrometeors (hail, sleet); exposed as presets only.
DropSizeDistribution thawing_preset(const std::string& name, double rate_mm_hr);

// Number density at the distribution's native size variable, m^-3 mm^-1.
double dsd_density(const DropSizeDistribution& dsd, double size_mm);

struct WeatherAttenuation {
  double total = 0.0;       // dB/km
  double absorption = 0.0;  // dB/km
  double scattering = 0.0;  // dB/km
};

struct SnowMicrophysics {
  double density_g_cm3 = 0.1;  // bulk flake density, used for melted<->actual conversion
};

// Actual flake radius for a melted-equivalent radius at the given bulk density
// (mass conservation against liquid water at 1 g/cm^3).
double melted_to_actual_radius_mm(double r_melted_mm, double snow_density_g_cm3);
double actual_to_melted_radius_mm(double r_actual_mm, double snow_density_g_cm3);

// Specific attenuation by integrating Mie cross sections over the size
// spectrum: alpha[dB/km] = 4.343e3 * integral N(s) C(s) ds with C in m^2 and
// N in m^-3 mm^-1. Rain spectra integrate over drop diameter with spheres of
// that diameter; snow spectra integrate over melted radius with spheres at
// the melted radius, except the Scott variant whose cross sections are
// evaluated at the actual flake radius via the density conversion.
// d_max_mm bounds the integration variable.
WeatherAttenuation specific_attenuation_mie(const DropSizeDistribution& dsd,
                                            const dielectrics::ComplexPermittivity& medium,
                                            double f_ghz, double d_max_mm,
                                            const numerics::QuadratureConfig& quad = {},
                                            const SnowMicrophysics& snow = {});

// Frequency-interpolated power-law rain model alpha = k R^a; coefficients from
// a versioned table covering 1-1000 GHz.
class ItuRainTable {
 public:
  static ItuRainTable parse(const std::string& text, const std::string& origin = "<memory>");
  static ItuRainTable load(const std::string& path);
  static const ItuRainTable& builtin();

  struct Row {
    double f_ghz, k, a;
  };
  const std::vector<Row>& rows() const { return rows_; }
  const std::string& version() const { return version_; }
  // log-log interpolation of k, log-linear of a
  void coefficients(double f_ghz, double& k, double& a) const;

 private:
  std::vector<Row> rows_;
  std::string version_;
};

double rain_attenuation_itu_db_km(double f_ghz, double rate_mm_hr,
                                  const ItuRainTable& table = ItuRainTable::builtin());

// Dry-snow closed form alpha = 0.00349 R^1.6 / lambda^4 + 0.00224 R / lambda,
// wavelength in centimeters.
double snow_attenuation_gunn_east_db_km(double f_ghz, double rate_mm_hr);

// Generic alpha = a R^b with caller-supplied coefficients.
double snow_attenuation_power_law_db_km(double a, double b, double rate_mm_hr);

}  // namespace thzsim::hydro

#endif
