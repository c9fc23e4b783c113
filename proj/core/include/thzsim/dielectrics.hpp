#ifndef THZSIM_DIELECTRICS_HPP
#define THZSIM_DIELECTRICS_HPP

#include <complex>
#include <string>

namespace thzsim::dielectrics {

// Sign convention: time dependence such that absorbing media have a positive
// imaginary part; imag_part >= 0 throughout.
struct ComplexPermittivity {
  double real_part = 1.0;
  double imag_part = 0.0;

  std::complex<double> value() const { return {real_part, imag_part}; }
};

// Complex refractive index on the branch with real(m) >= 1, imag(m) >= 0.
std::complex<double> refractive_index(const ComplexPermittivity& eps);

// Versioned parameter table for the shipped media models. Mirrors the gas
// catalog text format: `<medium> <key> <value>` rows, `#` comments,
// `version=<string>` header.
class DielectricTable {
 public:
  static DielectricTable parse(const std::string& text, const std::string& origin = "<memory>");
  static DielectricTable load(const std::string& path);
  static const DielectricTable& builtin();

  const std::string& version() const { return version_; }

  // liquid water, double-Debye
  double water_eps_static_a = 77.66;
  double water_eps_static_b = 103.3;
  double water_eps_one_ratio = 0.0671;
  double water_eps_inf = 3.52;
  double water_fp_a = 20.20;   // principal relaxation frequency, GHz, quadratic in (theta-1)
  double water_fp_b = -146.0;
  double water_fp_c = 316.0;
  double water_fs_ratio = 39.8;

  // ice
  double ice_real_a = 3.1884;
  double ice_real_b = 0.00091;  // per degree C
  double ice_loss_a = 0.0026;   // eps'' = a/f + b*f, f in GHz
  double ice_loss_b = 1.1e-5;

  // dry snow
  double snow_dry_p1 = 1.5995;
  double snow_dry_p3 = 1.861;
  double snow_ice_density = 0.917;
  double snow_poly_max_density = 0.4;

  // wet snow modified-Debye increment (wetness in percent inside the model)
  double snow_wet_a = 0.02;
  double snow_wet_a_exp = 1.015;
  double snow_wet_b = 0.073;
  double snow_wet_b_exp = 1.31;
  double snow_wet_f0_ghz = 9.07;
  double snow_wet_c = 0.017;
  double snow_wet_f1_ghz = 350.0;

 private:
  std::string version_;
};

// Double-Debye liquid water. f in (0, 1200] GHz, t in [253, 333] K.
ComplexPermittivity permittivity_water(double f_ghz, double t_k,
                                       const DielectricTable& table = DielectricTable::builtin());

// Pure ice: weakly frequency-dependent real part near 3.15, small empirical loss.
// t must not exceed the melting point.
ComplexPermittivity permittivity_ice(double f_ghz, double t_k,
                                     const DielectricTable& table = DielectricTable::builtin());

// Dry snow (ice-air mixture) at the given density in g/cm^3. The real part
// follows the density polynomial up to its published validity ceiling and a
// continuity-scaled Looyenga mixture above it; loss is the ice loss scaled by
// ice volume fraction.
ComplexPermittivity permittivity_dry_snow(double density_g_cm3, double f_ghz, double t_k,
                                          const DielectricTable& table = DielectricTable::builtin());

// Wet snow: dry-snow host plus a modified-Debye liquid-water increment with two
// relaxation branches. The second branch keeps the increment lossy at THz
// frequencies, where the single-branch fit is far below its calibration range;
// constants live in the data table. wetness is a volume fraction in [0, 1),
// f >= 15 GHz (model validity floor).
ComplexPermittivity permittivity_wet_snow(double f_ghz, double t_k, double density_g_cm3,
                                          double wetness,
                                          const DielectricTable& table = DielectricTable::builtin());

}  // namespace thzsim::dielectrics

#endif
