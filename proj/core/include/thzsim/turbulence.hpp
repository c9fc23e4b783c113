#ifndef THZSIM_TURBULENCE_HPP
#define THZSIM_TURBULENCE_HPP

#include <cstdint>
#include <variant>
#include <vector>

namespace thzsim::turbulence {

struct TurbulenceState {
  double cn2 = 0.0;           // m^-2/3
  double inner_scale_m = 0.01;
  double outer_scale_m = 100.0;

  void validate() const;
};

enum class Strength { weak, moderate, strong };

// Classification thresholds: weak below 1e-17, strong above 1e-13.
Strength classify(double cn2);

// Structure function D(L): C^2 L^{2/3} in the inertial range, C^2 l0^{-4/3} L^2
// below the inner scale; continuous at L = l0. Applies to temperature (ct2) and
// velocity (cv2) alike. The outer scale bounds the inertial range and is
// validated against the inner scale.
double temperature_structure_k2(double ct2, double l0_m, double outer_scale_m,
                                double separation_m);

// Cn^2 = (dn/dT)^2 CT^2.
double cn2_from_ct2(double dn_dT, double ct2);

// Altitude profile:
// Cn2(h) = 0.005 (v/27)^2 (1e-5 h)^10 exp(-h/1000) + 2.7e-6 exp(-h/1500) + A exp(-h/100).
double cn2_profile(double h_m, double wind_m_s, double a_hat);

// Rytov variance 1.23 Cn2 k^{7/6} L^{11/6}.
double rytov_variance(double cn2, double f_ghz, double path_m);

// Log-amplitude variance 23.17 Cn2 k^{7/6} L^{11/6}.
double log_amplitude_variance(double cn2, double f_ghz, double path_m);

struct ScintillationAttenuation {
  double attenuation_db = 0.0;
  double rytov_variance = 0.0;
  bool weak_regime = true;  // false when sigma_R^2 >= 1; informational, not an error
};

// alpha = 2 sqrt(sigma_chi^2) over the path, in dB.
ScintillationAttenuation scintillation_attenuation_rytov(double cn2, double f_ghz, double path_m);

// Aperture-averaged form alpha = 10 log10|1 - sqrt(sigma_I^2(D))|, reported as a
// loss magnitude; +inf at sigma_I^2 = 1.
double scintillation_attenuation_andrews_db(double sigma_i2);

// Fading distributions for the normalized received intensity (unit mean).
struct LogNormalFading {
  double sigma_l2 = 0.0;  // log-intensity variance; mean log fixed at -sigma_l2/2
};
struct GammaGammaFading {
  double alpha = 0.0;
  double beta = 0.0;
};
struct KFading {
  double alpha = 0.0;
};
struct NegExpFading {};

using FadingDistribution = std::variant<LogNormalFading, GammaGammaFading, KFading, NegExpFading>;

double fading_pdf(const FadingDistribution& dist, double intensity);

// Deterministic sampler; a fixed seed reproduces the sequence exactly.
std::vector<double> sample_fading(const FadingDistribution& dist, std::uint64_t seed, std::size_t n);

enum class Wave { plane, spherical };

// Gamma-gamma (alpha, beta) from the Rytov variance, Andrews-style closed forms
// for plane and spherical waves.
GammaGammaFading gamma_gamma_from_rytov(double rytov_var, Wave wave);

}  // namespace thzsim::turbulence

#endif
