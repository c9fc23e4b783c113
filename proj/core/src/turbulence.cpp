#include "thzsim/turbulence.hpp"

#include <cmath>
#include <limits>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/numerics.hpp"
#include "thzsim/random.hpp"

namespace thzsim::turbulence {

void TurbulenceState::validate() const {
  detail::require(cn2 > 0.0, "TurbulenceState: cn2 must be positive");
  detail::require(inner_scale_m > 0.0 && inner_scale_m < outer_scale_m,
                  "TurbulenceState: need 0 < l0 < L0");
}

Strength classify(double cn2) {
  if (cn2 < 1e-17) return Strength::weak;
  if (cn2 > 1e-13) return Strength::strong;
  return Strength::moderate;
}

double temperature_structure_k2(double ct2, double l0_m, double outer_scale_m,
                                double separation_m) {
  detail::require(separation_m >= 0.0, "temperature_structure: separation must be nonnegative");
  detail::require(l0_m > 0.0 && l0_m < outer_scale_m, "temperature_structure: need 0 < l0 < L0");
  if (separation_m <= l0_m)
    return ct2 * std::pow(l0_m, -4.0 / 3.0) * separation_m * separation_m;
  return ct2 * std::pow(separation_m, 2.0 / 3.0);
}

double cn2_from_ct2(double dn_dT, double ct2) { return dn_dT * dn_dT * ct2; }

double cn2_profile(double h_m, double wind_m_s, double a_hat) {
  detail::require(h_m >= 0.0, "cn2_profile: altitude must be nonnegative");
  const double v = wind_m_s / 27.0;
  return 0.005 * v * v * std::pow(1e-5 * h_m, 10.0) * std::exp(-h_m / 1000.0) +
         2.7e-6 * std::exp(-h_m / 1500.0) + a_hat * std::exp(-h_m / 100.0);
}

namespace {
double variance_power_law(double coefficient, double cn2, double f_ghz, double path_m) {
  detail::require(cn2 >= 0.0, "turbulence variance: cn2 must be nonnegative");
  detail::require(f_ghz > 0.0, "turbulence variance: frequency must be positive");
  detail::require(path_m >= 0.0, "turbulence variance: path must be nonnegative");
  if (path_m == 0.0 || cn2 == 0.0) return 0.0;
  const double k = constants::wavenumber_per_m(f_ghz);
  return coefficient * cn2 * std::pow(k, 7.0 / 6.0) * std::pow(path_m, 11.0 / 6.0);
}
}  // namespace

double rytov_variance(double cn2, double f_ghz, double path_m) {
  return variance_power_law(1.23, cn2, f_ghz, path_m);
}

double log_amplitude_variance(double cn2, double f_ghz, double path_m) {
  return variance_power_law(23.17, cn2, f_ghz, path_m);
}

ScintillationAttenuation scintillation_attenuation_rytov(double cn2, double f_ghz, double path_m) {
  ScintillationAttenuation out;
  out.rytov_variance = rytov_variance(cn2, f_ghz, path_m);
  out.weak_regime = out.rytov_variance < 1.0;
  out.attenuation_db = 2.0 * std::sqrt(log_amplitude_variance(cn2, f_ghz, path_m));
  return out;
}

double scintillation_attenuation_andrews_db(double sigma_i2) {
  detail::require(sigma_i2 >= 0.0, "scintillation_attenuation_andrews: index must be nonnegative");
  const double arg = std::abs(1.0 - std::sqrt(sigma_i2));
  if (arg == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(10.0 * std::log10(arg));
}

double fading_pdf(const FadingDistribution& dist, double intensity) {
  detail::require(intensity > 0.0, "fading_pdf: intensity must be positive");
  return std::visit(
      [intensity](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        const double i = intensity;
        if constexpr (std::is_same_v<T, LogNormalFading>) {
          detail::require(d.sigma_l2 > 0.0, "LogNormalFading: sigma_l2 must be positive");
          const double mu = -0.5 * d.sigma_l2;
          const double z = std::log(i) - mu;
          return 1.0 / (std::sqrt(2.0 * constants::pi * d.sigma_l2) * i) *
                 std::exp(-z * z / (2.0 * d.sigma_l2));
        } else if constexpr (std::is_same_v<T, GammaGammaFading>) {
          detail::require(d.alpha > 0.0 && d.beta > 0.0, "GammaGammaFading: parameters must be positive");
          const double ab = d.alpha * d.beta;
          const double half = 0.5 * (d.alpha + d.beta);
          const double logc = half * std::log(ab) + std::log(2.0) - std::lgamma(d.alpha) -
                              std::lgamma(d.beta) + (half - 1.0) * std::log(i);
          const double k = numerics::bessel_k(d.alpha - d.beta, 2.0 * std::sqrt(ab * i));
          return std::exp(logc) * k;
        } else if constexpr (std::is_same_v<T, KFading>) {
          detail::require(d.alpha > 0.0, "KFading: alpha must be positive");
          const double logc = 0.5 * (d.alpha + 1.0) * std::log(d.alpha) + std::log(2.0) -
                              std::lgamma(d.alpha) + 0.5 * (d.alpha - 1.0) * std::log(i);
          const double k = numerics::bessel_k(d.alpha - 1.0, 2.0 * std::sqrt(d.alpha * i));
          return std::exp(logc) * k;
        } else {
          return std::exp(-i);
        }
      },
      dist);
}

std::vector<double> sample_fading(const FadingDistribution& dist, std::uint64_t seed,
                                  std::size_t n) {
  detail::require_arg(n >= 1, "sample_fading: n must be >= 1");
  rng::Stream stream(seed);
  std::vector<double> out(n);
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, LogNormalFading>) {
          const double sigma = std::sqrt(d.sigma_l2);
          for (double& v : out) v = stream.lognormal(-0.5 * d.sigma_l2, sigma);
        } else if constexpr (std::is_same_v<T, GammaGammaFading>) {
          for (double& v : out)
            v = (stream.gamma(d.alpha) / d.alpha) * (stream.gamma(d.beta) / d.beta);
        } else if constexpr (std::is_same_v<T, KFading>) {
          // gamma-modulated exponential
          for (double& v : out) v = (stream.gamma(d.alpha) / d.alpha) * stream.exponential();
        } else {
          for (double& v : out) v = stream.exponential();
        }
      },
      dist);
  return out;
}

GammaGammaFading gamma_gamma_from_rytov(double rytov_var, Wave wave) {
  detail::require(rytov_var > 0.0, "gamma_gamma_from_rytov: rytov variance must be positive");
  const double s2 = (wave == Wave::plane) ? rytov_var : 0.4 * rytov_var;
  // sigma_R^{12/5} with s2 = sigma_R^2
  const double s125 = std::pow(s2, 6.0 / 5.0);
  const double num_a = 0.49 * s2;
  const double num_b = 0.51 * s2;
  const double den_a = std::pow(1.0 + ((wave == Wave::plane) ? 1.11 : 0.56) * s125, 7.0 / 6.0);
  const double den_b = std::pow(1.0 + 0.69 * s125, 5.0 / 6.0);
  GammaGammaFading gg;
  gg.alpha = 1.0 / (std::exp(num_a / den_a) - 1.0);
  gg.beta = 1.0 / (std::exp(num_b / den_b) - 1.0);
  return gg;
}

}  // namespace thzsim::turbulence
