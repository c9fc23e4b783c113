#ifndef THZSIM_MIE_HPP
#define THZSIM_MIE_HPP

#include <complex>
#include <vector>

namespace thzsim::mie {

struct MieInput {
  std::complex<double> m;  // complex refractive index, re >= 1, im >= 0
  double x = 0.0;          // size parameter 2*pi*r/lambda

  void validate() const;
};

struct MieEfficiencies {
  double q_ext = 0.0;
  double q_sca = 0.0;
  double q_abs = 0.0;
};

struct MieCoefficient {
  std::complex<double> a;
  std::complex<double> b;
};

// Series truncation rule: l_max = ceil(x + 4 x^{1/3} + 2) plus margin.
int truncation_order(double x);

// Effective series length used by the efficiency evaluation: the size-only
// rule extended past |m| x, where weakly absorbing spheres still hold narrow
// internal resonances.
int series_length(std::complex<double> m, double x);

// Mie coefficients a_l, b_l for l = 1..l_max. Logarithmic derivative by
// downward recurrence, Riccati-Bessel functions of the real argument upward.
std::vector<MieCoefficient> mie_coefficients(std::complex<double> m, double x, int l_max);

// Extinction/scattering/absorption efficiencies from the converged series:
//   q_sca = (2/x^2) sum (2l+1)(|a_l|^2 + |b_l|^2)
//   q_ext = (2/x^2) sum (2l+1) Re(a_l + b_l)
MieEfficiencies mie_efficiencies(std::complex<double> m, double x);

// Small-particle limit, valid for |m x| < 0.5:
//   q_sca = (8/3) x^4 |K|^2, q_abs = 4 x Im(K), K = (m^2-1)/(m^2+2).
MieEfficiencies rayleigh_efficiencies(std::complex<double> m, double x);

inline double cross_section_m2(double efficiency, double radius_m) {
  return efficiency * 3.14159265358979323846 * radius_m * radius_m;
}

}  // namespace thzsim::mie

#endif
