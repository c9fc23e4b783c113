#ifndef THZSIM_NUMERICS_HPP
#define THZSIM_NUMERICS_HPP

#include <cstdint>
#include <functional>
#include <string_view>

namespace thzsim::numerics {

struct QuadratureConfig {
  double rel_tol = 1e-4;
  double abs_tol = 0.0;
  int min_intervals = 16;
  int max_intervals = 1 << 18;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  int intervals = 0;
};

// Composite Simpson with interval doubling until two refinement levels agree
// within tolerance. Previous evaluations are reused at each doubling.
QuadratureResult integrate_simpson(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureConfig& cfg);

// Throwing wrapper: raises numerical_error with the achieved estimate on non-convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg);

// Gaussian tail probability Q(x) = P{N(0,1) > x}, via erfc.
double q_function(double x);
// Self-contained fallback without the math-library erfc: Taylor series of erf
// for small arguments, Lentz continued fraction for the tail. Agrees with the
// primary path to better than 1e-12.
double q_function_fallback(double x);
// Standard normal CDF.
double normal_cdf(double x);

// Modified Bessel function of the second kind K_nu(x), real order nu, x > 0.
// Temme's series for x <= 2, Steed's continued fraction for larger arguments,
// upward recurrence in the order.
double bessel_k(double nu, double x);

// Root of f on [lo, hi] (f(lo), f(hi) of opposite sign) by bisection.
double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
              int max_iter = 200);

// Location of the maximum of a unimodal f on [lo, hi] by golden-section search.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                  int max_iter = 100);

// FNV-1a 64-bit hash, used to fingerprint scenario files in output headers.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace thzsim::numerics

#endif
