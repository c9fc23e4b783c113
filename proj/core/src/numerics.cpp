#include "thzsim/numerics.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"

namespace thzsim::numerics {

QuadratureResult integrate_simpson(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureConfig& cfg) {
  QuadratureResult res;
  if (!(b > a)) {
    res.value = 0.0;
    return res;
  }

  int n = cfg.min_intervals;
  if (n % 2 != 0) ++n;

  double h = (b - a) / n;
  std::vector<double> fx(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) fx[static_cast<size_t>(i)] = f(a + i * h);

  auto simpson = [&](const std::vector<double>& v, double step) {
    double s = v.front() + v.back();
    for (size_t i = 1; i + 1 < v.size(); ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * v[i];
    return s * step / 3.0;
  };

  double prev = simpson(fx, h);
  while (n < cfg.max_intervals) {
    n *= 2;
    h = (b - a) / n;
    std::vector<double> next(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      if (i % 2 == 0)
        next[static_cast<size_t>(i)] = fx[static_cast<size_t>(i / 2)];
      else
        next[static_cast<size_t>(i)] = f(a + i * h);
    }
    fx = std::move(next);
    double cur = simpson(fx, h);
    double err = std::abs(cur - prev) / 15.0;
    double tol = cfg.abs_tol + cfg.rel_tol * std::abs(cur);
    if (err <= tol || (cur == 0.0 && prev == 0.0)) {
      res.value = cur;
      res.error_estimate = err;
      res.converged = true;
      res.intervals = n;
      return res;
    }
    prev = cur;
  }
  res.value = prev;
  res.error_estimate = std::abs(prev) * cfg.rel_tol * 16;  // best bound we can claim
  res.converged = false;
  res.intervals = n;
  return res;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
  QuadratureResult r = integrate_simpson(f, a, b, cfg);
  if (!r.converged) {
    std::ostringstream os;
    os << "quadrature did not converge: achieved error estimate " << r.error_estimate << " at "
       << r.intervals << " intervals";
    throw numerical_error(os.str());
  }
  return r.value;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

// erfc(z) for z >= 0: series below 2.5, modified-Lentz continued fraction above.
double erfc_own(double z) {
  if (z < 2.0) {
    // erf(z) = 2/sqrt(pi) sum (-1)^k z^{2k+1} / (k! (2k+1))
    double term = z;
    double sum = z;
    for (int k = 1; k < 200; ++k) {
      term *= -z * z / k;
      const double add = term / (2 * k + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 1.0 - 2.0 / std::sqrt(constants::pi) * sum;
  }
  // erfc(z) = exp(-z^2)/sqrt(pi) * 1/(z + (1/2)/(z + (2/2)/(z + (3/2)/(z + ...))))
  constexpr double tiny = 1e-300;
  double f = tiny, c = tiny, d = 0.0;
  for (int k = 0; k < 300; ++k) {
    const double a = (k == 0) ? 1.0 : k / 2.0;
    d = z + a * d;
    if (d == 0.0) d = tiny;
    c = z + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z * z) / std::sqrt(constants::pi) * f;
}

}  // namespace

double q_function_fallback(double x) {
  const double z = x / std::sqrt(2.0);
  if (z >= 0.0) return 0.5 * erfc_own(z);
  return 1.0 - 0.5 * erfc_own(-z);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

// Temme's series for K_mu, K_{mu+1} with |mu| <= 1/2, x <= 2.
void bessel_k_temme(double mu, double x, double& kmu, double& kmu1) {
  constexpr double eps = 1e-16;
  const double x2 = 0.5 * x;
  const double mu2 = mu * mu;

  double gampl, gammi, gam1, gam2;
  gampl = 1.0 / std::tgamma(1.0 + mu);
  gammi = 1.0 / std::tgamma(1.0 - mu);
  if (std::abs(mu) < 1e-8) {
    gam1 = -constants::euler_gamma;
  } else {
    gam1 = (gammi - gampl) / (2.0 * mu);
  }
  gam2 = 0.5 * (gammi + gampl);

  const double pimu = constants::pi * mu;
  const double fact = (std::abs(pimu) < eps) ? 1.0 : pimu / std::sin(pimu);
  const double d = -std::log(x2);
  const double e1 = mu * d;
  const double fact2 = (std::abs(e1) < eps) ? 1.0 : std::sinh(e1) / e1;

  double ff = fact * (gam1 * std::cosh(e1) + gam2 * fact2 * d);
  double sum = ff;
  const double e = std::exp(e1);
  double p = 0.5 * e / gampl;
  double q = 0.5 / (e * gammi);
  double c = 1.0;
  const double dd = x2 * x2;
  double sum1 = p;
  for (int i = 1; i <= 500; ++i) {
    ff = (i * ff + p + q) / (i * i - mu2);
    c *= dd / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - i * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * eps) break;
  }
  kmu = sum;
  kmu1 = sum1 * (2.0 / x);
}

// Steed's continued fraction (CF2) for x > 2.
void bessel_k_steed(double mu, double x, double& kmu, double& kmu1) {
  constexpr double eps = 1e-16;
  const double mu2 = mu * mu;

  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 10000; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h = a1 * h;
  kmu = std::sqrt(constants::pi / (2.0 * x)) * std::exp(-x) / s;
  kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

}  // namespace

double bessel_k(double nu, double x) {
  detail::require(x > 0.0, "bessel_k: argument must be positive");
  nu = std::abs(nu);  // K_{-nu} = K_{nu}

  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;  // in [-1/2, 1/2]

  double kmu, kmu1;
  if (x <= 2.0) {
    bessel_k_temme(mu, x, kmu, kmu1);
  } else {
    bessel_k_steed(mu, x, kmu, kmu1);
  }
  for (int i = 1; i <= nl; ++i) {
    const double knext = kmu + (2.0 * (mu + i) / x) * kmu1;
    kmu = kmu1;
    kmu1 = knext;
  }
  return kmu;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
              int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  detail::require_arg(flo * fhi < 0.0, "bisect: endpoints must bracket a root");
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
    if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                  int max_iter) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace thzsim::numerics
