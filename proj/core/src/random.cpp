#include "thzsim/random.hpp"

#include <cmath>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"

namespace thzsim::rng {

double Stream::uniform() {
  // 53-bit mantissa in (0,1); never returns exactly 0 or 1.
  const std::uint64_t r = engine_();
  return (static_cast<double>(r >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double Stream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * constants::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double Stream::gamma(double shape) {
  detail::require(shape > 0.0, "gamma: shape must be positive");
  if (shape < 1.0) {
    const double u = uniform();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Stream::exponential() { return -std::log(uniform()); }

double Stream::lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

}  // namespace thzsim::rng
