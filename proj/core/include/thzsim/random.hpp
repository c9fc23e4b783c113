#ifndef THZSIM_RANDOM_HPP
#define THZSIM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace thzsim::rng {

// Deterministic sampling stream. The engine is a standardized mt19937_64 and all
// distribution transforms are implemented here, so a fixed seed yields the same
// sequence on every platform and standard library. Callers own the stream; there
// is no global generator.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on (0, 1).
  double uniform();
  // Standard normal via Box-Muller (one cached spare).
  double normal();
  // Gamma(shape, scale=1), Marsaglia-Tsang squeeze.
  double gamma(double shape);
  double exponential();
  double lognormal(double mu, double sigma);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace thzsim::rng

#endif
