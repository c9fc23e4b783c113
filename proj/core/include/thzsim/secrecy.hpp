#ifndef THZSIM_SECRECY_HPP
#define THZSIM_SECRECY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "thzsim/numerics.hpp"

namespace thzsim::secrecy {

// Alice sits at (0, 0), Bob at (d, 0); the eavesdropper holds an aperture of
// the given area at (x, y) pointing at angle `pointing_rad` from the +x axis
// with a full field-of-view cone of `fov_rad`.
struct EveGeometry {
  double x = 0.0;
  double y = 0.0;
  double pointing_rad = 0.0;
  double fov_rad = 0.349;  // 20 degrees
  double rx_area_m2 = 1e-4;

  void validate() const;
};

// Medium coefficients exchanged in dB/km (converted to nepers/m internally)
// plus the two-parameter scattering phase function.
struct ScatterMedium {
  double k_ext_db_km = 0.0;  // total extinction
  double k_sca_db_km = 0.0;  // scattering-only part, <= k_ext
  double phase_g = 0.9;      // asymmetry factor, (-1, 1)
  double phase_f = 0.5;      // second-moment weight, >= 0

  void validate() const;
};

enum class NlosMode { as_printed, physical };
enum class MiVariant { as_printed, corrected };

// Portion [l_a, l_b] of the beam segment [0, d] visible inside Eve's cone.
// Evaluated through the angle u = atan((l - x)/y), which keeps the formulas
// finite for any pointing; an empty view collapses to l_a == l_b.
std::pair<double, double> integration_bounds(const EveGeometry& eve, double d);

// p(mu) = (1-g^2)/4pi [ (1+g^2-2 g mu)^{-3/2} + f (3 mu^2 - 1)/(2 (1+g^2)^{3/2}) ],
// normalized to 1 over the sphere for any (g, f).
double phase_function(double mu, double g, double f);

// Single-scatter channel gain: quadrature of Omega(l) p(mu) k exp(-k_ext (l + r2))
// over the visible beam portion. as_printed uses k = k_ext in the prefactor,
// physical uses k = k_sca. The integral runs in the u variable, which absorbs
// the 1/r2^2 peak near the closest approach; aperture projections that face
// away clamp to zero.
double nlos_gain(const EveGeometry& eve, const ScatterMedium& medium, double d, NlosMode mode,
                 const numerics::QuadratureConfig& quad = {});

struct PointingResult {
  double gain = 0.0;
  double pointing_rad = 0.0;
};

// Best pointing for a fixed position: coarse scan of the angular interval
// subtending the beam segment followed by golden-section refinement.
PointingResult optimize_pointing(const EveGeometry& eve, const ScatterMedium& medium, double d,
                                 NlosMode mode, const numerics::QuadratureConfig& quad = {});

// Mutual information of the on-off Poisson photon channel in bits per slot:
//   q (ls+lb) log(ls+lb) + [lb | (1-q) lb] log(lb) - (q ls + lb) log(q ls + lb)
// The corrected variant carries the (1-q) weight so that zero signal gives
// exactly zero information; as_printed evaluates the form without it.
double mutual_information_bits(double duty, double lambda_s, double lambda_b, MiVariant variant);

struct SecrecyPointScenario {
  double lambda_l = 0.0;      // Bob's mean detected photoelectrons per slot
  double lambda_n = 0.0;      // Eve's
  double lambda_b = 0.0;      // background counts per slot, common
  double duty = 0.5;
  double slot_rate_hz = 1e10; // 1/tau
  MiVariant variant = MiVariant::corrected;
};

// [I(X;Y) - I(X;Z)]^+ converted to Gbps via the slot rate.
double secrecy_capacity_gbps(const SecrecyPointScenario& s);

struct MapGrid {
  double x_min = 0.0, x_max = 1000.0;
  int nx = 100;
  double y_min = 1.0, y_max = 200.0;
  int ny = 50;

  void validate() const;
};

struct MapScenario {
  double distance_m = 1000.0;
  double g_los = 0.0;             // Bob's LoS gain, precomputed
  ScatterMedium medium;
  double eve_fov_rad = 0.349;
  double eve_rx_area_m2 = 1e-4;
  double eve_counts_scale = 1.0;  // Eve's detector efficiency relative to Bob's
  double counts_per_gain = 0.0;   // lambda = counts_per_gain * G
  double lambda_b = 0.0;
  double duty = 0.5;
  double slot_rate_hz = 1e10;
  MiVariant mi_variant = MiVariant::corrected;
  NlosMode nlos_mode = NlosMode::as_printed;
  numerics::QuadratureConfig quad;
};

struct MapCell {
  double x = 0.0, y = 0.0;
  double cs_gbps = 0.0;
  double g_nlos = 0.0;
  double pointing_rad = 0.0;
  bool ok = true;
};

struct SecrecyMapResult {
  MapGrid grid;
  std::vector<MapCell> cells;  // row-major, index = iy * nx + ix
  double msc_gbps = 0.0;       // maximum secrecy capacity over the map
  int insecure_cells = 0;      // cells with zero capacity
  double insecure_fraction = 0.0;
  int error_cells = 0;
};

// Per-cell pointing optimization and capacity evaluation; cells fan out over
// threads (0 = hardware concurrency) with deterministic, position-indexed
// output. Numerical failures annotate the cell, they never abort the map.
SecrecyMapResult secrecy_map(const MapScenario& scenario, const MapGrid& grid, int threads = 0);

struct OutageScenario {
  double mean_g_los = 0.0;
  double counts_per_gain = 0.0;
  double lambda_n = 0.0;
  double lambda_b = 0.0;
  double duty = 0.5;
  double slot_rate_hz = 1e10;
  MiVariant variant = MiVariant::corrected;
};

// Probability that the instantaneous secrecy capacity under log-normal gain
// fading falls below the target rate. The threshold gain solves C_s(G) = R by
// bisection; the mean log-gain sits at -sigma_r2/2 so the mean gain is
// preserved under fading.
double outage_probability(double target_rate_gbps, const OutageScenario& s, double sigma_r2);

// Monte-Carlo estimate evaluating the capacity on sampled gains directly.
double outage_probability_mc(double target_rate_gbps, const OutageScenario& s, double sigma_r2,
                             std::uint64_t seed, std::size_t n);

}  // namespace thzsim::secrecy

#endif
