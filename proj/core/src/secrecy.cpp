#include "thzsim/secrecy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/turbulence.hpp"

namespace thzsim::secrecy {

namespace {

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * constants::pi);
  if (a <= -constants::pi) a += 2.0 * constants::pi;
  if (a > constants::pi) a -= 2.0 * constants::pi;
  return a;
}

struct UprightGeometry {
  double x, y, alpha, fov, area;
};

// Mirror below-axis positions into the upper half plane; the single-scatter
// geometry is reflection symmetric.
UprightGeometry upright(const EveGeometry& eve) {
  UprightGeometry g{eve.x, eve.y, wrap_angle(eve.pointing_rad), eve.fov_rad, eve.rx_area_m2};
  if (g.y < 0.0) {
    g.y = -g.y;
    g.alpha = wrap_angle(-g.alpha);
  }
  return g;
}

// Visible interval in the u variable, u = atan((l - x)/y). The cone maps to
// [alpha + pi/2 - fov/2, alpha + pi/2 + fov/2]; directions wrapping past the
// -x axis show up as the same interval shifted by 2 pi, and at most one shift
// can overlap the segment's u range since both spans stay below pi.
std::pair<double, double> bounds_u(const UprightGeometry& g, double d) {
  const double u0 = std::atan2(0.0 - g.x, g.y);
  const double ud = std::atan2(d - g.x, g.y);
  const double center = g.alpha + constants::pi / 2.0;
  for (double shift : {0.0, -2.0 * constants::pi, 2.0 * constants::pi}) {
    const double lo = std::max(center + shift - g.fov / 2.0, u0);
    const double hi = std::min(center + shift + g.fov / 2.0, ud);
    if (lo < hi) return {lo, hi};
  }
  return {0.0, 0.0};
}

}  // namespace

void EveGeometry::validate() const {
  detail::require(fov_rad > 0.0 && fov_rad < constants::pi, "EveGeometry: fov must be in (0, pi)");
  detail::require(rx_area_m2 > 0.0, "EveGeometry: receiving area must be positive");
  detail::require(y != 0.0, "EveGeometry: y must be nonzero (off the beam axis)");
}

void ScatterMedium::validate() const {
  detail::require(k_ext_db_km >= 0.0, "ScatterMedium: extinction must be nonnegative");
  detail::require(k_sca_db_km >= 0.0 && k_sca_db_km <= k_ext_db_km + 1e-12,
                  "ScatterMedium: need 0 <= k_sca <= k_ext");
  detail::require(phase_g > -1.0 && phase_g < 1.0, "ScatterMedium: g must be in (-1, 1)");
  detail::require(phase_f >= 0.0, "ScatterMedium: f must be nonnegative");
}

std::pair<double, double> integration_bounds(const EveGeometry& eve, double d) {
  eve.validate();
  detail::require(d > 0.0, "integration_bounds: distance must be positive");
  const UprightGeometry g = upright(eve);
  const auto [lo, hi] = bounds_u(g, d);
  if (!(lo < hi)) return {0.0, 0.0};
  const double la = std::clamp(g.x + g.y * std::tan(lo), 0.0, d);
  const double lb = std::clamp(g.x + g.y * std::tan(hi), 0.0, d);
  return {la, lb};
}

double phase_function(double mu, double g, double f) {
  detail::require(mu >= -1.0 && mu <= 1.0, "phase_function: mu must be in [-1, 1]");
  const double g2 = g * g;
  const double hg = std::pow(1.0 + g2 - 2.0 * g * mu, -1.5);
  const double second = f * (3.0 * mu * mu - 1.0) / (2.0 * std::pow(1.0 + g2, 1.5));
  return (1.0 - g2) / (4.0 * constants::pi) * (hg + second);
}

double nlos_gain(const EveGeometry& eve, const ScatterMedium& medium, double d, NlosMode mode,
                 const numerics::QuadratureConfig& quad) {
  eve.validate();
  medium.validate();
  detail::require(d > 0.0, "nlos_gain: distance must be positive");

  const UprightGeometry g = upright(eve);
  const auto [ua, ub] = bounds_u(g, d);
  if (!(ua < ub)) return 0.0;

  const double k_ext = constants::db_per_km_to_neper_per_m(medium.k_ext_db_km);
  const double k_pre =
      constants::db_per_km_to_neper_per_m(mode == NlosMode::as_printed ? medium.k_ext_db_km
                                                                       : medium.k_sca_db_km);
  if (k_pre == 0.0) return 0.0;

  // In u, the solid-angle factor A cos(theta)/r2^2 times dl reduces to
  // (A/y) sin(u - alpha) du with r2 = y sec(u) and mu = -sin(u); the
  // projection is cos of the angle between the pointing and the direction to
  // the scattering point, never negative inside the cone.
  auto integrand = [&](double u) -> double {
    const double proj = std::sin(u - g.alpha);
    if (proj <= 0.0) return 0.0;
    const double sin_u = std::sin(u);
    const double cos_u = std::cos(u);
    if (cos_u <= 0.0) return 0.0;
    const double path = g.x + g.y * (sin_u + 1.0) / cos_u;  // l + r2
    return (g.area / g.y) * proj * phase_function(-sin_u, medium.phase_g, medium.phase_f) * k_pre *
           std::exp(-k_ext * path);
  };

  return numerics::integrate(integrand, ua, ub, quad);
}

PointingResult optimize_pointing(const EveGeometry& eve, const ScatterMedium& medium, double d,
                                 NlosMode mode, const numerics::QuadratureConfig& quad) {
  eve.validate();
  const UprightGeometry g = upright(eve);

  // Angular interval subtending the beam segment from Eve's position.
  const double gamma0 = std::atan2(0.0 - g.x, g.y) - constants::pi / 2.0;
  const double gammad = std::atan2(d - g.x, g.y) - constants::pi / 2.0;

  auto gain_at = [&](double alpha) {
    EveGeometry e = eve;
    e.pointing_rad = (eve.y < 0.0) ? -alpha : alpha;
    return nlos_gain(e, medium, d, mode, quad);
  };

  constexpr int kCoarse = 33;
  double best_alpha = gamma0;
  double best_gain = -1.0;
  int best_i = 0;
  std::vector<double> gains(kCoarse);
  for (int i = 0; i < kCoarse; ++i) {
    const double a = gamma0 + (gammad - gamma0) * i / (kCoarse - 1);
    gains[static_cast<size_t>(i)] = gain_at(a);
    if (gains[static_cast<size_t>(i)] > best_gain) {
      best_gain = gains[static_cast<size_t>(i)];
      best_alpha = a;
      best_i = i;
    }
  }
  const double step = (gammad - gamma0) / (kCoarse - 1);
  const double lo = gamma0 + step * std::max(0, best_i - 1);
  const double hi = gamma0 + step * std::min(kCoarse - 1, best_i + 1);
  const double refined = numerics::golden_max(gain_at, lo, hi, 1e-4 * std::abs(step) + 1e-9);
  const double refined_gain = gain_at(refined);

  PointingResult res;
  if (refined_gain >= best_gain) {
    res.gain = refined_gain;
    res.pointing_rad = (eve.y < 0.0) ? -refined : refined;
  } else {
    res.gain = best_gain;
    res.pointing_rad = (eve.y < 0.0) ? -best_alpha : best_alpha;
  }
  return res;
}

namespace {
double xlog2x(double t) { return t > 0.0 ? t * std::log2(t) : 0.0; }
}  // namespace

double mutual_information_bits(double duty, double lambda_s, double lambda_b, MiVariant variant) {
  detail::require(duty >= 0.0 && duty <= 1.0, "mutual_information: duty must be in [0, 1]");
  detail::require(lambda_s >= 0.0 && lambda_b >= 0.0,
                  "mutual_information: rates must be nonnegative");
  double corrected;
  if (lambda_b > 0.0) {
    // The log(lambda_b) pieces cancel exactly, leaving a form that stays
    // accurate when the background dominates the signal.
    corrected = (duty * (lambda_s + lambda_b) * std::log1p(lambda_s / lambda_b) -
                 (duty * lambda_s + lambda_b) * std::log1p(duty * lambda_s / lambda_b)) /
                std::log(2.0);
  } else {
    corrected = duty * xlog2x(lambda_s) - xlog2x(duty * lambda_s);
  }
  if (variant == MiVariant::corrected) return corrected;
  return corrected + duty * xlog2x(lambda_b);
}

double secrecy_capacity_gbps(const SecrecyPointScenario& s) {
  detail::require(s.slot_rate_hz > 0.0, "secrecy_capacity: slot rate must be positive");
  const double iy = mutual_information_bits(s.duty, s.lambda_l, s.lambda_b, s.variant);
  const double iz = mutual_information_bits(s.duty, s.lambda_n, s.lambda_b, s.variant);
  return std::max(0.0, iy - iz) * s.slot_rate_hz / 1e9;
}

void MapGrid::validate() const {
  detail::require(nx >= 1 && ny >= 1, "MapGrid: need at least one cell per axis");
  detail::require(x_min <= x_max && y_min <= y_max, "MapGrid: degenerate ranges");
  detail::require(y_min > 0.0, "MapGrid: y_min must be positive (off the beam axis)");
}

SecrecyMapResult secrecy_map(const MapScenario& scenario, const MapGrid& grid, int threads) {
  grid.validate();
  scenario.medium.validate();
  detail::require(scenario.g_los >= 0.0 && scenario.counts_per_gain >= 0.0,
                  "secrecy_map: gains and count scale must be nonnegative");

  SecrecyMapResult result;
  result.grid = grid;
  result.cells.resize(static_cast<size_t>(grid.nx) * static_cast<size_t>(grid.ny));

  const double lambda_l = scenario.counts_per_gain * scenario.g_los;

  auto cell_x = [&](int ix) {
    return grid.nx == 1 ? grid.x_min : grid.x_min + (grid.x_max - grid.x_min) * ix / (grid.nx - 1);
  };
  auto cell_y = [&](int iy) {
    return grid.ny == 1 ? grid.y_min : grid.y_min + (grid.y_max - grid.y_min) * iy / (grid.ny - 1);
  };

  auto compute_cell = [&](int iy, int ix) {
    MapCell& cell = result.cells[static_cast<size_t>(iy) * grid.nx + ix];
    cell.x = cell_x(ix);
    cell.y = cell_y(iy);
    try {
      EveGeometry eve;
      eve.x = cell.x;
      eve.y = cell.y;
      eve.fov_rad = scenario.eve_fov_rad;
      eve.rx_area_m2 = scenario.eve_rx_area_m2;
      const PointingResult p = optimize_pointing(eve, scenario.medium, scenario.distance_m,
                                                 scenario.nlos_mode, scenario.quad);
      cell.g_nlos = p.gain;
      cell.pointing_rad = p.pointing_rad;

      SecrecyPointScenario point;
      point.lambda_l = lambda_l;
      point.lambda_n = scenario.counts_per_gain * scenario.eve_counts_scale * p.gain;
      point.lambda_b = scenario.lambda_b;
      point.duty = scenario.duty;
      point.slot_rate_hz = scenario.slot_rate_hz;
      point.variant = scenario.mi_variant;
      cell.cs_gbps = secrecy_capacity_gbps(point);
      cell.ok = true;
    } catch (const std::exception&) {
      cell.ok = false;
      cell.cs_gbps = 0.0;
    }
  };

  int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (n_threads < 1) n_threads = 1;
  n_threads = std::min<int>(n_threads, grid.ny);

  if (n_threads == 1) {
    for (int iy = 0; iy < grid.ny; ++iy)
      for (int ix = 0; ix < grid.nx; ++ix) compute_cell(iy, ix);
  } else {
    std::atomic<int> next_row{0};
    auto worker = [&]() {
      for (;;) {
        const int iy = next_row.fetch_add(1);
        if (iy >= grid.ny) return;
        for (int ix = 0; ix < grid.nx; ++ix) compute_cell(iy, ix);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const MapCell& c : result.cells) {
    if (!c.ok) {
      ++result.error_cells;
      continue;
    }
    result.msc_gbps = std::max(result.msc_gbps, c.cs_gbps);
    if (c.cs_gbps == 0.0) ++result.insecure_cells;
  }
  result.insecure_fraction =
      static_cast<double>(result.insecure_cells) / static_cast<double>(result.cells.size());
  return result;
}

namespace {

double capacity_at_gain(const OutageScenario& s, double g) {
  SecrecyPointScenario point;
  point.lambda_l = s.counts_per_gain * g;
  point.lambda_n = s.lambda_n;
  point.lambda_b = s.lambda_b;
  point.duty = s.duty;
  point.slot_rate_hz = s.slot_rate_hz;
  point.variant = s.variant;
  return secrecy_capacity_gbps(point);
}

// Threshold gain where the capacity first reaches the target rate; +inf when
// the rate is unreachable within the expansion budget.
double threshold_gain(const OutageScenario& s, double r_gbps) {
  double hi = std::max(s.mean_g_los, 1e-30);
  int expansions = 0;
  while (capacity_at_gain(s, hi) < r_gbps) {
    hi *= 4.0;
    if (++expansions > 600) return std::numeric_limits<double>::infinity();
  }
  return numerics::bisect([&](double g) { return capacity_at_gain(s, g) - r_gbps; }, 0.0, hi,
                          1e-12, 200);
}

}  // namespace

double outage_probability(double target_rate_gbps, const OutageScenario& s, double sigma_r2) {
  detail::require(target_rate_gbps >= 0.0, "outage_probability: rate must be nonnegative");
  detail::require(sigma_r2 > 0.0, "outage_probability: sigma_r2 must be positive");
  detail::require(s.mean_g_los > 0.0, "outage_probability: mean gain must be positive");
  if (target_rate_gbps == 0.0) return 0.0;  // capacity is almost surely >= 0

  const double g_star = threshold_gain(s, target_rate_gbps);
  if (!std::isfinite(g_star)) return 1.0;
  if (g_star <= 0.0) return 0.0;

  const double sigma = std::sqrt(sigma_r2);
  const double z = (std::log(g_star / s.mean_g_los) + 0.5 * sigma_r2) / sigma;
  return numerics::normal_cdf(z);
}

double outage_probability_mc(double target_rate_gbps, const OutageScenario& s, double sigma_r2,
                             std::uint64_t seed, std::size_t n) {
  detail::require(target_rate_gbps >= 0.0, "outage_probability_mc: rate must be nonnegative");
  detail::require(sigma_r2 > 0.0, "outage_probability_mc: sigma_r2 must be positive");
  if (target_rate_gbps == 0.0) return 0.0;

  const std::vector<double> fade =
      turbulence::sample_fading(turbulence::LogNormalFading{sigma_r2}, seed, n);
  std::size_t outages = 0;
  for (double f : fade)
    if (capacity_at_gain(s, s.mean_g_los * f) < target_rate_gbps) ++outages;
  return static_cast<double>(outages) / static_cast<double>(n);
}

}  // namespace thzsim::secrecy
