#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "thzsim/constants.hpp"
#include "thzsim/numerics.hpp"
#include "thzsim/secrecy.hpp"

using namespace thzsim;
using secrecy::EveGeometry;
using secrecy::MiVariant;
using secrecy::NlosMode;
using secrecy::ScatterMedium;

namespace {

EveGeometry eve_at(double x, double y, double pointing, double fov_deg = 20.0) {
  EveGeometry e;
  e.x = x;
  e.y = y;
  e.pointing_rad = pointing;
  e.fov_rad = fov_deg * constants::pi / 180.0;
  e.rx_area_m2 = 1e-4;
  return e;
}

// Independent ray-segment oracle: dense scan of the beam segment testing cone
// membership by wrapped angular distance.
std::pair<double, double> bounds_oracle(const EveGeometry& eve, double d, int n = 400000) {
  const double y = std::abs(eve.y);
  const double alpha = (eve.y < 0.0) ? -eve.pointing_rad : eve.pointing_rad;
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (int i = 0; i <= n; ++i) {
    const double l = d * i / n;
    const double gamma = std::atan2(-y, l - eve.x);
    double diff = std::remainder(gamma - alpha, 2.0 * constants::pi);
    if (std::abs(diff) <= eve.fov_rad / 2.0) {
      if (!any) lo = l;
      hi = l;
      any = true;
    }
  }
  if (!any) return {0.0, 0.0};
  return {lo, hi};
}

// Direct quadrature of the single-scatter integrand in the path variable.
double nlos_oracle(const EveGeometry& eve, const ScatterMedium& med, double d, NlosMode mode) {
  const double y = std::abs(eve.y);
  const double alpha = (eve.y < 0.0) ? -eve.pointing_rad : eve.pointing_rad;
  const auto [la, lb] = secrecy::integration_bounds(eve, d);
  if (!(la < lb)) return 0.0;
  const double k_ext = constants::db_per_km_to_neper_per_m(med.k_ext_db_km);
  const double k_pre = constants::db_per_km_to_neper_per_m(
      mode == NlosMode::as_printed ? med.k_ext_db_km : med.k_sca_db_km);
  numerics::QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  cfg.max_intervals = 1 << 22;
  return numerics::integrate(
      [&](double l) {
        const double r2 = std::hypot(eve.x - l, y);
        const double mu = (eve.x - l) / r2;
        const double cos_theta =
            ((l - eve.x) * std::cos(alpha) - y * std::sin(alpha)) / r2;
        if (cos_theta <= 0.0) return 0.0;
        const double omega = eve.rx_area_m2 * cos_theta / (r2 * r2);
        return omega * secrecy::phase_function(mu, med.phase_g, med.phase_f) * k_pre *
               std::exp(-k_ext * (l + r2));
      },
      la, lb, cfg);
}

}  // namespace

TEST_CASE("integration bounds: cone pointing away yields an empty region") {
  const auto [la, lb] = secrecy::integration_bounds(eve_at(200.0, 10.0, constants::pi / 2.0), 1000.0);
  CHECK(la == lb);
}

TEST_CASE("integration bounds: pointing straight down") {
  const auto [la, lb] = secrecy::integration_bounds(eve_at(200.0, 10.0, -constants::pi / 2.0), 1000.0);
  const double half = 10.0 * std::tan(10.0 * constants::pi / 180.0);
  CHECK(la == doctest::Approx(200.0 - half).epsilon(1e-9));
  CHECK(lb == doctest::Approx(200.0 + half).epsilon(1e-9));
}

TEST_CASE("integration bounds stay within the beam segment") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> xs(-300.0, 1300.0);
  std::uniform_real_distribution<double> ys(0.5, 400.0);
  std::uniform_real_distribution<double> as(-constants::pi, constants::pi);
  std::uniform_real_distribution<double> fov(1.0, 170.0);
  for (int i = 0; i < 2000; ++i) {
    const auto e = eve_at(xs(gen), ys(gen), as(gen), fov(gen));
    const auto [la, lb] = secrecy::integration_bounds(e, 1000.0);
    CHECK(la >= 0.0);
    CHECK(lb <= 1000.0);
    CHECK(la <= lb);
  }
}

TEST_CASE("integration bounds agree with the ray-segment oracle") {
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> xs(-100.0, 1100.0);
  std::uniform_real_distribution<double> ys(1.0, 300.0);
  std::uniform_real_distribution<double> as(-constants::pi, constants::pi);
  std::uniform_real_distribution<double> fov(2.0, 120.0);
  const double d = 1000.0;
  for (int i = 0; i < 60; ++i) {
    const auto e = eve_at(xs(gen), ys(gen), as(gen), fov(gen));
    const auto got = secrecy::integration_bounds(e, d);
    const auto want = bounds_oracle(e, d);
    const double tol = 2.0 * d / 400000.0 + 1e-9;
    CHECK(std::abs(got.first - want.first) <= tol);
    CHECK(std::abs(got.second - want.second) <= tol);
  }

  // a below-axis position mirrors the above-axis result
  const auto up = secrecy::integration_bounds(eve_at(350.0, 40.0, -2.0), d);
  const auto down = secrecy::integration_bounds(eve_at(350.0, -40.0, 2.0), d);
  CHECK(up.first == doctest::Approx(down.first).epsilon(1e-12));
  CHECK(up.second == doctest::Approx(down.second).epsilon(1e-12));
}

TEST_CASE("phase function: isotropic case and bounds") {
  for (double mu : {-1.0, -0.3, 0.0, 0.8, 1.0})
    CHECK(secrecy::phase_function(mu, 0.0, 0.0) ==
          doctest::Approx(1.0 / (4.0 * constants::pi)).epsilon(1e-14));
  CHECK_THROWS_AS(secrecy::phase_function(1.2, 0.5, 0.5), std::domain_error);
}

TEST_CASE("phase function integrates to one over the sphere") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> gs(-0.95, 0.95);
  std::uniform_real_distribution<double> fs(0.0, 1.5);
  numerics::QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  cfg.max_intervals = 1 << 20;
  for (int i = 0; i < 40; ++i) {
    const double g = gs(gen);
    const double f = fs(gen);
    const double integral =
        2.0 * constants::pi *
        numerics::integrate([&](double mu) { return secrecy::phase_function(mu, g, f); }, -1.0, 1.0,
                            cfg);
    CHECK(std::abs(integral - 1.0) < 1e-6);
  }
}

TEST_CASE("phase function forward peak") {
  CHECK(secrecy::phase_function(1.0, 0.9, 0.0) > 100.0 * secrecy::phase_function(-1.0, 0.9, 0.0));
}

TEST_CASE("nlos gain: empty bounds and zero-extinction limits") {
  ScatterMedium med{5.0, 2.0, 0.5, 0.5};
  CHECK(secrecy::nlos_gain(eve_at(200.0, 10.0, constants::pi / 2.0), med, 1000.0,
                           NlosMode::as_printed) == 0.0);

  // the printed form multiplies by the extinction coefficient
  ScatterMedium vacuum{0.0, 0.0, 0.5, 0.5};
  CHECK(secrecy::nlos_gain(eve_at(200.0, 10.0, -2.0), vacuum, 1000.0, NlosMode::as_printed) == 0.0);
}

TEST_CASE("nlos gain matches the direct path-variable oracle") {
  std::mt19937_64 gen(37);
  std::uniform_real_distribution<double> xs(50.0, 950.0);
  std::uniform_real_distribution<double> ys(1.0, 150.0);
  std::uniform_real_distribution<double> ks(0.5, 40.0);
  numerics::QuadratureConfig tight;
  tight.rel_tol = 1e-9;
  tight.max_intervals = 1 << 22;
  for (int i = 0; i < 25; ++i) {
    const double x = xs(gen), y = ys(gen);
    // point at a spot on the segment so the cone intersects it
    const double target = 0.5 * x;
    const double alpha = std::atan2(-y, target - x);
    const auto e = eve_at(x, y, alpha);
    ScatterMedium med{ks(gen), 0.0, 0.5, 0.5};
    med.k_sca_db_km = 0.4 * med.k_ext_db_km;
    for (auto mode : {NlosMode::as_printed, NlosMode::physical}) {
      const double got = secrecy::nlos_gain(e, med, 1000.0, mode, tight);
      const double want = nlos_oracle(e, med, 1000.0, mode);
      CHECK(got == doctest::Approx(want).epsilon(1e-6));
    }
  }
}

TEST_CASE("nlos gain self-converges under quadrature refinement") {
  const auto e = eve_at(300.0, 25.0, std::atan2(-25.0, -200.0));
  ScatterMedium med{12.0, 5.0, 0.5, 0.5};
  numerics::QuadratureConfig coarse;  // default 1e-4
  numerics::QuadratureConfig fine;
  fine.rel_tol = 1e-8;
  fine.max_intervals = 1 << 22;
  const double a = secrecy::nlos_gain(e, med, 1000.0, NlosMode::as_printed, coarse);
  const double b = secrecy::nlos_gain(e, med, 1000.0, NlosMode::as_printed, fine);
  CHECK(std::abs(a - b) <= 2e-4 * std::abs(b));
}

TEST_CASE("physical mode scales with the scattering coefficient") {
  const auto e = eve_at(300.0, 25.0, std::atan2(-25.0, -200.0));
  ScatterMedium med{12.0, 6.0, 0.5, 0.5};
  const double printed = secrecy::nlos_gain(e, med, 1000.0, NlosMode::as_printed);
  const double physical = secrecy::nlos_gain(e, med, 1000.0, NlosMode::physical);
  CHECK(physical == doctest::Approx(printed * 6.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("optimal pointing beats a fixed pointing and mirrors across the axis") {
  ScatterMedium med{10.0, 4.0, 0.5, 0.5};
  const auto up = eve_at(400.0, 30.0, 0.0);
  const auto best = secrecy::optimize_pointing(up, med, 1000.0, NlosMode::as_printed);
  CHECK(best.gain > 0.0);
  for (double a : {-3.0, -2.0, -1.5, -0.6}) {
    auto e = up;
    e.pointing_rad = a;
    CHECK(secrecy::nlos_gain(e, med, 1000.0, NlosMode::as_printed) <= best.gain * (1.0 + 1e-9));
  }

  auto down = up;
  down.y = -up.y;
  const auto best_down = secrecy::optimize_pointing(down, med, 1000.0, NlosMode::as_printed);
  CHECK(best_down.gain == doctest::Approx(best.gain).epsilon(1e-12));
  CHECK(best_down.pointing_rad == doctest::Approx(-best.pointing_rad).epsilon(1e-12));
}

TEST_CASE("mutual information: pinned example and limits") {
  CHECK(secrecy::mutual_information_bits(0.5, 2.0, 1.0, MiVariant::corrected) ==
        doctest::Approx(0.37744).epsilon(1e-4));
  // the background term vanishes at lambda_b = 1 so both variants agree here
  CHECK(secrecy::mutual_information_bits(0.5, 2.0, 1.0, MiVariant::as_printed) ==
        doctest::Approx(secrecy::mutual_information_bits(0.5, 2.0, 1.0, MiVariant::corrected))
            .epsilon(1e-12));

  CHECK(secrecy::mutual_information_bits(0.5, 0.0, 7.0, MiVariant::corrected) == 0.0);
  CHECK(secrecy::mutual_information_bits(0.0, 5.0, 7.0, MiVariant::corrected) == 0.0);
  CHECK(secrecy::mutual_information_bits(0.0, 5.0, 7.0, MiVariant::as_printed) == 0.0);
  // the printed form keeps a spurious background term when lambda_b != 1
  CHECK(secrecy::mutual_information_bits(0.5, 0.0, 7.0, MiVariant::as_printed) != 0.0);
}

TEST_CASE("corrected mutual information is nonnegative and increasing in the signal") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> qs(0.05, 0.95);
  std::uniform_real_distribution<double> bs(0.0, 30.0);
  for (int i = 0; i < 300; ++i) {
    const double q = qs(gen), b = bs(gen);
    double prev = -1e-15;
    for (double s = 0.0; s <= 64.0; s += 4.0) {
      const double mi = secrecy::mutual_information_bits(q, s, b, MiVariant::corrected);
      CHECK(mi >= prev - 1e-12);
      CHECK(mi >= -1e-12);
      prev = mi;
    }
  }
}

TEST_CASE("secrecy capacity positive part and monotonicity") {
  secrecy::SecrecyPointScenario s;
  s.lambda_b = 10.0;
  s.duty = 0.5;
  s.slot_rate_hz = 1e10;

  s.lambda_l = 5.0;
  s.lambda_n = 5.0;
  CHECK(secrecy::secrecy_capacity_gbps(s) == 0.0);

  s.lambda_n = 0.0;
  const double full = secrecy::secrecy_capacity_gbps(s);
  CHECK(full ==
        doctest::Approx(secrecy::mutual_information_bits(0.5, 5.0, 10.0, MiVariant::corrected) *
                        1e10 / 1e9));

  // nondecreasing in lambda_l, nonincreasing in lambda_n
  double prev = -1.0;
  for (double l = 0.0; l <= 50.0; l += 2.5) {
    s.lambda_l = l;
    s.lambda_n = 1.0;
    const double c = secrecy::secrecy_capacity_gbps(s);
    CHECK(c >= prev - 1e-12);
    prev = c;
  }
  s.lambda_l = 20.0;
  prev = 1e30;
  for (double n = 0.0; n <= 50.0; n += 2.5) {
    s.lambda_n = n;
    const double c = secrecy::secrecy_capacity_gbps(s);
    CHECK(c <= prev + 1e-12);
    prev = c;
  }
}

namespace {
secrecy::MapScenario small_map_scenario() {
  secrecy::MapScenario ms;
  ms.distance_m = 1000.0;
  ms.g_los = 3.0e-9;
  ms.medium = {12.0, 5.0, 0.5, 0.5};
  ms.counts_per_gain = 1.0e9;
  ms.lambda_b = 10.0;
  ms.duty = 0.5;
  ms.slot_rate_hz = 1e10;
  return ms;
}
}  // namespace

TEST_CASE("secrecy map basics: determinism across thread counts, zero-capacity rule") {
  secrecy::MapGrid grid;
  grid.x_min = 50.0;
  grid.x_max = 950.0;
  grid.nx = 24;
  grid.y_min = 1.0;
  grid.y_max = 80.0;
  grid.ny = 10;

  const auto ms = small_map_scenario();
  const auto seq = secrecy::secrecy_map(ms, grid, 1);
  const auto par = secrecy::secrecy_map(ms, grid, 4);
  REQUIRE(seq.cells.size() == par.cells.size());
  for (size_t i = 0; i < seq.cells.size(); ++i) {
    CHECK(seq.cells[i].cs_gbps == par.cells[i].cs_gbps);
    CHECK(seq.cells[i].g_nlos == par.cells[i].g_nlos);
  }
  CHECK(seq.error_cells == 0);

  const double lambda_l = ms.counts_per_gain * ms.g_los;
  int insecure = 0;
  for (const auto& c : seq.cells) {
    const double lambda_n = ms.counts_per_gain * c.g_nlos;
    if (lambda_n >= lambda_l) {
      CHECK(c.cs_gbps == 0.0);
      ++insecure;
    }
    if (c.cs_gbps == 0.0 && lambda_n < lambda_l) {
      // capacity can only vanish from the positive part, so the photon rates
      // must be degenerate at double precision here
      CHECK(lambda_n == doctest::Approx(lambda_l).epsilon(1e-12));
    }
  }
  CHECK(insecure == seq.insecure_cells);
  CHECK(seq.insecure_fraction == doctest::Approx(static_cast<double>(insecure) / 240.0));
}

TEST_CASE("secrecy map goes dark when the background dominates") {
  secrecy::MapGrid grid;
  grid.nx = 8;
  grid.ny = 4;
  grid.x_min = 100.0;
  grid.x_max = 900.0;
  grid.y_min = 1.0;
  grid.y_max = 50.0;
  auto ms = small_map_scenario();
  ms.lambda_b = 1e15;
  const auto res = secrecy::secrecy_map(ms, grid, 2);
  for (const auto& c : res.cells) CHECK(c.cs_gbps <= 1e-6);
}

TEST_CASE("map capacity mirrors across the beam axis") {
  const auto ms = small_map_scenario();
  for (double x : {150.0, 500.0, 820.0}) {
    for (double y : {2.0, 20.0, 70.0}) {
      EveGeometry e = eve_at(x, y, 0.0);
      const auto up = secrecy::optimize_pointing(e, ms.medium, ms.distance_m, ms.nlos_mode);
      e.y = -y;
      const auto down = secrecy::optimize_pointing(e, ms.medium, ms.distance_m, ms.nlos_mode);
      CHECK(up.gain == doctest::Approx(down.gain).epsilon(1e-12));
    }
  }
}

TEST_CASE("outage probability basics") {
  secrecy::OutageScenario os;
  os.mean_g_los = 3.0e-9;
  os.counts_per_gain = 1.0e9;
  os.lambda_n = 0.2;
  os.lambda_b = 10.0;
  os.duty = 0.5;
  os.slot_rate_hz = 1e10;

  CHECK(secrecy::outage_probability(0.0, os, 0.25) == 0.0);

  // degenerate fading approaches a step at the deterministic capacity
  secrecy::SecrecyPointScenario point;
  point.lambda_l = os.counts_per_gain * os.mean_g_los;
  point.lambda_n = os.lambda_n;
  point.lambda_b = os.lambda_b;
  point.duty = os.duty;
  point.slot_rate_hz = os.slot_rate_hz;
  const double c0 = secrecy::secrecy_capacity_gbps(point);
  CHECK(secrecy::outage_probability(0.5 * c0, os, 1e-8) < 1e-12);
  CHECK(secrecy::outage_probability(2.0 * c0, os, 1e-8) > 1.0 - 1e-12);

  // monotone nondecreasing in the target rate
  double prev = 0.0;
  for (double r = 0.1; r <= 4.0 * c0; r += 0.2 * c0) {
    const double p = secrecy::outage_probability(r, os, 0.3);
    CHECK(p >= prev - 1e-12);
    prev = p;
  }
}

TEST_CASE("outage closed form agrees with direct monte carlo") {
  secrecy::OutageScenario os;
  os.mean_g_los = 3.0e-9;
  os.counts_per_gain = 1.0e9;
  os.lambda_n = 0.2;
  os.lambda_b = 10.0;
  os.duty = 0.5;
  os.slot_rate_hz = 1e10;

  const double sigma_r2 = 0.4;
  const std::size_t n = 200000;
  for (double r : {2.0, 6.0, 10.0}) {
    const double closed = secrecy::outage_probability(r, os, sigma_r2);
    const double mc = secrecy::outage_probability_mc(r, os, sigma_r2, 31337, n);
    const double se = std::sqrt(std::max(closed * (1.0 - closed), 1e-12) / n);
    CHECK(std::abs(closed - mc) <= 3.0 * se + 1e-4);
  }
}

TEST_CASE("turbulence insecure region forms a contiguous band along the beam axis") {
  secrecy::MapGrid grid;
  grid.x_min = 25.0;
  grid.x_max = 975.0;
  grid.nx = 39;
  grid.y_min = 1.0;
  grid.y_max = 60.0;
  grid.ny = 14;

  auto ms = small_map_scenario();
  ms.medium = {25.0, 25.0, 0.5, 0.5};  // strong scattering medium
  ms.g_los = 1.0e-9;
  const auto res = secrecy::secrecy_map(ms, grid, 2);
  REQUIRE(res.insecure_cells > 0);

  // within each column, an insecure cell never sits above a secure one
  for (int ix = 0; ix < grid.nx; ++ix) {
    bool seen_secure = false;
    for (int iy = 0; iy < grid.ny; ++iy) {
      const auto& c = res.cells[static_cast<size_t>(iy) * grid.nx + ix];
      if (c.cs_gbps > 0.0) seen_secure = true;
      if (seen_secure) CHECK(c.cs_gbps > 0.0);
    }
  }
}
