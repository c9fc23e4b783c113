#include "thzsim/link.hpp"

#include <cmath>
#include <limits>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"
#include "thzsim/numerics.hpp"

namespace thzsim::link {

void LinkGeometry::validate() const {
  detail::require(distance_m > 0.0, "LinkGeometry: distance must be positive");
  detail::require(polarization_efficiency >= 0.0 && polarization_efficiency <= 1.0,
                  "LinkGeometry: polarization efficiency must be in [0, 1]");
  detail::require(divergence_rad > 0.0, "LinkGeometry: divergence must be positive");
  detail::require(rx_area_m2 > 0.0, "LinkGeometry: receiving area must be positive");
}

void DetectorModel::validate() const {
  detail::require(efficiency >= 0.0 && efficiency <= 1.0, "DetectorModel: efficiency in [0, 1]");
  detail::require(integration_time_s > 0.0, "DetectorModel: integration time must be positive");
  detail::require(background_rate >= 0.0, "DetectorModel: background rate must be nonnegative");
}

double free_space_path_loss_db(double f_ghz, double distance_m) {
  const double lambda = constants::wavelength_m(f_ghz);
  return 20.0 * std::log10(4.0 * constants::pi * distance_m / lambda);
}

double friis_received_power_dbm(double p_in_dbm, const LinkGeometry& geom, double f_ghz,
                                double alpha_e_db_km) {
  geom.validate();
  if (geom.polarization_efficiency == 0.0) return -std::numeric_limits<double>::infinity();
  const double pattern = geom.pattern_tx * geom.pattern_rx * geom.polarization_efficiency;
  return p_in_dbm + geom.tx_gain_db + geom.rx_gain_db - free_space_path_loss_db(f_ghz, geom.distance_m) +
         10.0 * std::log10(pattern) - alpha_e_db_km * geom.distance_m / 1000.0;
}

LosGain los_gain(const LinkGeometry& geom, double alpha_atm_db_km) {
  geom.validate();
  const double alpha_np_m = constants::db_per_km_to_neper_per_m(alpha_atm_db_km);
  LosGain g;
  g.atmospheric = std::exp(-alpha_np_m * geom.distance_m);
  g.divergence = 4.0 * geom.rx_area_m2 /
                 (constants::pi * geom.distance_m * geom.distance_m * geom.divergence_rad *
                  geom.divergence_rad);
  g.total = g.atmospheric * g.divergence;
  return g;
}

double photon_energy_j(double f_ghz) { return constants::planck_j_s * f_ghz * 1e9; }

double photon_rate_per_slot(const DetectorModel& det, double gain, double p_tx_w, double f_ghz) {
  det.validate();
  detail::require(gain >= 0.0 && p_tx_w >= 0.0, "photon_rate: gain and power must be nonnegative");
  return det.integration_time_s * det.efficiency * gain * p_tx_w / photon_energy_j(f_ghz);
}

double ber_ask(double snr_linear) {
  detail::require(snr_linear >= 0.0, "ber_ask: snr must be nonnegative");
  return numerics::q_function(std::sqrt(2.0 * snr_linear));
}

double ber_mqam(double snr_linear, int m_order) {
  detail::require(snr_linear >= 0.0, "ber_mqam: snr must be nonnegative");
  const double root = std::sqrt(static_cast<double>(m_order));
  detail::require_arg(m_order >= 4 && root == std::floor(root),
                      "ber_mqam: order must be a square (4, 16, 64, ...)");
  return 4.0 / root * numerics::q_function(std::sqrt(3.0 * snr_linear / (m_order - 1)));
}

double duty_averaged_ber(double ber_blocked, double ber_clear, double blocked_fraction) {
  detail::require(blocked_fraction >= 0.0 && blocked_fraction <= 1.0,
                  "duty_averaged_ber: fraction must be in [0, 1]");
  return blocked_fraction * ber_blocked + (1.0 - blocked_fraction) * ber_clear;
}

double snr_threshold_for_ber(double target_ber, Modulation mod) {
  detail::require(target_ber > 0.0 && target_ber < 0.5, "snr_threshold: target in (0, 0.5)");
  auto ber = [&](double snr) {
    return (mod == Modulation::ask) ? ber_ask(snr) : ber_mqam(snr, 16);
  };
  double hi = 1.0;
  while (ber(hi) > target_ber) hi *= 2.0;
  return numerics::bisect([&](double s) { return ber(s) - target_ber; }, 0.0, hi, 1e-12);
}

}  // namespace thzsim::link
