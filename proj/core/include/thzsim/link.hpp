#ifndef THZSIM_LINK_HPP
#define THZSIM_LINK_HPP

namespace thzsim::link {

struct LinkGeometry {
  double distance_m = 0.0;
  double tx_gain_db = 0.0;
  double rx_gain_db = 0.0;
  double pattern_tx = 1.0;  // normalized intensity pattern factor
  double pattern_rx = 1.0;
  double polarization_efficiency = 1.0;  // in [0, 1]
  double divergence_rad = 0.02;          // transmitter full divergence angle
  double rx_area_m2 = 1e-4;

  void validate() const;
};

struct DetectorModel {
  double efficiency = 1.0;          // in [0, 1]
  double integration_time_s = 1e-10;
  double background_rate = 0.0;     // counts per slot
  double noise_floor_dbm = -60.0;

  void validate() const;
};

// Friis budget in dB terms:
// P_out = P_in + G_t + G_r + 20 log10(lambda/4 pi d) + 10 log10(Ft Fr eps_p) - alpha_e * d_km.
// Returns -inf when the polarization coupling is exactly zero.
double friis_received_power_dbm(double p_in_dbm, const LinkGeometry& geom, double f_ghz,
                                double alpha_e_db_km);

double free_space_path_loss_db(double f_ghz, double distance_m);

struct LosGain {
  double total = 0.0;        // G_A * G_D
  double atmospheric = 0.0;  // exp(-alpha_atm d)
  double divergence = 0.0;   // 4 A / (pi d^2 alpha_A^2)
};

// Line-of-sight channel gain 4 A exp(-alpha d) / (pi d^2 alpha_A^2). The
// attenuation argument crosses the module unit boundary here: dB/km in,
// nepers/m inside.
LosGain los_gain(const LinkGeometry& geom, double alpha_atm_db_km);

double photon_energy_j(double f_ghz);

// Mean detected photoelectrons per slot: tau * eta * G * P / E_p.
double photon_rate_per_slot(const DetectorModel& det, double gain, double p_tx_w, double f_ghz);

// Q(sqrt(2 SNR)).
double ber_ask(double snr_linear);

// 4/sqrt(M) Q(sqrt(3 SNR/(M-1))) for square M-QAM.
double ber_mqam(double snr_linear, int m_order);

// Convex blend f * blocked + (1-f) * clear for intermittent beam blockage.
double duty_averaged_ber(double ber_blocked, double ber_clear, double blocked_fraction);

enum class Modulation { ask, qam16 };

// Smallest linear SNR whose BER falls below the target.
double snr_threshold_for_ber(double target_ber, Modulation mod);

}  // namespace thzsim::link

#endif
