#ifndef THZSIM_CONSTANTS_HPP
#define THZSIM_CONSTANTS_HPP

#include <cmath>

namespace thzsim::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double speed_of_light_m_s = 299792458.0;
inline constexpr double planck_j_s = 6.62607015e-34;
inline constexpr double euler_gamma = 0.57721566490153286;

// 10/ln(10): dB per neper for power quantities.
inline constexpr double db_per_neper = 4.3429448190325176;

inline double wavelength_m(double f_ghz) { return speed_of_light_m_s / (f_ghz * 1e9); }
inline double wavenumber_per_m(double f_ghz) { return 2.0 * pi * f_ghz * 1e9 / speed_of_light_m_s; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

// Attenuation unit boundary: modules exchange dB/km, propagation factors use nepers/m.
inline double db_per_km_to_neper_per_m(double db_km) { return db_km / db_per_neper / 1000.0; }
inline double neper_per_m_to_db_per_km(double np_m) { return np_m * db_per_neper * 1000.0; }

}  // namespace thzsim::constants

#endif
