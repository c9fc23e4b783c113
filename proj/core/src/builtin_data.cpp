// Built-in copies of the shipped data tables. The same content lives under
// core/data/ for inspection and external use; a unit test keeps both in sync.

#include "thzsim/atmosphere.hpp"
#include "thzsim/dielectrics.hpp"
#include "thzsim/hydrometeors.hpp"

namespace thzsim {

const char* const kBuiltinGasLines = R"(# Water-vapor line catalog for the THz band.
#
# Model evaluated by the atmosphere module:
#   alpha(f) [dB/km] = sum_i S_i * rho_v * (300/T)^t_exp_i * F(f; f_i, df_i)
#                      + (c0 * Pv * Pa + c1 * Pv^2) * f^2
#   F(f; f_i, df) = (f/f_i)^2 * [ df/((f_i-f)^2+df^2) + df/((f_i+f)^2+df^2) ]
#   df_i = halfwidth_i * (Pa / 1013.25)^p_exp_i
# with rho_v in g/m^3, Pv and Pa in hPa, f in GHz.
#
# Relative humidity converts to vapor pressure with the Buck saturation
# formula over liquid water, constant set (compiled into the library):
#   svp(T) = 6.1121 * exp(17.502 * Tc / (240.97 + Tc)) hPa, Tc in Celsius.
#
# The nine dominant water lines below 1.2 THz are carried. Intensities and
# widths are calibrated artifact values: relative line strengths follow
# published line compilations, and the continuum pair (c0, c1) plus the line
# scale were fit once so that total 1-km path loss at 300 GHz, 0 C, 1013 hPa
# lands at 143 dB (RH 30%) rising to about 145 dB (RH 90%), and so that the
# 620 GHz window keeps a plausible floor at high humidity. Catalog-dependent;
# swap the file to use a different line set.
#
# columns: center_GHz intensity halfwidth_GHz p_exp t_exp
version=thzsim-h2o-v1
22.23508   0.076   2.85  0.69  2.14
183.31009  10.9    2.93  0.64  0.67
325.15292  11.4    3.05  0.68  1.54
380.19737  127.0   3.18  0.54  1.05
448.00108  79.3    2.38  0.57  1.40
556.93599  2600.0  1.26  0.62  0.16
620.70081  8.0     2.00  0.60  2.39
752.03323  1300.0  2.20  0.57  0.40
987.92676  1500.0  3.00  0.56  0.21
continuum 4.6515e-9 1.1056e-7
)";

const char* const kBuiltinDielectrics = R"(# Dielectric parameter table for the shipped media models.
#
# water: double-Debye eps(f) = eps_inf + (eps_s - eps_1)/(1 - i f/fp)
#                                      + (eps_1 - eps_inf)/(1 - i f/fs)
#   eps_s = eps_static_a + eps_static_b*(theta-1), theta = 300/T
#   eps_1 = eps_one_ratio * eps_s
#   fp = fp_a + fp_b*(theta-1) + fp_c*(theta-1)^2 GHz, fs = fs_ratio * fp
# ice: eps' = real_a + real_b*(T-273.15); eps'' = loss_a/f + loss_b*f
# dry snow: eps' = 1 + dry_p1*rho + dry_p3*rho^3 for rho <= poly_max_density,
#   continuity-scaled Looyenga mixture toward ice above it; eps'' is the ice
#   loss scaled by ice volume fraction rho/ice_density.
# wet snow: dry host plus increment
#   wet_a*W^wet_a_exp + wet_b*W^wet_b_exp/(1 - i f/wet_f0_ghz)
#                     + wet_c*W^wet_b_exp/(1 - i f/wet_f1_ghz), W in percent.
#   The wet_f0 branch is the published 3-37 GHz fit; the wet_f1 branch keeps
#   the increment lossy at THz frequencies (the liquid's second relaxation),
#   with wet_c set against the measured 200 GHz snow-attenuation anchor.
#   Knowingly extrapolated far above the 37 GHz calibration ceiling.
version=thzsim-diel-v1
water eps_static_a 77.66
water eps_static_b 103.3
water eps_one_ratio 0.0671
water eps_inf 3.52
water fp_a 20.20
water fp_b -146.0
water fp_c 316.0
water fs_ratio 39.8
ice real_a 3.1884
ice real_b 0.00091
ice loss_a 0.0026
ice loss_b 1.1e-5
snow dry_p1 1.5995
snow dry_p3 1.861
snow ice_density 0.917
snow poly_max_density 0.4
snow wet_a 0.02
snow wet_a_exp 1.015
snow wet_b 0.073
snow wet_b_exp 1.31
snow wet_f0_ghz 9.07
snow wet_c 0.017
snow wet_f1_ghz 350.0
)";

const char* const kBuiltinItuRain = R"(# Frequency-interpolated coefficients for the rain power law alpha = k R^a.
# Values follow the shape of published horizontal-polarization fits; k is
# interpolated log-log in frequency, a log-linearly. Range 1-1000 GHz.
# columns: f_GHz k a
version=thzsim-rain-ka-v1
1     0.0000259 0.9691
2     0.0000847 1.0664
4     0.0001071 1.6009
6     0.0007056 1.5900
8     0.004115  1.3905
10    0.01217   1.2571
12    0.02386   1.1825
15    0.04481   1.1233
20    0.09164   1.0586
25    0.1571    0.9991
30    0.2403    0.9485
35    0.3374    0.9047
40    0.4431    0.8673
45    0.5521    0.8355
50    0.6600    0.8084
60    0.8606    0.7656
70    1.0315    0.7345
80    1.1704    0.7115
90    1.2807    0.6944
100   1.3671    0.6815
120   1.4866    0.6640
150   1.5823    0.6494
200   1.6378    0.6382
300   1.6286    0.6296
400   1.5860    0.6262
500   1.5418    0.6253
600   1.5013    0.6262
700   1.4654    0.6284
800   1.4335    0.6315
1000  1.3797    0.6396
)";

namespace atmosphere {
const GasLineCatalog& GasLineCatalog::builtin() {
  static const GasLineCatalog cat = parse(kBuiltinGasLines, "<builtin gas catalog>");
  return cat;
}
}  // namespace atmosphere

namespace dielectrics {
const DielectricTable& DielectricTable::builtin() {
  static const DielectricTable table = parse(kBuiltinDielectrics, "<builtin dielectrics>");
  return table;
}
}  // namespace dielectrics

namespace hydro {
const ItuRainTable& ItuRainTable::builtin() {
  static const ItuRainTable table = parse(kBuiltinItuRain, "<builtin rain coefficients>");
  return table;
}
}  // namespace hydro

}  // namespace thzsim
