#ifndef MTC_GEOPOWER_HPP
#define MTC_GEOPOWER_HPP

#include "mtc/channel.hpp"
#include "mtc/stabledist.hpp"

namespace mtc::geopower {

/// Euler-Mascheroni constant and G_gamma = exp(gamma).
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kGGamma = 1.78107241799019798523;

/// Geometric power and G-SNR of one (system, delta) operating point.
/// For system B only the upper bound on the G-SNR is defined and the
/// report is flagged accordingly.
struct GsnrReport {
  double s0_noise;      // geometric noise power, s
  double signal_range;  // X_max - X_min, s
  double gsnr;          // dimensionless
  double gsnr_db;       // 10 log10(gsnr)
  bool is_upper_bound;  // true for system B
};

/// Geometric power S0(N) = c G^(1/a-1) (1 + b^2 tan^2(pi a/2))^(1/2a);
/// c G (1 + b^2) at alpha = 1/2. alpha = 1 with beta != 0 is
/// unsupported and raises std::invalid_argument.
double geo_power(const stabledist::StableParams& p);

GsnrReport gsnr(const channel::NoiseModel& noise, double delta);
GsnrReport gsnr(const channel::ChannelSpec& spec, double delta);

/// Inverse of the closed-form G-SNR in delta (linear gsnr, not dB).
double delta_for_gsnr(const channel::NoiseModel& noise, double target_gsnr);
double delta_for_gsnr(const channel::ChannelSpec& spec, double target_gsnr);

/// Scale that puts S(0, c, 1/2, beta) system-C noise at the target
/// G-SNR for a given delta (the sweep direction used by the constant
/// G-SNR experiment).
double scale_for_gsnr_c(double delta, double beta, double target_gsnr);

}  // namespace mtc::geopower

#endif
