#include "mtc/geopower.hpp"

#include <cmath>
#include <stdexcept>

namespace mtc::geopower {
namespace {

using channel::NoiseModel;
using channel::System;

double signal_range_factor(System system) {
  // X_max - X_min per delta: {0, delta} for A/B, {-delta, delta} for C.
  return system == System::C ? 2.0 : 1.0;
}

double noise_s0(const NoiseModel& noise) {
  if (noise.system == System::B) {
    // Eq.-(47)-style bound: geometric power of the unfolded noise.
    return noise.params.c * kGGamma;
  }
  return geo_power(noise.params);
}

}  // namespace

double geo_power(const stabledist::StableParams& p) {
  if (p.alpha == 1.0 && p.beta != 0.0)
    throw std::invalid_argument("geo_power: alpha = 1 requires beta = 0");
  const double t = std::tan(0.5 * M_PI * p.alpha);
  const double skew = p.beta == 0.0 ? 1.0 : 1.0 + p.beta * p.beta * t * t;
  return p.c * std::pow(kGGamma, 1.0 / p.alpha - 1.0) *
         std::pow(skew, 0.5 / p.alpha);
}

GsnrReport gsnr(const NoiseModel& noise, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("gsnr: delta must be positive");
  const double s0 = noise_s0(noise);
  const double range = signal_range_factor(noise.system) * delta;
  const double g = (range / s0) * (range / s0) / (2.0 * kGGamma);
  return {s0, range, g, 10.0 * std::log10(g), noise.system == System::B};
}

GsnrReport gsnr(const channel::ChannelSpec& spec, double delta) {
  return gsnr(channel::derive_noise(spec), delta);
}

double delta_for_gsnr(const NoiseModel& noise, double target_gsnr) {
  if (!(target_gsnr > 0.0))
    throw std::invalid_argument("delta_for_gsnr: target must be positive");
  const double s0 = noise_s0(noise);
  return s0 * std::sqrt(2.0 * kGGamma * target_gsnr) /
         signal_range_factor(noise.system);
}

double delta_for_gsnr(const channel::ChannelSpec& spec, double target_gsnr) {
  return delta_for_gsnr(channel::derive_noise(spec), target_gsnr);
}

double scale_for_gsnr_c(double delta, double beta, double target_gsnr) {
  if (!(delta > 0.0 && target_gsnr > 0.0))
    throw std::invalid_argument("scale_for_gsnr_c: positive arguments required");
  // gsnr = (2 delta / (c G (1+b^2)))^2 / (2G), solved for c.
  return 2.0 * delta /
         (kGGamma * (1.0 + beta * beta) * std::sqrt(2.0 * kGGamma * target_gsnr));
}

}  // namespace mtc::geopower
