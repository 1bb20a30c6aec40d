#ifndef MTC_DETECTOR_HPP
#define MTC_DETECTOR_HPP

#include "mtc/channel.hpp"
#include "mtc/stabledist.hpp"

namespace mtc::detector {

/// Binary ML decision rule. Hypothesis 0 is input 0 (systems A/B) or
/// -delta (system C); hypothesis 1 is input delta. The bracket is the
/// interval the zero crossing was proven to lie in.
struct ThresholdRule {
  channel::System system;
  double delta;
  double threshold;
  stabledist::QuantileBracket bracket;

  double input0() const {
    return system == channel::System::C ? -delta : 0.0;
  }
  double input1() const { return delta; }
};

/// Log likelihood ratio of hypothesis 0 over hypothesis 1 at an
/// observation. Positive favors hypothesis 0.
double llr(const channel::NoiseModel& noise, double delta, double y);

/// Locate the ML threshold by bisection inside the proven bracket:
/// A: (delta, delta + c/3]; B: lower end delta/2 with geometric
/// expansion upward; C: between the two conditional modes.
ThresholdRule compute_threshold(const channel::NoiseModel& noise, double delta);
ThresholdRule compute_threshold(const channel::ChannelSpec& spec, double delta);

/// 0 for hypothesis 0, 1 for hypothesis 1. Systems A/B decide 0 iff
/// y < threshold; system C decides 0 (input -delta) iff y <= threshold.
int detect(const ThresholdRule& rule, double y);

/// Analytic error probability of the ML rule under equiprobable bits.
double ber_analytic(const channel::NoiseModel& noise, double delta);
double ber_analytic(const channel::ChannelSpec& spec, double delta);

/// Mode of the standardized alpha = 1/2 stable density with skewness
/// beta (exposed for bracketing and diagnostics; 1/3 at beta = 1).
double standard_half_mode(double beta);

}  // namespace mtc::detector

#endif
