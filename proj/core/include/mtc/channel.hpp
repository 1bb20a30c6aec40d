#ifndef MTC_CHANNEL_HPP
#define MTC_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "mtc/rng.hpp"
#include "mtc/stabledist.hpp"

namespace mtc::channel {

enum class System { A, B, C };

/// Physical geometry of a molecular timing link. Distances in um,
/// diffusion coefficients in um^2/s; all derived times in seconds.
struct ChannelSpec {
  System system;
  double d;            // transmitter-receiver distance, um
  double D = 0.0;      // diffusion coefficient, systems A/B
  double D_a = 0.0;    // system C, particle a
  double D_b = 0.0;    // system C, particle b

  static ChannelSpec make_a(double d, double D);
  static ChannelSpec make_b(double d, double D);
  static ChannelSpec make_c(double d, double D_a, double D_b);
};

/// Noise law of a system: A -> Levy(0, c_A); B -> S(0, c_B, 1/2, 0);
/// C -> S(0, c_C, 1/2, beta_C) with |beta_C| < 1.
struct NoiseModel {
  stabledist::StableParams params;
  System system;
};

/// Map geometry to the additive-noise law:
///   c_A = d^2/(2D), c_B = 4 c_A,
///   c_C = d^2 (sqrt(D_a)+sqrt(D_b))^2 / (2 D_a D_b),
///   beta_C = (sqrt(D_a)-sqrt(D_b)) / (sqrt(D_a)+sqrt(D_b)).
NoiseModel derive_noise(const ChannelSpec& spec);

/// Conditional output density f(y | input). For system B the input and
/// the observation must be nonnegative; negative observations raise
/// std::domain_error. System C inputs are signed.
double cond_output_pdf(const ChannelSpec& spec, double input, double y);
double cond_output_pdf(const NoiseModel& noise, double input, double y);
double cond_output_log_pdf(const NoiseModel& noise, double input, double y);

/// Forward simulation of the three system equations; deterministic per
/// (seed, trial index).
std::vector<double> simulate_output(const ChannelSpec& spec, double input,
                                    std::size_t n, rng::SeedSpec seed);

/// One output draw for a single trial (shared with the Monte Carlo
/// engine; uses normal pairs pair_base and pair_base+1).
double draw_output(const ChannelSpec& spec, double input,
                   const rng::Counter& ctr, std::uint64_t pair_base);

}  // namespace mtc::channel

#endif
