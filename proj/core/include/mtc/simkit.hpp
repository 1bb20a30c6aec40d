#ifndef MTC_SIMKIT_HPP
#define MTC_SIMKIT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mtc/channel.hpp"
#include "mtc/detector.hpp"
#include "mtc/rng.hpp"

namespace mtc::simkit {

using rng::SeedSpec;

/// Monte Carlo BER point estimate with a binomial 95% interval.
struct BerEstimate {
  std::uint64_t errors;
  std::uint64_t trials;
  double ber;
  double ci95_half_width;
  std::uint64_t seed;
};

struct KsResult {
  double statistic;
  double threshold;  // critical value at the 1% level
  bool pass;
};

/// Number of worker threads: hardware concurrency, capped by the
/// MTC_THREADS environment variable. Results never depend on it.
unsigned worker_count();

/// Seeded Monte Carlo BER: equiprobable bits, channel simulation,
/// threshold detection. Deterministic per seed and independent of the
/// worker partitioning.
BerEstimate mc_ber(const channel::ChannelSpec& spec, double delta,
                   const detector::ThresholdRule& rule, std::uint64_t n,
                   SeedSpec seed);

/// Monte Carlo geometric power: exp of the sample mean of log|N|.
double mc_geo_power(const stabledist::StableParams& p, std::uint64_t n,
                    SeedSpec seed);

/// Two-sided Kolmogorov-Smirnov test at the 1% level against an
/// arbitrary CDF. Empty samples raise std::invalid_argument.
KsResult ks_check(std::vector<double> samples,
                  const std::function<double(double)>& cdf);

/// Smallest T with Pr{ all particles of one channel use arrive by T }
/// equal to p_clean, taken over the worst-case transmitted bit.
double symbol_duration(const channel::ChannelSpec& spec, double delta,
                       double p_clean);

}  // namespace mtc::simkit

#endif
