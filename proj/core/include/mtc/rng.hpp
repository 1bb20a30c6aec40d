#ifndef MTC_RNG_HPP
#define MTC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace mtc::rng {

/// Stream identity for counter-based draws. Distinct
/// (master_seed, stream_id, trial_index) triples give independent
/// draws regardless of how trials are partitioned across workers.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based generator: stateless per (seed, trial, slot).
class Counter {
 public:
  Counter(SeedSpec seed, std::uint64_t trial_index)
      : key_(splitmix64(splitmix64(seed.master_seed) ^
                        splitmix64(seed.stream_id + 0x6a09e667f3bcc909ULL)) ^
             splitmix64(trial_index + 0xbb67ae8584caa73bULL)) {}

  std::uint64_t bits(std::uint64_t slot) const {
    return splitmix64(key_ + slot * 0x2545f4914f6cdd1dULL);
  }

  /// Uniform on the open interval (0, 1).
  double uniform(std::uint64_t slot) const {
    return (static_cast<double>(bits(slot) >> 11) + 0.5) * 0x1p-53;
  }

  /// Standard normal via Box-Muller; consumes slots 2k and 2k+1 of a
  /// dedicated pair index.
  double normal(std::uint64_t pair) const {
    const double u1 = uniform(2 * pair);
    const double u2 = uniform(2 * pair + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::uint64_t key_;
};

}  // namespace mtc::rng

#endif
