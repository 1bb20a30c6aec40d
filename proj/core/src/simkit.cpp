#include "mtc/simkit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace mtc::simkit {
namespace {

using channel::ChannelSpec;
using channel::System;
using stabledist::StableParams;

// Fixed-size accumulation blocks keep floating-point reductions
// independent of the worker partitioning.
constexpr std::uint64_t kBlock = 1 << 16;

template <class BlockFn>
void run_blocks(std::uint64_t n_blocks, BlockFn&& fn) {
  const unsigned workers = worker_count();
  if (workers <= 1 || n_blocks <= 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::uint64_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t b = next.fetch_add(1); b < n_blocks;
           b = next.fetch_add(1))
        fn(b);
    });
  }
  for (auto& t : pool) t.join();
}

double levy_cdf0(double x, double c) {
  return stabledist::levy_cdf(x, StableParams::levy(0.0, c));
}

}  // namespace

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("MTC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

BerEstimate mc_ber(const ChannelSpec& spec, double delta,
                   const detector::ThresholdRule& rule, std::uint64_t n,
                   SeedSpec seed) {
  if (n == 0) throw std::invalid_argument("mc_ber: trial count must be positive");
  const std::uint64_t n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> errs(n_blocks, 0);
  run_blocks(n_blocks, [&](std::uint64_t b) {
    const std::uint64_t end = std::min(n, (b + 1) * kBlock);
    std::uint64_t e = 0;
    for (std::uint64_t i = b * kBlock; i < end; ++i) {
      rng::Counter ctr(seed, i);
      const int bit = ctr.uniform(8) < 0.5 ? 0 : 1;
      const double input = bit == 0 ? rule.input0() : rule.input1();
      const double y = channel::draw_output(spec, input, ctr, 0);
      if (detector::detect(rule, y) != bit) ++e;
    }
    errs[b] = e;
  });
  std::uint64_t errors = 0;
  for (auto e : errs) errors += e;
  const double ber = static_cast<double>(errors) / static_cast<double>(n);
  const double hw = 1.96 * std::sqrt(ber * (1.0 - ber) / static_cast<double>(n));
  return {errors, n, ber, hw, seed.master_seed};
}

double mc_geo_power(const StableParams& p, std::uint64_t n, SeedSpec seed) {
  if (n == 0)
    throw std::invalid_argument("mc_geo_power: sample count must be positive");
  const std::uint64_t n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> sums(n_blocks, 0.0);
  run_blocks(n_blocks, [&](std::uint64_t b) {
    const std::uint64_t end = std::min(n, (b + 1) * kBlock);
    double s = 0.0;
    for (std::uint64_t i = b * kBlock; i < end; ++i) {
      rng::Counter ctr(seed, i);
      const double x = stabledist::sample_one(p, ctr, 0);
      s += std::log(std::fabs(x));
    }
    sums[b] = s;
  });
  double total = 0.0;
  for (double s : sums) total += s;  // fixed order
  return std::exp(total / static_cast<double>(n));
}

KsResult ks_check(std::vector<double> samples,
                  const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_check: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    d = std::max(d, std::fabs(F - static_cast<double>(i) / n));
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - F));
  }
  const double crit = 1.63 / std::sqrt(n);
  return {d, crit, d < crit};
}

double symbol_duration(const ChannelSpec& spec, double delta, double p_clean) {
  if (!(p_clean > 0.0 && p_clean < 1.0))
    throw std::domain_error("symbol_duration: p_clean must lie in (0, 1)");
  if (!(delta > 0.0))
    throw std::invalid_argument("symbol_duration: delta must be positive");

  // Pr{T_last <= T} under the worst-case transmitted bit.
  auto arrival_cdf = [&](double T) {
    switch (spec.system) {
      case System::A:
        return levy_cdf0(T - delta, spec.d * spec.d / (2.0 * spec.D));
      case System::B: {
        const double c = spec.d * spec.d / (2.0 * spec.D);
        return levy_cdf0(T, c) * levy_cdf0(T - delta, c);
      }
      case System::C: {
        const double ca = spec.d * spec.d / (2.0 * spec.D_a);
        const double cb = spec.d * spec.d / (2.0 * spec.D_b);
        const double bit_pos = levy_cdf0(T, ca) * levy_cdf0(T - delta, cb);
        const double bit_neg = levy_cdf0(T - delta, ca) * levy_cdf0(T, cb);
        return std::min(bit_pos, bit_neg);
      }
    }
    return 0.0;
  };

  double lo = delta;
  double hi = std::max(delta, 1.0);
  while (arrival_cdf(hi) < p_clean) {
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw std::runtime_error("symbol_duration: bracket expansion failed");
  }
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (arrival_cdf(mid) < p_clean)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace mtc::simkit
