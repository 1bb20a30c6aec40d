#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "mtc/channel.hpp"
#include "mtc/detector.hpp"
#include "mtc/geopower.hpp"
#include "mtc/simkit.hpp"
#include "mtc/stabledist.hpp"

using namespace mtc;
using channel::ChannelSpec;
using stabledist::StableParams;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value)
      setenv("MTC_THREADS", value, 1);
    else
      unsetenv("MTC_THREADS");
  }
  ~EnvGuard() { unsetenv("MTC_THREADS"); }
};

}  // namespace

TEST_CASE("worker_count respects MTC_THREADS") {
  {
    EnvGuard g("1");
    CHECK(simkit::worker_count() == 1);
  }
  {
    EnvGuard g(nullptr);
    CHECK(simkit::worker_count() >= 1);
  }
}

TEST_CASE("mc_ber determinism across worker counts") {
  const ChannelSpec spec = ChannelSpec::make_b(20.0, 150.0);
  const auto rule = detector::compute_threshold(spec, 25.0);
  simkit::BerEstimate a{}, b{};
  {
    EnvGuard g("1");
    a = simkit::mc_ber(spec, 25.0, rule, 200'000, {99, 0});
  }
  {
    EnvGuard g("7");
    b = simkit::mc_ber(spec, 25.0, rule, 200'000, {99, 0});
  }
  CHECK(a.errors == b.errors);
  CHECK(a.ber == b.ber);
  // Different seed or stream changes the draw.
  const auto c = simkit::mc_ber(spec, 25.0, rule, 200'000, {99, 1});
  CHECK(a.errors != c.errors);
}

TEST_CASE("mc_ber tracks the analytic BER") {
  for (auto spec : {ChannelSpec::make_a(20.0, 150.0),
                    ChannelSpec::make_b(20.0, 150.0),
                    ChannelSpec::make_c(20.0, 930.0, 150.0)}) {
    const double delta = 50.0;
    const auto rule = detector::compute_threshold(spec, delta);
    const double p = detector::ber_analytic(spec, delta);
    const auto est = simkit::mc_ber(spec, delta, rule, 400'000, {7, 11});
    const double sigma = std::sqrt(p * (1.0 - p) / 400'000.0);
    CHECK(std::fabs(est.ber - p) < 4.0 * sigma);
    CHECK(est.trials == 400'000);
    CHECK(est.ci95_half_width ==
          doctest::Approx(1.96 * std::sqrt(est.ber * (1.0 - est.ber) / 400'000.0))
              .epsilon(1e-12));
  }
}

TEST_CASE("mc_geo_power determinism and accuracy") {
  const StableParams p = StableParams::half(2.0, 0.5);
  double a, b;
  {
    EnvGuard g("1");
    a = simkit::mc_geo_power(p, 500'000, {5, 2});
  }
  {
    EnvGuard g("5");
    b = simkit::mc_geo_power(p, 500'000, {5, 2});
  }
  CHECK(a == b);
  CHECK(std::fabs(a - geopower::geo_power(p)) / geopower::geo_power(p) < 0.02);
}

TEST_CASE("ks_check") {
  // Uniform samples against the uniform CDF pass; a biased CDF fails.
  std::vector<double> u(20'000);
  for (std::size_t i = 0; i < u.size(); ++i)
    u[i] = rng::Counter({3, 3}, i).uniform(0);
  auto uniform_cdf = [](double x) { return x < 0 ? 0.0 : (x > 1 ? 1.0 : x); };
  CHECK(simkit::ks_check(u, uniform_cdf).pass);
  auto skewed_cdf = [](double x) {
    return x < 0 ? 0.0 : (x > 1 ? 1.0 : x * x);
  };
  CHECK(!simkit::ks_check(u, skewed_cdf).pass);
  CHECK_THROWS(simkit::ks_check({}, uniform_cdf));
}

TEST_CASE("symbol duration properties") {
  const ChannelSpec sa = ChannelSpec::make_a(20.0, 150.0);
  const ChannelSpec sb = ChannelSpec::make_b(20.0, 150.0);
  const ChannelSpec sc = ChannelSpec::make_c(20.0, 930.0, 150.0);
  const StableParams levy_a = StableParams::levy(0.0, 4.0 / 3.0);

  for (double delta : {1.0, 25.0, 100.0}) {
    const double ta = simkit::symbol_duration(sa, delta, 0.99);
    const double tb = simkit::symbol_duration(sb, delta, 0.99);
    const double tc = simkit::symbol_duration(sc, delta, 0.99);
    // Defining residual through the arrival CDF.
    CHECK(std::fabs(stabledist::levy_cdf(ta - delta, levy_a) - 0.99) < 1e-10);
    // The synchronized system needs the least guard time, and every
    // guard time dwarfs the modulation offset.
    CHECK(ta < tb);
    CHECK(ta < tc);
    CHECK(ta > 50.0 * delta);
    // Lower clean-arrival target, shorter symbol.
    CHECK(simkit::symbol_duration(sa, delta, 0.5) < ta);
  }
  CHECK_THROWS(simkit::symbol_duration(sa, 25.0, 1.0));
  CHECK_THROWS(simkit::symbol_duration(sa, 0.0, 0.99));
}
