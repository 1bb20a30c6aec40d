#include <cmath>

#include "doctest.h"
#include "mtc/channel.hpp"
#include "mtc/detector.hpp"
#include "mtc/rng.hpp"
#include "mtc/stabledist.hpp"

using namespace mtc;
using channel::ChannelSpec;
using channel::NoiseModel;
using channel::System;
using stabledist::StableParams;

TEST_CASE("standardized mode") {
  CHECK(detector::standard_half_mode(1.0) == doctest::Approx(1.0 / 3.0));
  CHECK(detector::standard_half_mode(-1.0) == doctest::Approx(-1.0 / 3.0));
  CHECK(detector::standard_half_mode(0.0) == 0.0);
  const double m = detector::standard_half_mode(0.6);
  CHECK(m > 0.0);
  CHECK(m < 1.0 / 3.0);
  CHECK(detector::standard_half_mode(-0.6) == doctest::Approx(-m).epsilon(1e-9));
  // Mode really is a local maximum.
  const double f0 = stabledist::pdf_half_skew(m, 1.0, 0.6);
  CHECK(stabledist::pdf_half_skew(m + 1e-4, 1.0, 0.6) < f0);
  CHECK(stabledist::pdf_half_skew(m - 1e-4, 1.0, 0.6) < f0);
}

TEST_CASE("threshold A: bracket and reference value") {
  // c = 1, delta = 1 -> threshold about 1.137 inside (1, 4/3].
  const NoiseModel noise{StableParams::levy(0.0, 1.0), System::A};
  const auto rule = detector::compute_threshold(noise, 1.0);
  CHECK(rule.threshold > 1.0);
  CHECK(rule.threshold <= 1.0 + 1.0 / 3.0);
  // Root of the log-density crossing, cross-checked with an external
  // root finder to 1e-13.
  CHECK(rule.threshold == doctest::Approx(1.1391871467258514).epsilon(1e-10));
  CHECK(std::fabs(detector::llr(noise, 1.0, rule.threshold)) < 1e-9);
}

TEST_CASE("threshold brackets over random parameters") {
  rng::Counter ctr({2024, 1}, 0);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const double delta = 0.5 + 99.5 * ctr.uniform(3 * i);
    const double c = 0.1 + 29.9 * ctr.uniform(3 * i + 1);

    const NoiseModel na{StableParams::levy(0.0, c), System::A};
    const auto ra = detector::compute_threshold(na, delta);
    CHECK(ra.threshold > delta);
    CHECK(ra.threshold <= delta + c / 3.0);
    CHECK(std::fabs(detector::llr(na, delta, ra.threshold)) < 1e-9);

    const NoiseModel nb{StableParams::half(c, 0.0), System::B};
    const auto rb = detector::compute_threshold(nb, delta);
    CHECK(rb.threshold > 0.5 * delta);
    CHECK(std::fabs(detector::llr(nb, delta, rb.threshold)) < 1e-9);

    const double beta = 1.8 * ctr.uniform(3 * i + 2) - 0.9;
    const NoiseModel nc{StableParams::half(c, beta), System::C};
    const auto rc = detector::compute_threshold(nc, delta);
    CHECK(rc.threshold > rc.bracket.lo);
    CHECK(rc.threshold < rc.bracket.hi);
    CHECK(std::fabs(detector::llr(nc, delta, rc.threshold)) < 1e-9);
  }
}

TEST_CASE("detect and llr edge behavior") {
  const ChannelSpec sa = ChannelSpec::make_a(1.0, 0.5);
  const auto rule = detector::compute_threshold(sa, 1.0);
  CHECK(detector::detect(rule, rule.threshold - 1e-6) == 0);
  CHECK(detector::detect(rule, rule.threshold + 1e-6) == 1);
  // Observations at/below zero can only come from hypothesis 0's
  // support boundary; LLR is +inf there.
  const auto noise = channel::derive_noise(sa);
  CHECK(std::isinf(detector::llr(noise, 1.0, -0.5)));
  CHECK(detector::llr(noise, 1.0, -0.5) > 0.0);
  CHECK_THROWS(detector::llr(noise, -1.0, 0.5));

  const ChannelSpec sc = ChannelSpec::make_c(1.0, 1.0, 0.5);
  const auto rc = detector::compute_threshold(sc, 1.0);
  CHECK(rc.input0() == -1.0);
  CHECK(rc.input1() == 1.0);
  CHECK(detector::detect(rc, rc.threshold) == 0);
}

TEST_CASE("analytic BER: reference operating points") {
  // d = 20, D = 150 reference geometry.
  const ChannelSpec sa = ChannelSpec::make_a(20.0, 150.0);
  const ChannelSpec sb = ChannelSpec::make_b(20.0, 150.0);
  const ChannelSpec sc = ChannelSpec::make_c(20.0, 930.0, 150.0);
  CHECK(detector::ber_analytic(sa, 25.0) == doctest::Approx(0.0912).epsilon(5e-3));
  CHECK(detector::ber_analytic(sb, 100.0) == doctest::Approx(0.1348).epsilon(5e-3));
  CHECK(detector::ber_analytic(sc, 100.0) == doctest::Approx(0.0589).epsilon(5e-3));
}

TEST_CASE("BER sanity: bounds and monotonicity") {
  const ChannelSpec sb = ChannelSpec::make_b(20.0, 150.0);
  double prev = 0.5;
  for (double delta : {1.0, 5.0, 25.0, 60.0, 120.0}) {
    const double p = detector::ber_analytic(sb, delta);
    CHECK(p > 0.0);
    CHECK(p < 0.5);
    CHECK(p < prev);
    prev = p;
  }
}
