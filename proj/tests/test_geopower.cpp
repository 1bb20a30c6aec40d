#include <cmath>

#include "doctest.h"
#include "mtc/channel.hpp"
#include "mtc/geopower.hpp"
#include "mtc/stabledist.hpp"

using namespace mtc;
using channel::ChannelSpec;
using channel::NoiseModel;
using channel::System;
using stabledist::StableParams;

TEST_CASE("geometric power closed form") {
  // alpha = 1/2: S0 = c G (1 + beta^2).
  CHECK(geopower::geo_power(StableParams::half(1.0, 0.0)) ==
        doctest::Approx(geopower::kGGamma).epsilon(1e-14));
  CHECK(geopower::geo_power(StableParams::levy(0.0, 2.0)) ==
        doctest::Approx(2.0 * geopower::kGGamma * 2.0).epsilon(1e-14));
  CHECK(geopower::geo_power(StableParams::half(3.0, 0.5)) ==
        doctest::Approx(3.0 * geopower::kGGamma * 1.25).epsilon(1e-14));
  // Gaussian member: alpha = 2 has tan(pi) ~ 0 skew factor; S0 = c / G^(1/2).
  CHECK(geopower::geo_power(StableParams(0.0, 1.0, 2.0, 0.0)) ==
        doctest::Approx(1.0 / std::sqrt(geopower::kGGamma)).epsilon(1e-12));
  // Cauchy with skew is undefined.
  CHECK_THROWS(geopower::geo_power(StableParams(0.0, 1.0, 1.0, 0.5)));
  CHECK(geopower::geo_power(StableParams(0.0, 2.0, 1.0, 0.0)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(geopower::kGGamma == doctest::Approx(std::exp(geopower::kEulerGamma))
                                 .epsilon(1e-15));
}

TEST_CASE("G-SNR reports") {
  const ChannelSpec sa = ChannelSpec::make_a(20.0, 150.0);
  const ChannelSpec sb = ChannelSpec::make_b(20.0, 150.0);
  const double delta = 25.0;
  const auto ga = geopower::gsnr(sa, delta);
  const auto gb = geopower::gsnr(sb, delta);
  CHECK(!ga.is_upper_bound);
  CHECK(gb.is_upper_bound);
  CHECK(ga.signal_range == delta);
  CHECK(gb.signal_range == delta);
  // At equal geometry S0_A = 2 c_A G and the B bound uses c_B G =
  // 4 c_A G; the squared noise-power ratio makes gsnr_A / gsnr_B = 4.
  CHECK(ga.gsnr / gb.gsnr == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(ga.gsnr_db == doctest::Approx(10.0 * std::log10(ga.gsnr)).epsilon(1e-12));

  const ChannelSpec sc = ChannelSpec::make_c(20.0, 930.0, 150.0);
  const auto gc = geopower::gsnr(sc, delta);
  CHECK(gc.signal_range == 2.0 * delta);
  CHECK(!gc.is_upper_bound);
}

TEST_CASE("delta_for_gsnr round trip at g = 10") {
  for (auto spec : {ChannelSpec::make_a(20.0, 150.0),
                    ChannelSpec::make_b(20.0, 150.0),
                    ChannelSpec::make_c(20.0, 930.0, 150.0)}) {
    const double delta = geopower::delta_for_gsnr(spec, 10.0);
    CHECK(delta > 0.0);
    CHECK(geopower::gsnr(spec, delta).gsnr == doctest::Approx(10.0).epsilon(1e-12));
  }
}

TEST_CASE("scale_for_gsnr_c round trip") {
  for (double beta : {0.0, 0.5, 0.95}) {
    for (double g : {1.0, 10.0}) {
      const double delta = 25.0;
      const double c = geopower::scale_for_gsnr_c(delta, beta, g);
      const NoiseModel noise{StableParams::half(c, beta), System::C};
      CHECK(geopower::gsnr(noise, delta).gsnr == doctest::Approx(g).epsilon(1e-12));
    }
  }
}

TEST_CASE("argument validation") {
  const ChannelSpec sa = ChannelSpec::make_a(20.0, 150.0);
  CHECK_THROWS(geopower::gsnr(sa, 0.0));
  CHECK_THROWS(geopower::delta_for_gsnr(sa, -1.0));
  CHECK_THROWS(geopower::scale_for_gsnr_c(0.0, 0.5, 1.0));
}
