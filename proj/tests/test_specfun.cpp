#include <cmath>
#include <complex>

#include "doctest.h"
#include "mtc/rng.hpp"
#include "mtc/specfun.hpp"
#include "oracles.hpp"

using cplx = std::complex<double>;
using namespace mtc;

TEST_CASE("faddeeva known values") {
  CHECK(specfun::faddeeva_w({0.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(specfun::faddeeva_w({0.0, 0.0}).imag() == doctest::Approx(0.0));
  // w(j) = e erfc(1) ... e^{1} erfc(1)
  const double w_i = std::exp(1.0) * std::erfc(1.0);
  CHECK(specfun::faddeeva_w({0.0, 1.0}).real() == doctest::Approx(w_i).epsilon(1e-12));
  // On the real axis Re w(x) = exp(-x^2).
  for (double x : {0.3, 1.0, 2.5, 4.0}) {
    CHECK(specfun::faddeeva_w({x, 0.0}).real() ==
          doctest::Approx(std::exp(-x * x)).epsilon(1e-11));
  }
}

TEST_CASE("faddeeva vs Voigt quadrature oracle") {
  for (double a : {0.0, 0.3, 1.0, 3.0, 7.5}) {
    for (double b : {0.1, 0.7, 2.0, 6.0}) {
      const cplx w = specfun::faddeeva_w({a, b});
      CHECK(w.real() == doctest::Approx(oracles::voigt_k_quad(a, b)).epsilon(1e-10));
      CHECK(w.imag() == doctest::Approx(oracles::voigt_l_quad(a, b)).epsilon(1e-10));
      CHECK(specfun::voigt_k(a, b) == w.real());
      CHECK(specfun::voigt_l(a, b) == w.imag());
    }
  }
}

TEST_CASE("reflection identity w(-z) = 2 exp(-z^2) - w(z)") {
  rng::Counter ctr({42, 7}, 0);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double re = 10.0 * ctr.uniform(2 * i) - 5.0;
    const double im = 10.0 * ctr.uniform(2 * i + 1) - 5.0;
    const cplx z(re, im);
    const cplx lhs = specfun::faddeeva_w(-z);
    const cplx rhs = 2.0 * std::exp(-z * z) - specfun::faddeeva_w(z);
    // The identity is satisfied relative to its dominant term; where
    // |exp(-z^2)| is exponentially large the difference inherits its
    // rounding error.
    const double scale =
        std::max({1.0, std::abs(rhs), 2.0 * std::abs(std::exp(-z * z))});
    CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
  }
}

TEST_CASE("dawson relation and real-axis oracle") {
  rng::Counter ctr({43, 7}, 0);
  const cplx half_j_sqrt_pi(0.0, 0.5 * std::sqrt(M_PI));
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double re = 10.0 * ctr.uniform(2 * i) - 5.0;
    const double im = 10.0 * ctr.uniform(2 * i + 1) - 5.0;
    const cplx z(re, im);
    const cplx lhs = specfun::dawson(z);
    const cplx rhs =
        half_j_sqrt_pi * (std::exp(-z * z) - specfun::faddeeva_w(z));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
  for (double x : {0.25, 0.9240, 1.5, 3.0}) {
    CHECK(specfun::dawson({x, 0.0}).real() ==
          doctest::Approx(oracles::dawson_quad(x)).epsilon(1e-10));
    CHECK(specfun::dawson({x, 0.0}).imag() == doctest::Approx(0.0));
  }
  // Maximum of the Dawson function: D(0.92414) = 0.54104422463518...
  CHECK(specfun::dawson({0.92414, 0.0}).real() ==
        doctest::Approx(0.54104422463518).epsilon(1e-9));
}

TEST_CASE("g functions: collapse, reflection, CF-inversion oracle") {
  CHECK(specfun::g_plus(2.0, 0.0) == doctest::Approx(specfun::g_sym(2.0)).epsilon(1e-13));
  CHECK(specfun::g_minus(-1.5, 0.4) ==
        doctest::Approx(specfun::g_plus(1.5, -0.4)).epsilon(1e-13));
  CHECK(specfun::g_sym(1.0) ==
        doctest::Approx(oracles::cf_inversion_pdf(1.0, 0.0)).epsilon(1e-8));
  CHECK(specfun::g_plus(1.0, 0.95) ==
        doctest::Approx(oracles::cf_inversion_pdf(1.0, 0.95)).epsilon(1e-8));
}

TEST_CASE("g functions finite over 24 decades") {
  for (double b : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    for (double u = 1e-12; u <= 1.0001e12; u *= 10.0) {
      const double fp = specfun::g_plus(u, b);
      const double fm = specfun::g_minus(-u, b);
      const double fs = specfun::g_sym(u);
      CHECK(std::isfinite(fp));
      CHECK(std::isfinite(fm));
      CHECK(std::isfinite(fs));
      CHECK(fp >= 0.0);
      CHECK(fm >= 0.0);
      CHECK(fs >= 0.0);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS(specfun::g_plus(-1.0, 0.0));
  CHECK_THROWS(specfun::g_minus(1.0, 0.0));
  CHECK_THROWS(specfun::g_sym(0.0));
  CHECK_THROWS(specfun::g_plus(1.0, 1.5));
  CHECK_THROWS(specfun::voigt_k(1.0, 0.0));
  CHECK_THROWS(specfun::voigt_l(1.0, -1.0));
}
