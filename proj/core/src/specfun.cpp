#include "mtc/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace mtc::specfun {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kInvSqrtPi = 0.5641895835477562869;
using cplx = std::complex<double>;

// Weideman (1994) rational approximation of w(z) on the upper half
// plane. Coefficients are the cosine-transform of exp(-t^2)(L^2+t^2)
// on the tangent grid t_k = L tan(pi k / 2M); computed once.
constexpr int kWeidemanN = 64;

struct WeidemanTable {
  double L;
  std::array<double, kWeidemanN> a;
  WeidemanTable() {
    const int M = 2 * kWeidemanN;
    L = std::sqrt(kWeidemanN / std::sqrt(2.0));
    std::array<double, 2 * kWeidemanN> f{};  // f[k] = f(t_k), k = 0..M-1
    f[0] = L * L;                            // t_0 = 0
    for (int k = 1; k < M; ++k) {
      const double t = L * std::tan(0.5 * M_PI * k / M);
      f[k] = std::exp(-t * t) * (L * L + t * t);
    }
    for (int n = 1; n <= kWeidemanN; ++n) {
      double s = f[0];
      for (int k = 1; k < M; ++k) s += 2.0 * f[k] * std::cos(M_PI * k * n / M);
      a[n - 1] = s / (2.0 * M);
    }
  }
};

const WeidemanTable& weideman() {
  static const WeidemanTable table;
  return table;
}

// Laplace continued fraction, accurate for large |z| in the upper
// half plane.
cplx faddeeva_cf(cplx z, int depth) {
  cplx r = 0.0;
  for (int n = depth; n >= 1; --n) r = (0.5 * n) / (z - r);
  return cplx(0.0, kInvSqrtPi) / (z - r);
}

cplx faddeeva_upper(cplx z) {
  if (std::norm(z) >= 256.0) return faddeeva_cf(z, 36);
  const WeidemanTable& t = weideman();
  const cplx iz(-z.imag(), z.real());
  const cplx d = t.L - iz;
  const cplx Z = (t.L + iz) / d;
  cplx p = t.a[kWeidemanN - 1];
  for (int m = kWeidemanN - 2; m >= 0; --m) p = p * Z + t.a[m];
  return 2.0 * p / (d * d) + kInvSqrtPi / d;
}

// Standardized alpha=1/2 stable density at u > 0 with skewness beta,
// evaluated through w(z) with z = (1+beta - j(1-beta)) / sqrt(8u).
// For large |z| the real part of z*w(-z) cancels to O(|z|^-2); the
// asymptotic series of zeta*w(zeta) is used instead.
double half_stable_pos(double u, double beta) {
  const double r = std::sqrt(8.0 * u);
  const double p = (1.0 + beta) / r;
  const double q = (1.0 - beta) / r;
  const cplx zeta(-p, q);  // zeta = -z, upper half plane
  if (std::norm(zeta) >= 100.0) {
    const cplx inv2 = 1.0 / (zeta * zeta);
    cplx pw = inv2;
    double acc = 0.0;
    double c = 0.5;  // (2m-1)!! / 2^m
    for (int m = 1; m <= 12; ++m) {
      acc += c * pw.imag();
      pw *= inv2;
      c *= 0.5 * (2 * m + 1);
    }
    const double f = acc / (M_PI * u);
    return f > 0.0 ? f : 0.0;
  }
  const cplx zw = zeta * faddeeva_upper(zeta);
  const double f = -zw.real() / (kSqrtPi * u);
  return f > 0.0 ? f : 0.0;
}

}  // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  // w(z) = 2 exp(-z^2) - w(-z)
  return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

std::complex<double> dawson(std::complex<double> z) {
  // D(z) = j sqrt(pi)/2 (exp(-z^2) - w(z))
  const cplx d = std::exp(-z * z) - faddeeva_w(z);
  return cplx(0.0, 0.5 * kSqrtPi) * d;
}

double voigt_k(double a, double b) {
  if (!(b > 0.0)) throw std::domain_error("voigt_k: b must be positive");
  return faddeeva_upper({a, b}).real();
}

double voigt_l(double a, double b) {
  if (!(b > 0.0)) throw std::domain_error("voigt_l: b must be positive");
  return faddeeva_upper({a, b}).imag();
}

double g_sym(double u) {
  if (u == 0.0) throw std::domain_error("g_sym: u must be nonzero");
  return half_stable_pos(std::fabs(u), 0.0);
}

double g_plus(double u, double beta) {
  if (!(u > 0.0)) throw std::domain_error("g_plus: u must be positive");
  if (!(std::fabs(beta) <= 1.0)) throw std::domain_error("g_plus: |beta| > 1");
  return half_stable_pos(u, beta);
}

double g_minus(double u, double beta) {
  if (!(u < 0.0)) throw std::domain_error("g_minus: u must be negative");
  if (!(std::fabs(beta) <= 1.0)) throw std::domain_error("g_minus: |beta| > 1");
  // f(-x; beta) = f(x; -beta)
  return half_stable_pos(-u, -beta);
}

}  // namespace mtc::specfun
