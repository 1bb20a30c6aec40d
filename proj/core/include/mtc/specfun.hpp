#ifndef MTC_SPECFUN_HPP
#define MTC_SPECFUN_HPP

#include <complex>

namespace mtc::specfun {

/// Accuracy targets for the scalar special functions.
struct AccuracySpec {
  double rel_tol = 1e-10;
  double abs_floor = 1e-300;
};

/// Faddeeva function w(z) = exp(-z^2) erfc(-jz), valid on the whole
/// complex plane. Relative accuracy ~1e-13 on the closed upper half
/// plane; the lower half plane goes through the reflection identity
/// w(-z) = 2 exp(-z^2) - w(z) and inherits the growth of exp(-z^2).
std::complex<double> faddeeva_w(std::complex<double> z);

/// Dawson integral D(z) = exp(-z^2) * integral_0^z exp(t^2) dt.
std::complex<double> dawson(std::complex<double> z);

/// Real Voigt function K(a,b), b > 0.
/// K(a,b) + j L(a,b) = w(a + jb).
double voigt_k(double a, double b);

/// Imaginary Voigt function L(a,b), b > 0.
double voigt_l(double a, double b);

/// Symmetric density kernel G(u): the standardized PDF of the
/// alpha = 1/2, beta = 0 stable law at u != 0. Strictly positive.
/// The removable value at u = 0 is 2/pi and must be supplied by the
/// caller; u = 0 raises std::domain_error.
double g_sym(double u);

/// Skewed density kernels G+(u,beta) for u > 0 and G-(u,beta) for
/// u < 0: the standardized PDF of the alpha = 1/2 stable law with
/// skewness beta. Wrong-signed u raises std::domain_error.
double g_plus(double u, double beta);
double g_minus(double u, double beta);

}  // namespace mtc::specfun

#endif
