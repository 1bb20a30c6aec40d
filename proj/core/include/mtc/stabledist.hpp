#ifndef MTC_STABLEDIST_HPP
#define MTC_STABLEDIST_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "mtc/rng.hpp"

namespace mtc::stabledist {

/// Parameter record of a stable law: location mu [s], scale c [s],
/// characteristic exponent alpha, skewness beta. The constructor
/// validates c > 0, 0 < alpha <= 2, |beta| <= 1. The closed-form
/// density/CDF paths of this library additionally require alpha = 1/2.
struct StableParams {
  double mu;
  double c;
  double alpha;
  double beta;

  StableParams(double mu_, double c_, double alpha_, double beta_);

  static StableParams levy(double mu, double c) {
    return {mu, c, 0.5, 1.0};
  }
  static StableParams half(double c, double beta) {
    return {0.0, c, 0.5, beta};
  }
};

/// Root bracket in seconds; lo < hi and the target lies in [F(lo), F(hi)].
struct QuantileBracket {
  double lo;
  double hi;
};

// --- Levy closed forms (alpha = 1/2, beta = 1) -------------------------

double levy_pdf(double x, const StableParams& p);
double levy_log_pdf(double x, const StableParams& p);  // -inf for x <= mu
double levy_cdf(double x, const StableParams& p);
double levy_quantile(double q, const StableParams& p);

// --- Stable family (alpha = 1/2 unless noted) --------------------------

/// Characteristic function, any 0 < alpha <= 2.
std::complex<double> cf_eval(double omega, const StableParams& p);

/// PDF of S(0, c, 1/2, 0); returns 2/(c pi) at x = 0.
double pdf_half_sym(double x, double c);

/// PDF of S(0, c, 1/2, beta); returns 2(1-b^2)/(c pi (1+b^2)^2) at x = 0.
double pdf_half_skew(double x, double c, double beta);

/// Standardized alpha = 1/2 density through the Dawson-integral route;
/// an independent algebraic path used for cross-checks. x = 0 raises
/// std::domain_error.
double pdf_half_appendix(double x, double beta);

/// Numerical CDF of the alpha = 1/2 family, accurate to ~1e-10 absolute
/// for any x, including far tails.
double cdf_numeric(double x, const StableParams& p);

/// Upper-tail asymptote of Property-4 form, after standardizing x.
double tail_upper(double x, const StableParams& p);

// --- Standardization helpers ------------------------------------------

inline double standardize(double x, const StableParams& p) {
  return (x - p.mu) / p.c;
}
inline double rescale_pdf(double std_pdf, const StableParams& p) {
  return std_pdf / p.c;
}
inline double rescale_cdf(double std_cdf, const StableParams&) {
  return std_cdf;
}

/// Inverse complementary error function on (0, 2).
double erfc_inv(double q);

// --- Sampling ----------------------------------------------------------

/// Exact draws from the alpha = 1/2 family. A Levy(mu, c) draw is
/// mu + c/Z^2 with Z standard normal; general beta is the difference
/// of two Levy draws with scales c(1+beta)^2/4 and c(1-beta)^2/4.
/// Deterministic per (seed, index).
std::vector<double> sample(const StableParams& p, std::size_t n,
                           rng::SeedSpec seed);

/// Single draw for trial index i (used by the Monte Carlo engine).
double sample_one(const StableParams& p, const rng::Counter& ctr,
                  std::uint64_t pair_base);

}  // namespace mtc::stabledist

#endif
