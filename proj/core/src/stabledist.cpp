#include "mtc/stabledist.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mtc/quad.hpp"
#include "mtc/specfun.hpp"

namespace mtc::stabledist {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void require_half(const StableParams& p, const char* what) {
  if (p.alpha != 0.5) throw std::invalid_argument(std::string(what) + ": alpha must be 1/2");
}

// Standardized alpha=1/2 density, any beta in [-1, 1].
double pdf_std(double x, double beta) {
  if (x > 0.0) return specfun::g_plus(x, beta);
  if (x < 0.0) return specfun::g_minus(x, beta);
  const double b2 = beta * beta;
  return 2.0 * (1.0 - b2) / (M_PI * (1.0 + b2) * (1.0 + b2));
}

// Survival function Pr(X > x) of the standardized law for x >= 0.
// The CDF at 0 has the closed form 1/2 - (2/pi) atan(beta) (Gil-Pelaez
// at x = 0); away from 0 the closed-form PDF is integrated, using the
// substitution u = x / v^2 for the heavy upper tail.
double sf_std_pos(double x, double beta) {
  const double sf0 = 0.5 + (2.0 / M_PI) * std::atan(beta);
  if (x == 0.0) return sf0;
  if (x <= 2.0) {
    const double mass =
        quad::integrate([beta](double t) { return pdf_std(t, beta); }, 0.0, x,
                        1e-13, 1e-12);
    double sf = sf0 - mass;
    return sf < 0.0 ? 0.0 : sf;
  }
  auto g = [x, beta](double v) {
    const double u = x / (v * v);
    return pdf_std(u, beta) * 2.0 * x / (v * v * v);
  };
  double sf = quad::integrate(g, 0.0, 1.0, 1e-14, 1e-12);
  return sf < 0.0 ? 0.0 : sf;
}

double cdf_std(double x, double beta) {
  double F = (x >= 0.0) ? 1.0 - sf_std_pos(x, beta) : sf_std_pos(-x, -beta);
  if (F < 0.0) F = 0.0;
  if (F > 1.0) F = 1.0;
  return F;
}

}  // namespace

StableParams::StableParams(double mu_, double c_, double alpha_, double beta_)
    : mu(mu_), c(c_), alpha(alpha_), beta(beta_) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("StableParams: scale c must be positive");
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::invalid_argument("StableParams: alpha must be in (0, 2]");
  if (!(beta >= -1.0 && beta <= 1.0))
    throw std::invalid_argument("StableParams: beta must be in [-1, 1]");
  if (!std::isfinite(mu))
    throw std::invalid_argument("StableParams: mu must be finite");
}

double levy_pdf(double x, const StableParams& p) {
  require_half(p, "levy_pdf");
  if (p.beta != 1.0) throw std::invalid_argument("levy_pdf: beta must be 1");
  const double s = x - p.mu;
  if (s <= 0.0) return 0.0;
  return std::sqrt(p.c / (2.0 * M_PI * s * s * s)) * std::exp(-p.c / (2.0 * s));
}

double levy_log_pdf(double x, const StableParams& p) {
  const double s = x - p.mu;
  if (s <= 0.0) return -std::numeric_limits<double>::infinity();
  return 0.5 * std::log(p.c / (2.0 * M_PI)) - 1.5 * std::log(s) -
         p.c / (2.0 * s);
}

double levy_cdf(double x, const StableParams& p) {
  const double s = x - p.mu;
  if (s <= 0.0) return 0.0;
  return std::erfc(std::sqrt(p.c / (2.0 * s)));
}

double levy_quantile(double q, const StableParams& p) {
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("levy_quantile: q must lie in (0, 1)");
  const double y = erfc_inv(q);
  return p.mu + p.c / (2.0 * y * y);
}

std::complex<double> cf_eval(double omega, const StableParams& p) {
  if (omega == 0.0) return {1.0, 0.0};
  const double aw = std::fabs(p.c * omega);
  const double sgn = omega > 0.0 ? 1.0 : -1.0;
  const double phi = (p.alpha == 1.0) ? -(2.0 / M_PI) * std::log(std::fabs(omega))
                                      : std::tan(0.5 * M_PI * p.alpha);
  const double mag = std::pow(aw, p.alpha);
  const std::complex<double> expo(-mag, p.mu * omega + mag * p.beta * sgn * phi);
  return std::exp(expo);
}

double pdf_half_sym(double x, double c) {
  if (x == 0.0) return 2.0 / (c * M_PI);
  return specfun::g_sym(x / c) / c;
}

double pdf_half_skew(double x, double c, double beta) {
  return pdf_std(x / c, beta) / c;
}

double pdf_half_appendix(double x, double beta) {
  if (x == 0.0) throw std::domain_error("pdf_half_appendix: x must be nonzero");
  using cplx = std::complex<double>;
  const cplx z = cplx(1.0 + beta, -(1.0 - beta)) /
                 (2.0 * std::sqrt(cplx(2.0 * x, 0.0)));
  const cplx val = (z / (M_PI * x)) *
                   (kSqrtPi * std::exp(-z * z) -
                    cplx(0.0, 2.0) * specfun::dawson(z));
  const double f = val.real();
  return f > 0.0 ? f : 0.0;
}

double cdf_numeric(double x, const StableParams& p) {
  require_half(p, "cdf_numeric");
  return cdf_std(standardize(x, p), p.beta);
}

double tail_upper(double x, const StableParams& p) {
  const double xs = standardize(x, p);
  if (!(xs > 0.0)) throw std::domain_error("tail_upper: x must exceed mu");
  return (1.0 + p.beta) * std::tgamma(p.alpha) *
         std::sin(0.5 * M_PI * p.alpha) / (M_PI * std::pow(xs, p.alpha));
}

double erfc_inv(double q) {
  if (!(q > 0.0 && q < 2.0))
    throw std::domain_error("erfc_inv: argument must lie in (0, 2)");
  // Initial guess from the rational approximation of the probit, then
  // two Halley steps on erfc.
  const double pp = 0.5 * q;  // upper-tail normal probability / probit arg
  double t = std::sqrt(-2.0 * std::log(pp < 0.5 ? pp : 1.0 - pp));
  double x = t - (2.30753 + 0.27061 * t) / (1.0 + t * (0.99229 + 0.04481 * t));
  if (pp >= 0.5) x = -x;
  x /= std::sqrt(2.0);  // erfc_inv(q) = probit(1 - q/2)/sqrt(2)
  for (int i = 0; i < 3; ++i) {
    const double err = std::erfc(x) - q;
    const double d = -2.0 * std::exp(-x * x) / kSqrtPi;  // d erfc/dx
    x -= err / (d + x * err);  // Halley: f'' = -2x f'
  }
  return x;
}

std::vector<double> sample(const StableParams& p, std::size_t n,
                           rng::SeedSpec seed) {
  require_half(p, "sample");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    rng::Counter ctr(seed, i);
    out[i] = sample_one(p, ctr, 0);
  }
  return out;
}

double sample_one(const StableParams& p, const rng::Counter& ctr,
                  std::uint64_t pair_base) {
  const double bp = 1.0 + p.beta;
  const double bm = 1.0 - p.beta;
  double x = p.mu;
  if (bp > 0.0) {
    const double z = ctr.normal(pair_base);
    x += p.c * bp * bp * 0.25 / (z * z);
  }
  if (bm > 0.0) {
    const double z = ctr.normal(pair_base + 1);
    x -= p.c * bm * bm * 0.25 / (z * z);
  }
  return x;
}

}  // namespace mtc::stabledist
