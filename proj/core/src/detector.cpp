#include "mtc/detector.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mtc::detector {
namespace {

using channel::NoiseModel;
using channel::System;
using stabledist::StableParams;

// Bisection to floating-point resolution of the bracket. f(lo) > 0,
// f(hi) <= 0 on entry.
template <class F>
double bisect(F&& f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// LLR for system A in the offset variable s = t - delta; avoids the
// cancellation of t - delta near the lower bracket end.
double llr_a_offset(const StableParams& p, double delta, double s) {
  return stabledist::levy_log_pdf(delta + s, p) - stabledist::levy_log_pdf(s, p);
}

ThresholdRule threshold_a(const NoiseModel& noise, double delta) {
  const double c = noise.params.c;
  auto f = [&](double s) { return llr_a_offset(noise.params, delta, s); };
  const double s_hi = c / 3.0;
  double s_lo = s_hi * 1e-18;
  // llr -> +inf as s -> 0+, and is <= 0 at the mode offset c/3.
  const double s = bisect(f, s_lo, s_hi);
  return {System::A, delta, delta + s, {delta, delta + c / 3.0}};
}

ThresholdRule threshold_b(const NoiseModel& noise, double delta) {
  auto f = [&](double y) { return llr(noise, delta, y); };
  double lo = 0.5 * delta;
  double hi = delta;
  int guard = 0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 200)
      throw std::runtime_error("compute_threshold: no sign change (system B)");
  }
  const double th = bisect(f, lo, hi);
  return {System::B, delta, th, {0.5 * delta, hi}};
}

ThresholdRule threshold_c(const NoiseModel& noise, double delta) {
  const double c = noise.params.c;
  const double m = c * standard_half_mode(noise.params.beta);
  auto f = [&](double y) { return llr(noise, delta, y); };
  // Conditional densities peak at m -+ delta; the LLR changes sign
  // strictly between them.
  double lo = m - delta;
  double hi = m + delta;
  const double nudge = 1e-9 * (c + delta);
  lo += nudge;
  hi -= nudge;
  if (!(f(lo) > 0.0) || !(f(hi) <= 0.0))
    throw std::runtime_error("compute_threshold: bracket failure (system C)");
  const double th = bisect(f, lo, hi);
  return {System::C, delta, th, {lo, hi}};
}

}  // namespace

double standard_half_mode(double beta) {
  if (beta == 1.0) return 1.0 / 3.0;
  if (beta == -1.0) return -1.0 / 3.0;
  if (beta == 0.0) return 0.0;
  // Golden-section maximization; the density is strictly unimodal and
  // its mode lies in (-1/3, 1/3).
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = -0.4, b = 0.4;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = stabledist::pdf_half_skew(x1, 1.0, beta);
  double f2 = stabledist::pdf_half_skew(x2, 1.0, beta);
  while (b - a > 1e-13) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = stabledist::pdf_half_skew(x2, 1.0, beta);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = stabledist::pdf_half_skew(x1, 1.0, beta);
    }
  }
  return 0.5 * (a + b);
}

double llr(const NoiseModel& noise, double delta, double y) {
  if (!(delta > 0.0)) throw std::invalid_argument("llr: delta must be positive");
  switch (noise.system) {
    case System::A: {
      if (y <= 0.0) return std::numeric_limits<double>::infinity();
      return stabledist::levy_log_pdf(y, noise.params) -
             stabledist::levy_log_pdf(y - delta, noise.params);
    }
    case System::B: {
      if (y < 0.0)
        throw std::domain_error("llr: system B observation must be >= 0");
      return channel::cond_output_log_pdf(noise, 0.0, y) -
             channel::cond_output_log_pdf(noise, delta, y);
    }
    case System::C:
      return channel::cond_output_log_pdf(noise, -delta, y) -
             channel::cond_output_log_pdf(noise, delta, y);
  }
  throw std::logic_error("llr: unreachable");
}

ThresholdRule compute_threshold(const NoiseModel& noise, double delta) {
  if (!(delta > 0.0))
    throw std::invalid_argument("compute_threshold: delta must be positive");
  switch (noise.system) {
    case System::A:
      return threshold_a(noise, delta);
    case System::B:
      return threshold_b(noise, delta);
    case System::C:
      return threshold_c(noise, delta);
  }
  throw std::logic_error("compute_threshold: unreachable");
}

ThresholdRule compute_threshold(const channel::ChannelSpec& spec, double delta) {
  return compute_threshold(channel::derive_noise(spec), delta);
}

int detect(const ThresholdRule& rule, double y) {
  if (rule.system == System::C) return y <= rule.threshold ? 0 : 1;
  return y < rule.threshold ? 0 : 1;
}

double ber_analytic(const NoiseModel& noise, double delta) {
  const ThresholdRule rule = compute_threshold(noise, delta);
  const double c = noise.params.c;
  const double th = rule.threshold;
  switch (noise.system) {
    case System::A: {
      const StableParams std_levy = StableParams::levy(0.0, 1.0);
      return 0.5 * (1.0 - stabledist::levy_cdf(th / c, std_levy) +
                    stabledist::levy_cdf((th - delta) / c, std_levy));
    }
    case System::B: {
      const StableParams s = StableParams::half(1.0, 0.0);
      const double F_th = stabledist::cdf_numeric(th / c, s);
      const double F_lo = stabledist::cdf_numeric((-th - delta) / c, s);
      const double F_hi = stabledist::cdf_numeric((th - delta) / c, s);
      return (1.0 - F_th) + 0.5 * (F_hi - F_lo);
    }
    case System::C: {
      const StableParams s = StableParams::half(1.0, noise.params.beta);
      return 0.5 * (1.0 - stabledist::cdf_numeric((th + delta) / c, s) +
                    stabledist::cdf_numeric((th - delta) / c, s));
    }
  }
  throw std::logic_error("ber_analytic: unreachable");
}

double ber_analytic(const channel::ChannelSpec& spec, double delta) {
  return ber_analytic(channel::derive_noise(spec), delta);
}

}  // namespace mtc::detector
