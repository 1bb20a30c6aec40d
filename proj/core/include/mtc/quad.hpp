#ifndef MTC_QUAD_HPP
#define MTC_QUAD_HPP

#include <cmath>
#include <concepts>

namespace mtc::quad {

// 7-15 Gauss-Kronrod pair on [-1, 1].
inline constexpr double kKronrodX[8] = {
    0.0,
    0.2077849550078984676006894,
    0.4058451513773971669066064,
    0.5860872354676911302941448,
    0.7415311855993944398638648,
    0.8648644233597690727897128,
    0.9491079123427585245261897,
    0.9914553711208126392068547,
};
inline constexpr double kKronrodW[8] = {
    0.2094821410847278280129992,
    0.2044329400752988924141620,
    0.1903505780647854099132564,
    0.1690047266392679028265834,
    0.1406532597155259187451896,
    0.1047900103222501838398763,
    0.0630920926299785532907007,
    0.0229353220105292249637320,
};
inline constexpr double kGaussW[4] = {
    0.4179591836734693877551020,
    0.3818300505051189449503698,
    0.2797053914892766679014678,
    0.1294849661688696932706114,
};

template <std::invocable<double> F>
void gk15(F&& f, double a, double b, double& result, double& err) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  const double fc = f(c);
  double kron = kKronrodW[0] * fc;
  double gauss = kGaussW[0] * fc;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kKronrodX[i];
    const double fv = f(c - dx) + f(c + dx);
    kron += kKronrodW[i] * fv;
    if (i % 2 == 0) gauss += kGaussW[i / 2] * fv;
  }
  result = kron * h;
  err = std::fabs((kron - gauss) * h);
}

/// Adaptive Gauss-Kronrod integration on [a, b] by interval halving;
/// stops when the local error estimate meets abs_tol + rel_tol*|I| or
/// at 60 levels of subdivision.
template <std::invocable<double> F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-12,
                 double rel_tol = 1e-12, int max_depth = 60) {
  struct Rec {
    const F& f;
    double abs_tol, rel_tol;
    double run(double a, double b, double est, double tol, int depth) {
      double left, right, el, er;
      const double m = 0.5 * (a + b);
      gk15(f, a, m, left, el);
      gk15(f, m, b, right, er);
      const double sum = left + right;
      const double loc = abs_tol > rel_tol * std::fabs(sum)
                             ? abs_tol
                             : rel_tol * std::fabs(sum);
      if (depth <= 0 || (el + er) <= (tol > loc ? tol : loc) ||
          std::fabs(sum - est) <= loc) {
        return sum;
      }
      return run(a, m, left, 0.5 * tol, depth - 1) +
             run(m, b, right, 0.5 * tol, depth - 1);
    }
  };
  double whole, err;
  gk15(f, a, b, whole, err);
  const double tol =
      abs_tol > rel_tol * std::fabs(whole) ? abs_tol : rel_tol * std::fabs(whole);
  if (err <= tol) return whole;
  Rec rec{f, abs_tol, rel_tol};
  return rec.run(a, b, whole, tol, max_depth);
}

/// Integral over [a, inf) via the transform t = a + s/(1-s), s in [0,1).
template <std::invocable<double> F>
double integrate_upper(F&& f, double a, double abs_tol = 1e-12,
                       double rel_tol = 1e-12) {
  auto g = [&](double s) {
    const double om = 1.0 - s;
    const double t = a + s / om;
    return f(t) / (om * om);
  };
  return integrate(g, 0.0, 1.0 - 1e-14, abs_tol, rel_tol);
}

}  // namespace mtc::quad

#endif
