#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "fundsol/errors.hpp"
#include "fundsol/series.hpp"

namespace fundsol {

namespace detail {

inline bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// sin(pi x) with the argument reduced first, so integers give exact zeros.
inline double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

// Lanczos, g = 671/128, 14 terms.
inline double lanczos_log_gamma(double x) {
  static constexpr std::array<double, 14> cof = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

}  // namespace detail

/// ln Gamma(a) for a > 0.
inline double log_gamma(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw domain_error("log_gamma requires a finite argument > 0");
  return detail::lanczos_log_gamma(a);
}

struct SignedLog {
  double log_abs;  // -inf for an exact zero
  int sign;        // +1, -1, or 0
};

/// ln|Gamma(x)| and the sign of Gamma(x) for any real x that is not a pole.
inline SignedLog log_abs_gamma(double x) {
  if (detail::is_nonpositive_integer(x)) throw pole_error("gamma function pole");
  if (x > 0.0) return {detail::lanczos_log_gamma(x), 1};
  double s = detail::sin_pi(x);
  double v = std::log(std::numbers::pi / std::abs(s)) - detail::lanczos_log_gamma(1.0 - x);
  int sign = (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
  return {v, sign};
}

/// 1 / Gamma(x); zero at the poles.
inline double reciprocal_gamma(double x) {
  if (detail::is_nonpositive_integer(x)) return 0.0;
  auto g = log_abs_gamma(x);
  return g.sign * std::exp(-g.log_abs);
}

/// ln|(a)_n| with the sign of (a)_n.
inline SignedLog log_abs_pochhammer(double a, int n) {
  double acc = 0.0;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    double f = a + k;
    if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (f < 0.0) sign = -sign;
    acc += std::log(std::abs(f));
  }
  return {acc, sign};
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1).
inline double pochhammer(double a, int n) {
  if (n < 0) throw domain_error("pochhammer requires n >= 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  if (std::isfinite(p)) return p;
  auto l = log_abs_pochhammer(a, n);
  return l.sign * std::exp(l.log_abs);
}

/// Gauss sum: 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).
inline double gauss_2f1_at_one(double a, double b, double c) {
  if (detail::is_nonpositive_integer(c)) throw pole_error("2F1: c is a nonpositive integer");
  if (!(c - a - b > 0.0)) throw domain_error("2F1 at x = 1 requires c - a - b > 0");
  if (detail::is_nonpositive_integer(c - a) || detail::is_nonpositive_integer(c - b)) return 0.0;
  auto g1 = log_abs_gamma(c);
  auto g2 = log_abs_gamma(c - a - b);
  auto g3 = log_abs_gamma(c - a);
  auto g4 = log_abs_gamma(c - b);
  int sign = g1.sign * g2.sign * g3.sign * g4.sign;
  return sign * std::exp(g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs);
}

/// Plain Maclaurin sum of 2F1 for |x| < 1 with `budget` terms at most.
/// No transformation is applied; callers use it as a reference or as a kernel.
inline EvalResult gauss_2f1_series(double a, double b, double c, double x, const SeriesControl& ctrl, int budget) {
  if (detail::is_nonpositive_integer(c)) throw pole_error("2F1: c is a nonpositive integer");
  EvalResult res;
  res.route = Route::series;
  double term = 1.0;
  double sum = 1.0;
  TailMonitor tail;
  tail.seed(1.0);
  const double ax = std::abs(x);
  for (int n = 0; n < budget; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
    res.terms_used = n + 1;
    double bound = tail.observe(std::abs(term), ax);
    sum += term;
    if (bound <= ctrl.target(sum)) {
      res.value = sum;
      res.error_estimate = bound;
      res.converged = true;
      return res;
    }
  }
  res.value = sum;
  res.error_estimate = std::abs(term);
  throw non_convergent("2F1 series did not converge within the term budget", res);
}

/// 2F1 on 0 <= x < 1. Uses the direct series, or Euler's transformation when a
/// strongly negative upper parameter would make the direct series cancel.
inline EvalResult gauss_2f1_unit(double a, double b, double c, double x, const SeriesControl& ctrl) {
  if (x == 0.0) return {1.0, 0.0, 0, true, Route::series};
  const int budget = x <= 0.5 ? ctrl.max_terms : 10 * ctrl.max_terms;
  if ((a < -1.0 || b < -1.0) && c - a > 0.0 && c - b > 0.0 && c > 0.0) {
    double pref = std::pow(1.0 - x, c - a - b);
    auto r = gauss_2f1_series(c - a, c - b, c, x, ctrl, budget);
    r.value *= pref;
    r.error_estimate *= pref;
    r.route = Route::euler;
    return r;
  }
  return gauss_2f1_series(a, b, c, x, ctrl, budget);
}

/// Gauss hypergeometric function 2F1(a,b;c;x) for x <= 1.
inline EvalResult gauss_2f1(double a, double b, double c, double x, const SeriesControl& ctrl = {}) {
  ctrl.validate();
  if (detail::is_nonpositive_integer(c)) throw pole_error("2F1: c is a nonpositive integer");
  if (!std::isfinite(x) || x > 1.0) throw domain_error("2F1 requires x <= 1");
  if (x == 1.0) return {gauss_2f1_at_one(a, b, c), 0.0, 0, true, Route::gauss_sum};
  if (x >= 0.0) return gauss_2f1_unit(a, b, c, x, ctrl);
  // Pfaff: 2F1(a,b;c;x) = (1-x)^{-b} 2F1(c-a,b;c;x/(x-1)).
  double w = x / (x - 1.0);
  double pref = std::pow(1.0 - x, -b);
  auto r = gauss_2f1_unit(c - a, b, c, w, ctrl);
  r.value *= pref;
  r.error_estimate *= std::abs(pref);
  r.route = Route::pfaff;
  return r;
}

}  // namespace fundsol
