#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "fundsol/errors.hpp"
#include "fundsol/kummer.hpp"
#include "fundsol/quadrature.hpp"
#include "fundsol/series.hpp"
#include "fundsol/special_functions.hpp"

namespace fundsol {

/// Parameters (a; b1,b2,b3; c1,c2,c3) of the three-variable Lauricella F_A.
struct LauricellaParams {
  double a = 0.0;
  std::array<double, 3> b{};
  std::array<double, 3> c{};

  void validate() const {
    for (double ci : c) {
      if (detail::is_nonpositive_integer(ci)) throw pole_error("F_A: a lower parameter is a nonpositive integer");
    }
  }

  /// Parameters after i, j, k differentiations in the three arguments.
  LauricellaParams shifted(int i, int j, int k) const {
    return {a + i + j + k, {b[0] + i, b[1] + j, b[2] + k}, {c[0] + i, c[1] + j, c[2] + k}};
  }
};

struct TripleArg {
  double x = 0.0, y = 0.0, z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double abs_sum() const { return std::abs(x) + std::abs(y) + std::abs(z); }
  bool nonpositive() const { return x <= 0.0 && y <= 0.0 && z <= 0.0; }
  bool is_zero() const { return x == 0.0 && y == 0.0 && z == 0.0; }
};

/// Thresholds of the route dispatcher.
struct LauricellaOptions {
  double series_guard = 0.05;          // series used while |x|+|y|+|z| <= 1 - guard
  double decomposed_rate_limit = 0.6;  // accept the decomposition below this convergence proxy
  double decomposed_arg_limit = 3.0;   // ... or when every |argument| is at most this
  bool laplace_fallback = true;        // use the Laplace integral when the decomposition fails
  int integral_nodes = 48;             // Gauss-Jacobi nodes per axis

  void validate() const {
    if (!(series_guard > 0.0 && series_guard < 1.0)) throw domain_error("series_guard must lie in (0, 1)");
    if (integral_nodes < 1) throw domain_error("integral_nodes must be positive");
  }
};

namespace detail {

// Maximum number of degree shells; binomial coefficients overflow beyond this.
inline constexpr int max_shells = 1000;

inline void advance_binomial_row(std::vector<double>& row) {
  row.push_back(1.0);
  for (std::size_t i = row.size() - 2; i > 0; --i) row[i] += row[i - 1];
}

// Convergence proxy for the decomposed sum after Pfaff-mapping each argument to [0, 1).
inline double decomposition_rate(const TripleArg& t) {
  double X = t.x / (t.x - 1.0), Y = t.y / (t.y - 1.0), Z = t.z / (t.z - 1.0);
  return X * Y * (1.0 - Z) + X * Z * (1.0 - Y) + Y * Z;
}

}  // namespace detail

/// Direct triple series summed by total-degree shells.
inline EvalResult fa3_series(const LauricellaParams& p, const TripleArg& t, const SeriesControl& ctrl = {},
                             const LauricellaOptions& opts = {}) {
  ctrl.validate();
  p.validate();
  if (!(t.abs_sum() <= 1.0 - opts.series_guard)) {
    throw domain_error("F_A series requires |x|+|y|+|z| <= 1 - guard");
  }
  EvalResult res{1.0, 0.0, 1, true, Route::series};
  if (t.is_zero()) return res;

  const int shells = std::min(ctrl.max_terms, detail::max_shells);
  // Per-axis factors (b)_i/(c)_i x^i, signed and absolute.
  std::array<std::vector<double>, 3> f, fa;
  for (int k = 0; k < 3; ++k) {
    f[k] = {1.0};
    fa[k] = {1.0};
  }
  std::vector<double> pair{1.0}, pair_abs{1.0};  // y-z convolution P_m
  std::vector<double> row{1.0};                 // binomial row C(N, .)
  double g = 1.0;                               // (a)_N / N!
  double sum = 1.0;
  TailMonitor tail;
  tail.seed(1.0);

  for (int N = 1; N <= shells; ++N) {
    for (int k = 0; k < 3; ++k) {
      double ratio = (p.b[k] + N - 1) / (p.c[k] + N - 1) * t[k];
      f[k].push_back(f[k].back() * ratio);
      fa[k].push_back(std::abs(f[k].back()));
    }
    detail::advance_binomial_row(row);
    g *= (p.a + N - 1) / N;

    double pn = 0.0, pna = 0.0;
    for (int j = 0; j <= N; ++j) {
      pn += row[j] * f[1][j] * f[2][N - j];
      pna += row[j] * fa[1][j] * fa[2][N - j];
    }
    pair.push_back(pn);
    pair_abs.push_back(pna);

    double shell = 0.0, shell_abs = 0.0;
    for (int i = 0; i <= N; ++i) {
      shell += row[i] * f[0][i] * pair[N - i];
      shell_abs += row[i] * fa[0][i] * pair_abs[N - i];
    }
    shell *= g;
    shell_abs *= std::abs(g);
    sum += shell;
    res.terms_used = N + 1;
    double bound = tail.observe(shell_abs);
    if (bound <= ctrl.target(sum)) {
      res.value = sum;
      res.error_estimate = bound;
      return res;
    }
  }
  res.value = sum;
  res.converged = false;
  res.error_estimate = std::abs(sum);
  throw non_convergent("F_A series did not converge within the shell budget", res);
}

/// Euler triple integral with tensor-product Gauss-Jacobi quadrature.
/// The Beta normalizations cancel against the normalized weights.
inline double fa3_integral(const LauricellaParams& p, const TripleArg& t, int nodes = 48) {
  for (int k = 0; k < 3; ++k) {
    if (!(p.c[k] > p.b[k] && p.b[k] > 0.0)) throw domain_error("F_A integral requires c_i > b_i > 0");
  }
  if (!(1.0 - std::max(t.x, 0.0) - std::max(t.y, 0.0) - std::max(t.z, 0.0) > 0.0)) {
    throw domain_error("F_A integral requires 1 - x t1 - y t2 - z t3 > 0 on the unit cube");
  }
  if (t.is_zero()) return 1.0;
  std::array<QuadratureRule, 3> rules;
  for (int k = 0; k < 3; ++k) rules[k] = gauss_jacobi_unit(nodes, p.b[k] - 1.0, p.c[k] - p.b[k] - 1.0);
  double total = 0.0;
  for (int i = 0; i < nodes; ++i) {
    double base_i = 1.0 - t.x * rules[0].nodes[i];
    double acc_j = 0.0;
    for (int j = 0; j < nodes; ++j) {
      double base_j = base_i - t.y * rules[1].nodes[j];
      double acc_k = 0.0;
      for (int k = 0; k < nodes; ++k) {
        acc_k += rules[2].weights[k] * std::pow(base_j - t.z * rules[2].nodes[k], -p.a);
      }
      acc_j += rules[1].weights[j] * acc_k;
    }
    total += rules[0].weights[i] * acc_j;
  }
  return total;
}

/// Decomposition into products of Gauss functions, each Pfaff-transformed so
/// its argument x/(x-1) lies in [0, 1). Returns the sum without the factor
/// prod_k (1 - x_k)^{-b_k}; the near-pole regular part is exactly this sum.
inline EvalResult fa3_decomposed_unscaled(const LauricellaParams& p, const TripleArg& t,
                                          const SeriesControl& ctrl = {}) {
  ctrl.validate();
  p.validate();
  for (int k = 0; k < 3; ++k) {
    if (!(t[k] < 0.5)) throw domain_error("F_A decomposition requires every argument < 1/2");
  }
  EvalResult res{1.0, 0.0, 1, true, Route::decomposed};
  if (t.is_zero()) return res;

  const double a = p.a;
  std::array<double, 3> X{}, ratio{};
  for (int k = 0; k < 3; ++k) {
    X[k] = t[k] / (t[k] - 1.0);
    ratio[k] = t[k] / (1.0 - t[k]);
  }
  // r_k(q) = (b_k)_q/(c_k)_q (x_k/(1-x_k))^q, grown on demand.
  std::array<std::vector<double>, 3> r;
  for (auto& v : r) v = {1.0};
  auto weight = [&](int k, int q) {
    while (static_cast<int>(r[k].size()) <= q) {
      int m = static_cast<int>(r[k].size()) - 1;
      r[k].push_back(r[k].back() * (p.b[k] + m) / (p.c[k] + m) * ratio[k]);
    }
    return r[k][q];
  };
  auto inner = [&](double upper, int k, int q) {
    if (X[k] == 0.0) return 1.0;
    return gauss_2f1(upper, p.b[k] + q, p.c[k] + q, X[k], ctrl).value;
  };

  std::vector<double> first;  // first axis factor by exponent, shared across shells
  auto first_factor = [&](int q) {
    while (static_cast<int>(first.size()) <= q) {
      int m = static_cast<int>(first.size());
      double w = weight(0, m);
      first.push_back(w == 0.0 ? 0.0 : w * inner(p.c[0] - a, 0, m));
    }
    return first[q];
  };

  const int shells = std::min(ctrl.max_terms, detail::max_shells);
  std::vector<double> row{1.0};
  std::vector<double> second, third;
  double g = 1.0;
  double sum = first_factor(0) * inner(p.c[1] - a, 1, 0) * inner(p.c[2] - a, 2, 0);
  TailMonitor tail;
  tail.seed(std::abs(sum));

  for (int L = 1; L <= shells; ++L) {
    detail::advance_binomial_row(row);
    g *= (a + L - 1) / L;
    // Second axis depends on (m, l+n) = (m, L-m); third on (l, m+n) = (l, L-l).
    second.assign(L + 1, 0.0);
    third.assign(L + 1, 0.0);
    for (int m = 0; m <= L; ++m) {
      double w = weight(1, L - m);
      second[m] = w == 0.0 ? 0.0 : w * inner(p.c[1] - a - m, 1, L - m);
    }
    for (int l = 0; l <= L; ++l) {
      double w = weight(2, L - l);
      third[l] = w == 0.0 ? 0.0 : w * inner(p.c[2] - a - l, 2, L - l);
    }
    double shell = 0.0, shell_abs = 0.0;
    for (int l = 0; l <= L; ++l) {
      if (third[l] == 0.0) continue;
      double cl = row[l];
      double acc = 0.0, acc_abs = 0.0;
      // multinomial(L; l, m, n) = C(L, l) C(L-l, m); build C(L-l, m) by recurrence.
      double cm = 1.0;
      for (int m = 0; m + l <= L; ++m) {
        if (m > 0) cm *= static_cast<double>(L - l - m + 1) / m;
        double v = cm * first_factor(l + m) * second[m];
        acc += v;
        acc_abs += std::abs(v);
      }
      shell += cl * third[l] * acc;
      shell_abs += cl * std::abs(third[l]) * acc_abs;
    }
    shell *= g;
    shell_abs *= std::abs(g);
    sum += shell;
    res.terms_used = L + 1;
    double bound = tail.observe(shell_abs);
    if (bound <= ctrl.target(sum)) {
      res.value = sum;
      res.error_estimate = bound;
      return res;
    }
  }
  res.value = sum;
  res.converged = false;
  res.error_estimate = std::abs(sum);
  throw non_convergent("F_A decomposition did not converge within the shell budget", res);
}

/// F_A through the decomposition into products of Gauss functions.
inline EvalResult fa3_decomposed(const LauricellaParams& p, const TripleArg& t, const SeriesControl& ctrl = {}) {
  auto r = fa3_decomposed_unscaled(p, t, ctrl);
  double pre = 1.0;
  for (int k = 0; k < 3; ++k) pre *= std::pow(1.0 - t[k], -p.b[k]);
  r.value *= pre;
  r.error_estimate *= pre;
  return r;
}

namespace detail {

// e^{-s} prod_k 1F1(b_k; c_k; t_k s), the Laplace-side integrand without s^{a-1}.
inline double laplace_kernel(const LauricellaParams& p, const TripleArg& t, double s) {
  double v = std::exp(-s);
  for (int k = 0; k < 3; ++k) {
    if (t[k] != 0.0) v *= kummer_negative(p.b[k], p.c[k], -t[k] * s);
  }
  return v;
}

}  // namespace detail

/// F_A = Gamma(a)^{-1} int_0^inf s^{a-1} e^{-s} prod_k 1F1(b_k; c_k; t_k s) ds,
/// valid for a > 0 and nonpositive arguments. Works for arguments of any size,
/// which is what evaluation next to the pole needs.
inline EvalResult fa3_laplace(const LauricellaParams& p, const TripleArg& t, const SeriesControl& ctrl = {}) {
  ctrl.validate();
  p.validate();
  if (!(p.a > 0.0)) throw domain_error("F_A Laplace integral requires a > 0");
  if (!t.nonpositive()) throw domain_error("F_A Laplace integral requires nonpositive arguments");
  EvalResult res{1.0, 0.0, 0, true, Route::laplace};
  if (t.is_zero()) return res;

  static const QuadratureRule gl = gauss_legendre_unit(20);
  const double a = p.a;
  const double spread = 1.0 + t.abs_sum();
  const double s0 = 0.25 / spread;

  // [0, s0]: integrate the Maclaurin expansion of the kernel term by term,
  // expanded in s/s0 so the coefficients stay bounded.
  constexpr int K = 48;
  std::array<double, K> d{};
  d[0] = 1.0;
  for (int n = 1; n < K; ++n) d[n] = -d[n - 1] * s0 / n;
  for (int k = 0; k < 3; ++k) {
    if (t[k] == 0.0) continue;
    std::array<double, K> m{};
    m[0] = 1.0;
    for (int n = 1; n < K; ++n) m[n] = m[n - 1] * (p.b[k] + n - 1) / ((p.c[k] + n - 1) * n) * t[k] * s0;
    std::array<double, K> out{};
    for (int i = 0; i < K; ++i) {
      for (int j = 0; i + j < K; ++j) out[i + j] += d[i] * m[j];
    }
    d = out;
  }
  double head = 0.0, head_abs = 0.0;
  const double s0a = std::pow(s0, a);
  for (int n = K - 1; n >= 0; --n) {
    double v = d[n] * s0a / (a + n);
    head += v;
    head_abs += std::abs(v);
  }

  double body = 0.0, body_abs = 0.0;
  int evals = 0;
  auto panel = [&](double lo, double hi, bool log_scale) {
    double width = hi - lo;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      double u = lo + width * gl.nodes[i];
      double s = log_scale ? std::exp(u) : u;
      // In u = ln s the measure s^{a-1} ds becomes s^a du.
      double jac = log_scale ? std::pow(s, a) : std::pow(s, a - 1.0);
      double v = gl.weights[i] * width * jac * detail::laplace_kernel(p, t, s);
      body += v;
      body_abs += std::abs(v);
      ++evals;
    }
  };

  // [s0, 1] in log scale.
  const double u0 = std::log(s0);
  const int log_panels = std::max(1, static_cast<int>(std::ceil(-u0 / 1.5)));
  for (int k = 0; k < log_panels; ++k) {
    panel(u0 + (-u0) * k / log_panels, u0 + (-u0) * (k + 1) / log_panels, true);
  }
  // [1, upper] with doubling then fixed-width panels.
  const double upper = 50.0 + 3.0 * a;
  panel(1.0, 2.0, false);
  panel(2.0, 4.0, false);
  panel(4.0, 8.0, false);
  for (double lo = 8.0; lo < upper; lo += 4.0) panel(lo, lo + 4.0, false);

  const double scale = std::exp(-log_gamma(a));
  res.value = scale * (head + body);
  res.error_estimate = scale * 4.0 * std::numeric_limits<double>::epsilon() * (head_abs + body_abs);
  res.terms_used = evals;
  return res;
}

/// Route dispatcher.
inline EvalResult fa3_auto(const LauricellaParams& p, const TripleArg& t, const SeriesControl& ctrl = {},
                           const LauricellaOptions& opts = {}) {
  ctrl.validate();
  opts.validate();
  p.validate();
  if (t.abs_sum() <= 1.0 - opts.series_guard) return fa3_series(p, t, ctrl, opts);
  if (!t.nonpositive()) throw domain_error("no F_A route for positive arguments outside the series region");

  const double max_arg = std::max({-t.x, -t.y, -t.z});
  const bool laplace_ok = p.a > 0.0;
  if (detail::decomposition_rate(t) <= opts.decomposed_rate_limit || max_arg <= opts.decomposed_arg_limit) {
    try {
      return fa3_decomposed(p, t, ctrl);
    } catch (const non_convergent&) {
      if (!(laplace_ok && opts.laplace_fallback)) throw;
    }
    return fa3_laplace(p, t, ctrl);
  }
  if (laplace_ok) return fa3_laplace(p, t, ctrl);
  throw domain_error("no F_A route: large arguments need a > 0");
}

/// Partial derivative of order (i, j, k) by the parameter-shift formula.
inline EvalResult fa3_derivative(const LauricellaParams& p, const TripleArg& t, int i, int j, int k,
                                 const SeriesControl& ctrl = {}, const LauricellaOptions& opts = {}) {
  if (i < 0 || j < 0 || k < 0) throw domain_error("derivative orders must be nonnegative");
  double pref = pochhammer(p.a, i + j + k) * pochhammer(p.b[0], i) * pochhammer(p.b[1], j) *
                pochhammer(p.b[2], k) /
                (pochhammer(p.c[0], i) * pochhammer(p.c[1], j) * pochhammer(p.c[2], k));
  if (pref == 0.0) return {0.0, 0.0, 0, true, Route::none};
  auto r = fa3_auto(p.shifted(i, j, k), t, ctrl, opts);
  r.value *= pref;
  r.error_estimate *= std::abs(pref);
  return r;
}

}  // namespace fundsol
