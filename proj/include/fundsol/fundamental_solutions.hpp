#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "fundsol/errors.hpp"
#include "fundsol/lauricella.hpp"
#include "fundsol/series.hpp"
#include "fundsol/special_functions.hpp"

namespace fundsol {

/// Exponents of the singular coefficients 2a/x, 2b/y, 2c/z, each in (0, 1/2).
struct SingularParams {
  double alpha = 0.25;
  double beta = 0.25;
  double gamma = 0.25;

  double operator[](int i) const { return i == 0 ? alpha : (i == 1 ? beta : gamma); }

  void validate() const {
    for (int i = 0; i < 3; ++i) {
      double v = (*this)[i];
      if (!(2.0 * v > 0.0 && 2.0 * v < 1.0)) throw domain_error("singular parameters need 0 < 2*param < 1");
    }
  }
};

struct FieldPoint {
  double x = 1.0, y = 1.0, z = 1.0;
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

struct Pole {
  double x0 = 1.0, y0 = 1.0, z0 = 1.0;
  double operator[](int i) const { return i == 0 ? x0 : (i == 1 ? y0 : z0); }
  double& operator[](int i) { return i == 0 ? x0 : (i == 1 ? y0 : z0); }
};

inline Pole as_pole(const FieldPoint& p) { return {p.x, p.y, p.z}; }
inline FieldPoint as_point(const Pole& p) { return {p.x0, p.y0, p.z0}; }

/// Squared distance to the pole, squared distances to its three mirror
/// images, and the resulting Lauricella arguments.
struct GeometryFrame {
  double dist2 = 0.0;
  std::array<double, 3> mirror_dist2{};
  TripleArg args;
};

enum class SolutionKind { q1, q2, q3, q4, q5, q6, q7, q8 };

inline constexpr std::array<SolutionKind, 8> all_kinds = {SolutionKind::q1, SolutionKind::q2, SolutionKind::q3,
                                                          SolutionKind::q4, SolutionKind::q5, SolutionKind::q6,
                                                          SolutionKind::q7, SolutionKind::q8};

inline int index_of(SolutionKind k) { return static_cast<int>(k); }

inline std::string to_string(SolutionKind k) { return "q" + std::to_string(index_of(k) + 1); }

inline std::optional<SolutionKind> parse_kind(std::string_view s) {
  if (s.size() == 2 && (s[0] == 'q' || s[0] == 'Q') && s[1] >= '1' && s[1] <= '8') {
    return static_cast<SolutionKind>(s[1] - '1');
  }
  return std::nullopt;
}

/// Which axes carry the reflected parameter 1 - param for each kind.
inline std::array<bool, 3> flipped_axes(SolutionKind k) {
  static constexpr std::array<std::array<bool, 3>, 8> table = {{{false, false, false},
                                                                {true, false, false},
                                                                {false, true, false},
                                                                {false, false, true},
                                                                {true, true, false},
                                                                {true, false, true},
                                                                {false, true, true},
                                                                {true, true, true}}};
  return table[index_of(k)];
}

struct NormalizationConstants {
  std::array<double, 8> k{1, 1, 1, 1, 1, 1, 1, 1};

  double operator[](SolutionKind kind) const { return k[index_of(kind)]; }

  void validate() const {
    for (double v : k) {
      if (!std::isfinite(v) || v == 0.0) throw domain_error("normalization constants must be finite and nonzero");
    }
  }
};

inline GeometryFrame geometry(const FieldPoint& pt, const Pole& pole) {
  GeometryFrame g;
  for (int i = 0; i < 3; ++i) {
    if (!(pt[i] > 0.0) || !(pole[i] > 0.0)) throw domain_error("points must lie in the open positive octant");
    double d = pt[i] - pole[i];
    g.dist2 += d * d;
  }
  if (g.dist2 == 0.0) throw coincident_pole();
  std::array<double, 3> t{};
  for (int i = 0; i < 3; ++i) {
    double prod = 4.0 * pt[i] * pole[i];
    g.mirror_dist2[i] = g.dist2 + prod;
    t[i] = -prod / g.dist2;
  }
  g.args = {t[0], t[1], t[2]};
  return g;
}

struct SolutionRecipe {
  LauricellaParams params;
  double dist2_power = 0.0;            // exponent of the squared distance
  std::array<double, 3> axis_power{};  // exponents of x x0, y y0, z z0
};

inline SolutionRecipe solution_recipe(SolutionKind kind, const SingularParams& sp) {
  auto flip = flipped_axes(kind);
  SolutionRecipe r;
  double bsum = 0.0;
  for (int i = 0; i < 3; ++i) {
    double b = flip[i] ? 1.0 - sp[i] : sp[i];
    r.params.b[i] = b;
    r.params.c[i] = 2.0 * b;
    r.axis_power[i] = flip[i] ? 1.0 - 2.0 * sp[i] : 0.0;
    bsum += b;
  }
  r.params.a = bsum + 0.5;
  r.dist2_power = -r.params.a;
  return r;
}

/// Scaling degree of every kind under (pt, pole) -> (s pt, s pole).
inline double homogeneity_degree(const SingularParams& sp) {
  return -(2.0 * sp.alpha + 2.0 * sp.beta + 2.0 * sp.gamma + 1.0);
}

namespace detail {

inline double solution_prefactor(const SolutionRecipe& r, const GeometryFrame& g, const FieldPoint& pt,
                                 const Pole& pole, double kconst) {
  double v = kconst * std::pow(g.dist2, r.dist2_power);
  for (int i = 0; i < 3; ++i) {
    if (r.axis_power[i] != 0.0) v *= std::pow(pt[i] * pole[i], r.axis_power[i]);
  }
  return v;
}

}  // namespace detail

/// Value of the fundamental solution of the given kind.
inline EvalResult evaluate(SolutionKind kind, const SingularParams& sp, const FieldPoint& pt, const Pole& pole,
                           double kconst = 1.0, const SeriesControl& ctrl = {},
                           const LauricellaOptions& opts = {}) {
  sp.validate();
  auto g = geometry(pt, pole);
  auto recipe = solution_recipe(kind, sp);
  double pref = detail::solution_prefactor(recipe, g, pt, pole, kconst);
  auto r = fa3_auto(recipe.params, g.args, ctrl, opts);
  r.value *= pref;
  r.error_estimate *= std::abs(pref);
  return r;
}

/// Gradient with respect to the field point, through parameter-shifted F_A values.
inline std::array<double, 3> gradient(SolutionKind kind, const SingularParams& sp, const FieldPoint& pt,
                                      const Pole& pole, double kconst = 1.0, const SeriesControl& ctrl = {},
                                      const LauricellaOptions& opts = {}) {
  sp.validate();
  auto g = geometry(pt, pole);
  auto recipe = solution_recipe(kind, sp);
  const auto& p = recipe.params;
  double pref = detail::solution_prefactor(recipe, g, pt, pole, kconst);
  double base = fa3_auto(p, g.args, ctrl, opts).value;
  LauricellaParams raised = p;
  raised.a += 1.0;
  double lifted = fa3_auto(raised, g.args, ctrl, opts).value;
  std::array<double, 3> out{};
  for (int j = 0; j < 3; ++j) {
    LauricellaParams axis = raised;
    axis.b[j] += 1.0;
    axis.c[j] += 1.0;
    double shifted = fa3_auto(axis, g.args, ctrl, opts).value;
    double d = pt[j] - pole[j];
    double v = -2.0 * p.a * d / g.dist2 * lifted;
    v += recipe.axis_power[j] / pt[j] * base;
    v -= 4.0 * pole[j] / g.dist2 * (p.a * p.b[j] / p.c[j]) * shifted;
    out[j] = pref * v;
  }
  return out;
}

inline std::array<double, 3> grad_q1(const SingularParams& sp, const FieldPoint& pt, const Pole& pole,
                                     double kconst = 1.0, const SeriesControl& ctrl = {}) {
  return gradient(SolutionKind::q1, sp, pt, pole, kconst, ctrl);
}

/// Limit of the regular part of q1 at the pole.
inline double singular_limit_constant(const SingularParams& sp) {
  sp.validate();
  double num = log_gamma(2 * sp.alpha) + log_gamma(2 * sp.beta) + log_gamma(2 * sp.gamma) +
               0.5 * std::log(std::numbers::pi);
  double den = log_gamma(sp.alpha) + log_gamma(sp.beta) + log_gamma(sp.gamma) +
               log_gamma(sp.alpha + sp.beta + sp.gamma + 0.5);
  return std::exp(num - den);
}

/// Bounded factor f in q1 = k r^{-1} (r1^2)^{-alpha} (r2^2)^{-beta} (r3^2)^{-gamma} f.
///
/// Uses the Gauss-product sum in the variables 1 - r^2/r_i^2 while those stay
/// moderate; closer to the pole it rescales the Laplace-route value of F_A.
struct RegularPartOptions {
  double series_limit = 0.75;  // largest 1 - r^2/r_i^2 handled by the Gauss-product sum
};

inline EvalResult regular_part_q1(const SingularParams& sp, const FieldPoint& pt, const Pole& pole,
                                  const SeriesControl& ctrl = {}, const RegularPartOptions& ropts = {}) {
  sp.validate();
  double d2 = 0.0;
  for (int i = 0; i < 3; ++i) d2 += (pt[i] - pole[i]) * (pt[i] - pole[i]);
  if (d2 == 0.0) return {singular_limit_constant(sp), 0.0, 0, true, Route::limit};
  auto g = geometry(pt, pole);
  double far = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (!(g.dist2 < 2.0 * g.mirror_dist2[i])) throw domain_error("regular part requires r^2 < 2 min(r_i^2)");
    far = std::max(far, 1.0 - g.dist2 / g.mirror_dist2[i]);
  }
  auto recipe = solution_recipe(SolutionKind::q1, sp);
  if (far <= ropts.series_limit) {
    try {
      return fa3_decomposed_unscaled(recipe.params, g.args, ctrl);
    } catch (const non_convergent&) {
    }
  }
  auto r = fa3_laplace(recipe.params, g.args, ctrl);
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) scale += recipe.params.b[i] * std::log(g.mirror_dist2[i] / g.dist2);
  scale = std::exp(scale);
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

/// r (r1^2)^alpha (r2^2)^beta (r3^2)^gamma q1 / k1, computed from the value of q1 itself.
inline double compensated_q1(const SingularParams& sp, const FieldPoint& pt, const Pole& pole,
                             const SeriesControl& ctrl = {}) {
  auto g = geometry(pt, pole);
  double q = evaluate(SolutionKind::q1, sp, pt, pole, 1.0, ctrl).value;
  double w = std::sqrt(g.dist2);
  for (int i = 0; i < 3; ++i) w *= std::pow(g.mirror_dist2[i], sp[i]);
  return w * q;
}

/// One row of the boundary-behaviour table: an axis and the quantity that must
/// vanish on the coordinate plane, sampled along coordinate -> 0.
struct BoundaryEntry {
  int axis = 0;
  bool dirichlet = false;  // true: q itself; false: coordinate^{2 param} dq/dcoordinate
  std::array<double, 3> coords{1e-2, 1e-3, 1e-4};
  std::array<double, 3> values{};
  double expected_exponent = 0.0;
  double measured_exponent = 0.0;
  bool pass = false;
};

struct BoundaryReport {
  SolutionKind kind = SolutionKind::q1;
  std::array<BoundaryEntry, 3> entries;
  bool pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const BoundaryEntry& e) { return e.pass; });
  }
};

namespace detail {

// Least-squares slope of log|v| against log c.
inline double log_log_slope(const std::array<double, 3>& c, const std::array<double, 3>& v) {
  double mx = 0, my = 0;
  for (int i = 0; i < 3; ++i) {
    mx += std::log(c[i]) / 3.0;
    my += std::log(std::abs(v[i])) / 3.0;
  }
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 3; ++i) {
    double dx = std::log(c[i]) - mx;
    sxy += dx * (std::log(std::abs(v[i])) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace detail

/// Measures the decay of each boundary quantity as its coordinate tends to 0.
/// Dirichlet-type entries follow the prefactor, coordinate^{1 - 2 param}; the
/// weighted flux of a regular axis behaves like coordinate^{1 + 2 param}
/// because the normal derivative itself vanishes linearly.
inline BoundaryReport boundary_property_table(SolutionKind kind, const SingularParams& sp, const Pole& pole,
                                              const SeriesControl& ctrl = {}, double tolerance = 0.05) {
  sp.validate();
  BoundaryReport rep;
  rep.kind = kind;
  auto flip = flipped_axes(kind);
  for (int axis = 0; axis < 3; ++axis) {
    BoundaryEntry& e = rep.entries[axis];
    e.axis = axis;
    e.dirichlet = flip[axis];
    e.expected_exponent = flip[axis] ? 1.0 - 2.0 * sp[axis] : 1.0 + 2.0 * sp[axis];
    for (int s = 0; s < 3; ++s) {
      FieldPoint pt{1.25 * pole.x0, 1.25 * pole.y0, 1.25 * pole.z0};
      pt[axis] = e.coords[s];
      if (e.dirichlet) {
        e.values[s] = evaluate(kind, sp, pt, pole, 1.0, ctrl).value;
      } else {
        double d = gradient(kind, sp, pt, pole, 1.0, ctrl)[axis];
        e.values[s] = std::pow(pt[axis], 2.0 * sp[axis]) * d;
      }
    }
    bool finite = std::all_of(e.values.begin(), e.values.end(), [](double v) { return std::isfinite(v) && v != 0.0; });
    e.measured_exponent = finite ? detail::log_log_slope(e.coords, e.values) : 0.0;
    e.pass = finite && e.measured_exponent > 0.0 && std::abs(e.measured_exponent - e.expected_exponent) <= tolerance;
  }
  return rep;
}

}  // namespace fundsol
