#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fundsol/finite_difference.hpp"
#include "fundsol/fundamental_solutions.hpp"
#include "fundsol/lauricella.hpp"
#include "fundsol/parallel.hpp"

namespace fundsol {

using ScalarField = std::function<double(const FieldPoint&)>;

/// The six terms of the operator at a point: u_ii and (2 param_i / x_i) u_i.
struct OperatorTerms {
  std::array<double, 3> second{};
  std::array<double, 3> drift{};

  double residual() const { return second[0] + second[1] + second[2] + drift[0] + drift[1] + drift[2]; }
  double scale() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s = std::max({s, std::abs(second[i]), std::abs(drift[i])});
    return s;
  }
};

inline constexpr double residual_floor = 1e-30;

inline double normalized(double residual, double scale) { return std::abs(residual) / (scale + residual_floor); }

/// Operator terms with arbitrary real coefficient exponents (the constructive
/// identities need exponents such as 1 - alpha outside the admissible range).
template <class U>
OperatorTerms operator_terms_fd(U&& u, const std::array<double, 3>& params, const FieldPoint& pt, const FDConfig& fd) {
  for (int i = 0; i < 3; ++i) {
    if (!(pt[i] - 2.0 * fd_step(pt[i], fd.h) > 0.0)) throw domain_error("stencil leaves the positive octant");
  }
  auto wrapped = [&](const std::array<double, 3>& x) { return u(FieldPoint{x[0], x[1], x[2]}); };
  auto d = derivatives_fd(wrapped, {pt.x, pt.y, pt.z}, fd, false);
  OperatorTerms t;
  for (int i = 0; i < 3; ++i) {
    t.second[i] = d.hess[i][i];
    t.drift[i] = 2.0 * params[i] / pt[i] * d.grad[i];
  }
  return t;
}

template <class U>
double apply_operator_fd(U&& u, const std::array<double, 3>& params, const FieldPoint& pt, const FDConfig& fd) {
  return operator_terms_fd(u, params, pt, fd).residual();
}

template <class U>
double apply_operator_fd(U&& u, const SingularParams& sp, const FieldPoint& pt, const FDConfig& fd) {
  sp.validate();
  return apply_operator_fd(u, std::array<double, 3>{sp.alpha, sp.beta, sp.gamma}, pt, fd);
}

struct ResidualSample {
  FieldPoint point;
  double residual = 0.0;
  double local_scale = 0.0;
  double normalized_residual = 0.0;
};

struct ResidualReport {
  std::vector<ResidualSample> samples;
  double max_normalized = 0.0;
  double median_normalized = 0.0;
};

inline void summarize(ResidualReport& rep) {
  std::vector<double> v;
  for (const auto& s : rep.samples) v.push_back(s.normalized_residual);
  if (v.empty()) return;
  rep.max_normalized = *std::max_element(v.begin(), v.end());
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  rep.median_normalized = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Residual of L applied to the solution of the given kind, at each sample.
inline ResidualReport residual_report(SolutionKind kind, const SingularParams& sp, const Pole& pole,
                                      const std::vector<FieldPoint>& samples, const FDConfig& fd = {},
                                      const SeriesControl& ctrl = SeriesControl::tight(), unsigned workers = 0) {
  sp.validate();
  ResidualReport rep;
  rep.samples.resize(samples.size());
  parallel_for(
      samples.size(),
      [&](std::size_t i) {
        auto u = [&](const FieldPoint& p) { return evaluate(kind, sp, p, pole, 1.0, ctrl).value; };
        auto t = operator_terms_fd(u, {sp.alpha, sp.beta, sp.gamma}, samples[i], fd);
        auto& s = rep.samples[i];
        s.point = samples[i];
        s.residual = t.residual();
        s.local_scale = t.scale();
        s.normalized_residual = normalized(s.residual, s.local_scale);
      },
      workers);
  summarize(rep);
  return rep;
}

/// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Seeded interior points of the box [lo, hi]^3 kept at least `clearance` from the pole.
inline std::vector<FieldPoint> interior_samples(const Pole& pole, int count, std::uint64_t seed, double lo = 0.3,
                                                double hi = 2.0, double clearance = 0.1) {
  std::mt19937_64 rng(seed);
  std::vector<FieldPoint> out;
  while (static_cast<int>(out.size()) < count) {
    FieldPoint p{lo + (hi - lo) * unit_draw(rng), lo + (hi - lo) * unit_draw(rng), lo + (hi - lo) * unit_draw(rng)};
    double d2 = 0.0;
    for (int i = 0; i < 3; ++i) d2 += (p[i] - pole[i]) * (p[i] - pole[i]);
    if (d2 >= clearance * clearance) out.push_back(p);
  }
  return out;
}

/// Left-hand sides of the three Lauricella equations for parameters `sys`,
/// applied to the function w, each normalized by its largest term.
template <class W>
std::array<double, 3> lauricella_system_residual(const LauricellaParams& sys, W&& w, const TripleArg& t,
                                                 const FDConfig& fd) {
  auto d = derivatives_fd(w, {t.x, t.y, t.z}, fd, true);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    double ti = t[i];
    std::vector<double> terms;
    terms.push_back(ti * (1.0 - ti) * d.hess[i][i]);
    for (int j = 0; j < 3; ++j) {
      if (j != i) terms.push_back(-ti * t[j] * d.hess[i][j]);
    }
    terms.push_back((sys.c[i] - (sys.a + sys.b[i] + 1.0) * ti) * d.grad[i]);
    for (int j = 0; j < 3; ++j) {
      if (j != i) terms.push_back(-sys.b[i] * t[j] * d.grad[j]);
    }
    terms.push_back(-sys.a * sys.b[i] * d.value);
    double sum = 0.0, scale = 0.0;
    for (double v : terms) {
      sum += v;
      scale = std::max(scale, std::abs(v));
    }
    out[i] = normalized(sum, scale);
  }
  return out;
}

/// The eighth-part solution of the Lauricella system attached to `kind`:
/// prod_i |t_i|^{e_i} F_A(kind parameters; t). The absolute value only fixes
/// a constant phase, since the arguments are negative.
inline double system_solution(SolutionKind kind, const SingularParams& sp, const TripleArg& t,
                              const SeriesControl& ctrl = SeriesControl::tight()) {
  auto r = solution_recipe(kind, sp);
  double v = fa3_auto(r.params, t, ctrl).value;
  for (int i = 0; i < 3; ++i) {
    if (r.axis_power[i] != 0.0) v *= std::pow(std::abs(t[i]), r.axis_power[i]);
  }
  return v;
}

inline std::array<double, 3> lauricella_system_residual(SolutionKind kind, const SingularParams& sp,
                                                        const TripleArg& t, const FDConfig& fd = {},
                                                        const SeriesControl& ctrl = SeriesControl::tight()) {
  sp.validate();
  auto sys = solution_recipe(SolutionKind::q1, sp).params;
  auto w = [&](const std::array<double, 3>& x) { return system_solution(kind, sp, {x[0], x[1], x[2]}, ctrl); };
  return lauricella_system_residual(sys, w, t, fd);
}

/// Axes carrying the weight coordinate^{1 - 2 param} in a constructive identity.
using WeightAxes = std::array<bool, 3>;

/// The seven weight patterns: x, y, z, xy, xz, yz, xyz.
inline std::vector<WeightAxes> constructive_identities() {
  return {{true, false, false}, {false, true, false}, {false, false, true}, {true, true, false},
          {true, false, true},  {false, true, true},  {true, true, true}};
}

inline std::string identity_name(const WeightAxes& w) {
  std::string s;
  const char* names = "xyz";
  for (int i = 0; i < 3; ++i) {
    if (w[i]) s += names[i];
  }
  return s;
}

/// |L(w u) - w L'(u)| normalized by the larger of the two sides' term scales,
/// where w is the weight and L' has 1 - param on the weighted axes.
template <class U>
double constructive_identity_residual(const WeightAxes& axes, const SingularParams& sp, U&& u, const FieldPoint& pt,
                                      const FDConfig& fd = {}) {
  sp.validate();
  std::array<double, 3> base{sp.alpha, sp.beta, sp.gamma}, swapped = base;
  for (int i = 0; i < 3; ++i) {
    if (axes[i]) swapped[i] = 1.0 - base[i];
  }
  auto weight = [&](const FieldPoint& p) {
    double w = 1.0;
    for (int i = 0; i < 3; ++i) {
      if (axes[i]) w *= std::pow(p[i], 1.0 - 2.0 * base[i]);
    }
    return w;
  };
  auto product = [&](const FieldPoint& p) { return weight(p) * u(p); };
  auto lhs = operator_terms_fd(product, base, pt, fd);
  auto rhs = operator_terms_fd(u, swapped, pt, fd);
  double w = weight(pt);
  double scale = std::max(lhs.scale(), std::abs(w) * rhs.scale());
  return normalized(lhs.residual() - w * rhs.residual(), scale);
}

struct TestField {
  std::string name;
  ScalarField f;
};

inline std::vector<TestField> test_field_catalogue() {
  return {
      {"one", [](const FieldPoint&) { return 1.0; }},
      {"x^2", [](const FieldPoint& p) { return p.x * p.x; }},
      {"x^2+y^2+z^2", [](const FieldPoint& p) { return p.x * p.x + p.y * p.y + p.z * p.z; }},
      {"sin(x)*y", [](const FieldPoint& p) { return std::sin(p.x) * p.y; }},
      {"exp(-x-y-z)", [](const FieldPoint& p) { return std::exp(-p.x - p.y - p.z); }},
  };
}

}  // namespace fundsol
