#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fundsol/fundamental_solutions.hpp"
#include "fundsol/lauricella.hpp"
#include "fundsol/operator_verify.hpp"
#include "fundsol/special_functions.hpp"

namespace fundsol {

/// One measured quantity against its tolerance.
struct CheckRecord {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyConfig {
  SingularParams params{0.25, 0.25, 0.25};
  Pole pole{1.0, 1.0, 1.0};
  SeriesControl series = SeriesControl::tight();
  FDConfig fd;
  std::uint64_t seed = 20240611;
  unsigned workers = 0;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"gamma", "gauss", "lauricella", "solutions", "identities", "boundary"};
  return names;
}

namespace detail {

inline double rel_diff(double a, double b) {
  double d = std::abs(a - b);
  if (d == 0.0) return 0.0;
  return d / std::max(std::abs(a), std::abs(b));
}

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void check(const std::string& name, double measured, double tolerance) {
    bool ok = std::isfinite(measured) && measured <= tolerance;
    out_.push_back({suite_, name, measured, tolerance, ok});
  }
  // Records a failure for a case that threw instead of producing a number.
  void failed(const std::string& name, double tolerance) {
    out_.push_back({suite_, name, std::numeric_limits<double>::infinity(), tolerance, false});
  }
  template <class Fn>
  void guarded(const std::string& name, double tolerance, Fn&& fn) {
    try {
      check(name, fn(), tolerance);
    } catch (const std::exception&) {
      failed(name, tolerance);
    }
  }
  std::vector<CheckRecord> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckRecord> out_;
};

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_draw(rng_); }

 private:
  std::mt19937_64 rng_;
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::string params_tag(const SingularParams& sp) {
  return "(" + fmt(sp.alpha) + "," + fmt(sp.beta) + "," + fmt(sp.gamma) + ")";
}

// Random Lauricella parameters with c_i > b_i > 0, so every route applies.
inline LauricellaParams draw_params(Draw& d) {
  LauricellaParams p;
  p.a = d.uniform(0.3, 3.0);
  for (int k = 0; k < 3; ++k) {
    p.b[k] = d.uniform(0.1, 1.5);
    p.c[k] = p.b[k] + d.uniform(0.2, 2.0);
  }
  return p;
}

// Nonpositive arguments with |x|+|y|+|z| equal to `total`.
inline TripleArg draw_args(Draw& d, double total) {
  double w[3], s = 0.0;
  for (double& v : w) {
    v = d.uniform(0.05, 1.0);
    s += v;
  }
  return {-total * w[0] / s, -total * w[1] / s, -total * w[2] / s};
}

}  // namespace detail

// Identities of the gamma function and Pochhammer symbols.
inline std::vector<CheckRecord> gamma_checks(const VerifyConfig&) {
  detail::Recorder rec("gamma");
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  rec.check("log_gamma(1)", std::abs(log_gamma(1.0)), 1e-15);
  rec.check("gamma(1/2)=sqrt(pi)", detail::rel_diff(std::exp(log_gamma(0.5)), sqrt_pi), 1e-13);
  for (double a : {0.1, 0.3, 0.75, 1.7, 4.2}) {
    double lhs = log_gamma(a + 0.5);
    double rhs = 0.5 * std::log(std::numbers::pi) + log_gamma(2 * a) - (2 * a - 1) * std::log(2.0) - log_gamma(a);
    rec.check("duplication a=" + detail::fmt(a), std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-13);
  }
  for (double a : {0.2, 1.3, 6.5}) {
    for (int m : {1, 5, 17}) {
      double lhs = log_gamma(a + m);
      double rhs = log_gamma(a) + std::log(pochhammer(a, m));
      rec.check("shift a=" + detail::fmt(a) + " m=" + std::to_string(m),
                std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-13);
    }
  }
  double worst = 0.0;
  for (double a : {-1.5, 0.25, 3.0}) {
    for (int m = 0; m <= 20; ++m) {
      for (int n = 0; n <= 20; ++n) {
        worst = std::max(worst, detail::rel_diff(pochhammer(a, m + n), pochhammer(a, m) * pochhammer(a + m, n)));
      }
    }
  }
  rec.check("pochhammer split", worst, 1e-13);
  return rec.take();
}

// Criterion 1: Gauss summation at unit argument.
inline std::vector<CheckRecord> criterion_gauss_sum(const VerifyConfig&) {
  detail::Recorder rec("gauss");
  const double as[] = {-1.3, -0.4, 0.25, 0.9, 1.6};
  const double bs[] = {-0.6, 0.15, 0.5, 1.1, 2.3};
  const double gaps[] = {0.1, 0.575, 1.05, 1.525, 2.0};
  double worst = 0.0;
  int bad = 0;
  for (double a : as) {
    for (double b : bs) {
      for (double gap : gaps) {
        double c = a + b + gap;
        try {
          auto r = gauss_2f1(a, b, c, 1.0);
          worst = std::max(worst, detail::rel_diff(r.value, gauss_2f1_at_one(a, b, c)));
        } catch (const std::exception&) {
          ++bad;
        }
      }
    }
  }
  rec.check("grid 5x5x5: 2F1(x=1) vs gamma ratio", bad ? INFINITY : worst, 1e-10);
  // Anchors computed outside this library.
  rec.check("(1/4,1/4;1): gamma ratio", detail::rel_diff(gauss_2f1_at_one(0.25, 0.25, 1.0), 1.180340599016096226), 1e-13);
  rec.check("(0.3,0.4;2): summed series", detail::rel_diff(gauss_2f1_at_one(0.3, 0.4, 2.0), 1.1054192265872007202),
            1e-13);
  return rec.take();
}

// Criterion 2: the autotransformation in both directions, plus the other
// Pfaff form and Euler's form summed with the plain Maclaurin series.
inline std::vector<CheckRecord> criterion_pfaff(const VerifyConfig& cfg) {
  detail::Recorder rec("gauss");
  detail::Draw d(cfg.seed + 2);
  SeriesControl raw = SeriesControl::tight();
  double worst = 0.0, worst_alt = 0.0;
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    double a = d.uniform(-1.5, 2.5), b = d.uniform(-1.5, 2.5), c = d.uniform(0.3, 3.5);
    double x = d.uniform(-5.0, 0.9);
    try {
      double lhs = gauss_2f1(a, b, c, x).value;
      double w = x / (x - 1.0);
      double rhs = std::pow(1.0 - x, -b) * gauss_2f1(c - a, b, c, w).value;
      worst = std::max(worst, detail::rel_diff(lhs, rhs));
      double alt = x < 0.0 ? std::pow(1.0 - x, -a) * gauss_2f1_series(a, c - b, c, w, raw, 200000).value
                           : std::pow(1.0 - x, c - a - b) * gauss_2f1_series(c - a, c - b, c, x, raw, 200000).value;
      worst_alt = std::max(worst_alt, detail::rel_diff(lhs, alt));
    } catch (const std::exception&) {
      ++bad;
    }
  }
  rec.check("100 random: 2F1(x) vs (1-x)^-b 2F1(c-a,b;c;x/(x-1))", bad ? INFINITY : worst, 1e-10);
  rec.check("100 random: vs (1-x)^-a form and Euler form, plain series", bad ? INFINITY : worst_alt, 1e-10);
  rec.check("oracle 2F1(-0.7,1.3;2.1;-4)", detail::rel_diff(gauss_2f1(-0.7, 1.3, 2.1, -4.0).value, 2.3634364666605184596),
            1e-10);
  rec.check("oracle 2F1(0.5,0.75;1.25;0.9)",
            detail::rel_diff(gauss_2f1(0.5, 0.75, 1.25, 0.9).value, 1.7994186104169422361), 1e-10);
  rec.check("oracle 2F1(-25.5,0.5;1.5;0.7)",
            detail::rel_diff(gauss_2f1(-25.5, 0.5, 1.5, 0.7).value, 0.20673852864869687031), 1e-10);
  return rec.take();
}

// Criterion 3: pairwise agreement of the series, decomposition and integral routes.
inline std::vector<CheckRecord> criterion_routes(const VerifyConfig& cfg) {
  detail::Recorder rec("lauricella");
  detail::Draw d(cfg.seed + 3);
  const SeriesControl& ctrl = cfg.series;
  double sd = 0, si = 0, di = 0, far = 0;
  int bad = 0;
  for (int i = 0; i < 50; ++i) {
    auto p = detail::draw_params(d);
    auto t = detail::draw_args(d, d.uniform(0.05, 0.9));
    try {
      double s = fa3_series(p, t, ctrl).value;
      double m = fa3_decomposed(p, t, ctrl).value;
      double q = fa3_integral(p, t);
      sd = std::max(sd, detail::rel_diff(s, m));
      si = std::max(si, detail::rel_diff(s, q));
      di = std::max(di, detail::rel_diff(m, q));
    } catch (const std::exception&) {
      ++bad;
    }
  }
  for (int i = 0; i < 20; ++i) {
    auto p = detail::draw_params(d);
    auto t = detail::draw_args(d, d.uniform(1.0 + 1e-9, 3.0));
    try {
      far = std::max(far, detail::rel_diff(fa3_decomposed(p, t, ctrl).value, fa3_integral(p, t)));
    } catch (const std::exception&) {
      ++bad;
    }
  }
  double inf = std::numeric_limits<double>::infinity();
  rec.check("50 sets: series vs decomposed", bad ? inf : sd, 1e-7);
  rec.check("50 sets: series vs integral", bad ? inf : si, 1e-7);
  rec.check("50 sets: decomposed vs integral", bad ? inf : di, 1e-7);
  rec.check("20 sets, sum in (1,3]: decomposed vs integral", bad ? inf : far, 1e-7);
  return rec.take();
}

// Criterion 4: truncated triple series against the truncated Gauss-product sum.
inline std::vector<CheckRecord> criterion_decomposition(const VerifyConfig& cfg) {
  detail::Recorder rec("lauricella");
  detail::Draw d(cfg.seed + 4);
  double worst = 0.0;
  int bad = 0;
  for (int i = 0; i < 20; ++i) {
    LauricellaParams p;
    p.a = d.uniform(-1.5, 3.0);
    for (int k = 0; k < 3; ++k) {
      p.b[k] = d.uniform(-1.0, 2.0);
      p.c[k] = d.uniform(0.3, 3.0);
    }
    TripleArg t{d.uniform(-0.15, 0.15), d.uniform(-0.15, 0.15), d.uniform(-0.15, 0.15)};
    try {
      worst = std::max(worst, std::abs(fa3_series(p, t, cfg.series).value - fa3_decomposed(p, t, cfg.series).value));
    } catch (const std::exception&) {
      ++bad;
    }
  }
  rec.check("20 small-argument sets: |series - decomposition|", bad ? INFINITY : worst, 1e-8);
  return rec.take();
}

// Criterion 5: parameter-shift derivatives against Richardson finite differences.
inline std::vector<CheckRecord> criterion_derivatives(const VerifyConfig& cfg) {
  detail::Recorder rec("lauricella");
  detail::Draw d(cfg.seed + 5);
  const SeriesControl& ctrl = cfg.series;
  for (int i = 0; i < 10; ++i) {
    auto p = detail::draw_params(d);
    auto t = detail::draw_args(d, d.uniform(0.3, 3.0));
    double worst = 0.0;
    bool ok = true;
    try {
      auto f = [&](const std::array<double, 3>& x) { return fa3_auto(p, {x[0], x[1], x[2]}, ctrl).value; };
      auto fd = derivatives_fd(f, {t.x, t.y, t.z}, cfg.fd, false);
      for (int k = 0; k < 3; ++k) {
        int o1[3] = {0, 0, 0};
        o1[k] = 1;
        double first = fa3_derivative(p, t, o1[0], o1[1], o1[2], ctrl).value;
        o1[k] = 2;
        double second = fa3_derivative(p, t, o1[0], o1[1], o1[2], ctrl).value;
        worst = std::max({worst, detail::rel_diff(first, fd.grad[k]), detail::rel_diff(second, fd.hess[k][k])});
      }
    } catch (const std::exception&) {
      ok = false;
    }
    std::string name = "case " + std::to_string(i) + " args (" + detail::fmt(t.x) + "," + detail::fmt(t.y) + "," +
                       detail::fmt(t.z) + ")";
    if (ok) {
      rec.check(name, worst, 1e-5);
    } else {
      rec.failed(name, 1e-5);
    }
  }
  return rec.take();
}

// Criterion 6: L q = 0 away from the pole for every kind and parameter triple.
inline std::vector<CheckRecord> criterion_residuals(const VerifyConfig& cfg) {
  detail::Recorder rec("solutions");
  auto samples = interior_samples(cfg.pole, 20, cfg.seed);
  std::vector<SingularParams> grid;
  for (double a : {0.1, 0.25, 0.4}) {
    for (double b : {0.1, 0.25, 0.4}) {
      for (double c : {0.1, 0.25, 0.4}) grid.push_back({a, b, c});
    }
  }
  auto in_grid = std::any_of(grid.begin(), grid.end(), [&](const SingularParams& s) {
    return s.alpha == cfg.params.alpha && s.beta == cfg.params.beta && s.gamma == cfg.params.gamma;
  });
  if (!in_grid) grid.push_back(cfg.params);
  for (const auto& sp : grid) {
    for (auto kind : all_kinds) {
      std::string name = to_string(kind) + " " + detail::params_tag(sp) + " max over 20 samples";
      rec.guarded(name, 1e-4,
                  [&] { return residual_report(kind, sp, cfg.pole, samples, cfg.fd, cfg.series, cfg.workers).max_normalized; });
    }
  }
  return rec.take();
}

inline std::vector<TripleArg> system_test_args() { return {{-0.2, -0.1, -0.15}, {-0.5, -0.4, -0.3}, {-2.0, -0.5, -3.5}}; }

// Criterion 7: the eight Lauricella-system solutions.
inline std::vector<CheckRecord> criterion_system(const VerifyConfig& cfg) {
  detail::Recorder rec("lauricella");
  for (auto kind : all_kinds) {
    for (const auto& t : system_test_args()) {
      std::string name = "omega" + to_string(kind).substr(1) + " at (" + detail::fmt(t.x) + "," + detail::fmt(t.y) +
                         "," + detail::fmt(t.z) + ")";
      rec.guarded(name, 1e-4, [&] {
        auto r = lauricella_system_residual(kind, cfg.params, t, cfg.fd, cfg.series);
        return std::max({r[0], r[1], r[2]});
      });
    }
  }
  return rec.take();
}

// Criterion 8: the seven weight identities on the test-field catalogue.
inline std::vector<CheckRecord> criterion_identities(const VerifyConfig& cfg) {
  detail::Recorder rec("identities");
  const std::vector<FieldPoint> points = {{1.0, 1.0, 1.0}, {0.7, 1.3, 0.9}};
  for (const auto& id : constructive_identities()) {
    for (const auto& field : test_field_catalogue()) {
      double worst = 0.0;
      for (const auto& pt : points) {
        worst = std::max(worst, constructive_identity_residual(id, cfg.params, field.f, pt, cfg.fd));
      }
      rec.check("weight " + identity_name(id) + ", u = " + field.name, worst, 1e-5);
    }
  }
  return rec.take();
}

inline std::vector<std::array<double, 3>> approach_rays() { return {{1, 1, 1}, {1, 0, 0}, {0, 0, 1}}; }

inline FieldPoint along_ray(const Pole& pole, const std::array<double, 3>& dir, double r) {
  double n = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
  return {pole.x0 + r * dir[0] / n, pole.y0 + r * dir[1] / n, pole.z0 + r * dir[2] / n};
}

// Criterion 9: r^{-1} singularity and the limit constant.
inline std::vector<CheckRecord> criterion_singularity(const VerifyConfig& cfg) {
  detail::Recorder rec("solutions");
  const Pole pole = cfg.pole;
  struct Anchor {
    SingularParams sp;
    double constant;  // computed outside this library
  };
  const std::vector<Anchor> anchors = {{{0.25, 0.25, 0.25}, 0.22847329052223181269},
                                       {{0.3, 0.2, 0.4}, 0.25218548170994149813},
                                       {{0.1, 0.25, 0.4}, 0.24212824116087562472}};
  for (const auto& an : anchors) {
    std::string tag = detail::params_tag(an.sp);
    double target = singular_limit_constant(an.sp);
    rec.check("limit constant " + tag + " vs independent value", detail::rel_diff(target, an.constant), 1e-12);
    for (const auto& dir : approach_rays()) {
      std::string ray = "(" + detail::fmt(dir[0]) + "," + detail::fmt(dir[1]) + "," + detail::fmt(dir[2]) + ")";
      rec.guarded("q1 " + tag + " ray " + ray + " gap at r=1e-4", 1e-3, [&] {
        return std::abs(compensated_q1(an.sp, along_ray(pole, dir, 1e-4), pole, cfg.series) / target - 1.0);
      });
      rec.guarded("regular part vs q1 " + tag + " ray " + ray + " at r=1e-2", 1e-7, [&] {
        auto pt = along_ray(pole, dir, 1e-2);
        return detail::rel_diff(regular_part_q1(an.sp, pt, pole, cfg.series).value,
                                compensated_q1(an.sp, pt, pole, cfg.series));
      });
    }
  }
  // Same comparison where the Gauss-product sum of the regular part is used.
  rec.guarded("regular part (Gauss-product route) vs q1", 1e-7, [&] {
    FieldPoint pt{0.3, 0.2, 0.25};
    Pole p{1, 1, 1};
    return detail::rel_diff(regular_part_q1(cfg.params, pt, p, cfg.series).value,
                            compensated_q1(cfg.params, pt, p, cfg.series));
  });
  for (auto kind : all_kinds) {
    if (kind == SolutionKind::q1) continue;
    for (const auto& dir : approach_rays()) {
      std::string ray = "(" + detail::fmt(dir[0]) + "," + detail::fmt(dir[1]) + "," + detail::fmt(dir[2]) + ")";
      rec.guarded(to_string(kind) + " ray " + ray + " |slope + 1|", 0.02, [&] {
        double r1 = 1e-3, r2 = 1e-4;
        double v1 = evaluate(kind, cfg.params, along_ray(pole, dir, r1), pole, 1.0, cfg.series).value;
        double v2 = evaluate(kind, cfg.params, along_ray(pole, dir, r2), pole, 1.0, cfg.series).value;
        double slope = std::log(std::abs(v2 / v1)) / std::log(r2 / r1);
        return std::abs(slope + 1.0);
      });
    }
  }
  return rec.take();
}

// Criterion 10: behaviour on the coordinate planes.
inline std::vector<CheckRecord> criterion_boundary(const VerifyConfig& cfg) {
  detail::Recorder rec("boundary");
  const char* axes = "xyz";
  for (auto kind : all_kinds) {
    try {
      auto rep = boundary_property_table(kind, cfg.params, cfg.pole, cfg.series);
      for (const auto& e : rep.entries) {
        std::string name = to_string(kind) + " " + (e.dirichlet ? "value" : "weighted flux") + " at " + axes[e.axis] +
                           "=0, exponent " + detail::fmt(e.measured_exponent) + " vs " +
                           detail::fmt(e.expected_exponent);
        double gap = e.measured_exponent > 0.0 ? std::abs(e.measured_exponent - e.expected_exponent) : INFINITY;
        rec.check(name, gap, 0.05);
      }
    } catch (const std::exception&) {
      rec.failed(to_string(kind) + " boundary table", 0.05);
    }
  }
  return rec.take();
}

// Criterion 11: exchange symmetry, homogeneity and axis-permutation equivariance.
inline std::vector<CheckRecord> criterion_invariants(const VerifyConfig& cfg) {
  detail::Recorder rec("solutions");
  detail::Draw d(cfg.seed + 11);
  const SeriesControl& ctrl = cfg.series;
  // Swapping x and y (with alpha and beta) maps each kind to this one.
  const SolutionKind swap_xy[8] = {SolutionKind::q1, SolutionKind::q3, SolutionKind::q2, SolutionKind::q4,
                                   SolutionKind::q5, SolutionKind::q7, SolutionKind::q6, SolutionKind::q8};
  for (auto kind : all_kinds) {
    double sym = 0, hom = 0, perm = 0;
    bool ok = true;
    try {
      for (int i = 0; i < 6; ++i) {
        SingularParams sp{d.uniform(0.05, 0.45), d.uniform(0.05, 0.45), d.uniform(0.05, 0.45)};
        FieldPoint pt{d.uniform(0.2, 3.0), d.uniform(0.2, 3.0), d.uniform(0.2, 3.0)};
        Pole pole{d.uniform(0.2, 3.0), d.uniform(0.2, 3.0), d.uniform(0.2, 3.0)};
        double v = evaluate(kind, sp, pt, pole, 1.0, ctrl).value;
        sym = std::max(sym, detail::rel_diff(v, evaluate(kind, sp, as_point(pole), as_pole(pt), 1.0, ctrl).value));
        for (double lam : {0.5, 2.0, 10.0}) {
          FieldPoint sp_pt{lam * pt.x, lam * pt.y, lam * pt.z};
          Pole sp_pole{lam * pole.x0, lam * pole.y0, lam * pole.z0};
          double scaled = evaluate(kind, sp, sp_pt, sp_pole, 1.0, ctrl).value;
          hom = std::max(hom, detail::rel_diff(scaled, std::pow(lam, homogeneity_degree(sp)) * v));
        }
        SingularParams swapped{sp.beta, sp.alpha, sp.gamma};
        double w = evaluate(swap_xy[index_of(kind)], swapped, {pt.y, pt.x, pt.z}, {pole.y0, pole.x0, pole.z0}, 1.0,
                            ctrl)
                       .value;
        perm = std::max(perm, detail::rel_diff(v, w));
      }
    } catch (const std::exception&) {
      ok = false;
    }
    double inf = std::numeric_limits<double>::infinity();
    rec.check(to_string(kind) + " point-pole exchange", ok ? sym : inf, 1e-12);
    rec.check(to_string(kind) + " joint homogeneity", ok ? hom : inf, 1e-9);
    rec.check(to_string(kind) + " x-y permutation", ok ? perm : inf, 1e-12);
  }
  return rec.take();
}

struct Criterion {
  int id;
  std::string suite;
  std::string title;
  double time_limit_s;  // <= 0 when the criterion states no limit
  std::function<std::vector<CheckRecord>(const VerifyConfig&)> run;
};

inline const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "gauss", "Gauss summation at unit argument", 1.0, criterion_gauss_sum},
      {2, "gauss", "Autotransformation both directions", 1.0, criterion_pfaff},
      {3, "lauricella", "F_A route equivalence", 60.0, criterion_routes},
      {4, "lauricella", "Decomposition into Gauss functions", 10.0, criterion_decomposition},
      {5, "lauricella", "Differentiation by parameter shift", 0.0, criterion_derivatives},
      {6, "solutions", "Operator residuals of all eight solutions", 300.0, criterion_residuals},
      {7, "lauricella", "Lauricella system for all eight solutions", 0.0, criterion_system},
      {8, "identities", "Constructive weight identities", 0.0, criterion_identities},
      {9, "solutions", "Singularity order and limit constant", 0.0, criterion_singularity},
      {10, "boundary", "Boundary behaviour on coordinate planes", 0.0, criterion_boundary},
      {11, "solutions", "Symmetry, homogeneity, permutation invariants", 0.0, criterion_invariants},
  };
  return list;
}

struct CriterionOutcome {
  int id = 0;
  std::string title;
  std::vector<CheckRecord> checks;
  double seconds = 0.0;
  bool pass = false;
};

/// Runs one criterion. With `timed`, the stated runtime limit becomes one more check.
inline CriterionOutcome run_criterion(const Criterion& c, const VerifyConfig& cfg, bool timed = true) {
  CriterionOutcome out;
  out.id = c.id;
  out.title = c.title;
  auto t0 = std::chrono::steady_clock::now();
  try {
    out.checks = c.run(cfg);
  } catch (const std::exception& e) {
    out.checks.push_back({c.suite, std::string("aborted: ") + e.what(), INFINITY, 0.0, false});
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (timed && c.time_limit_s > 0.0) {
    out.checks.push_back({c.suite, "criterion " + std::to_string(c.id) + " runtime [s]", out.seconds, c.time_limit_s,
                          out.seconds <= c.time_limit_s});
  }
  out.pass = !out.checks.empty() &&
             std::all_of(out.checks.begin(), out.checks.end(), [](const CheckRecord& r) { return r.pass; });
  return out;
}

/// All checks belonging to one suite, in criterion order. Runtime checks are
/// left out unless `timed`, so repeated runs give identical reports.
inline std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyConfig& cfg, bool timed = false) {
  std::vector<CheckRecord> out;
  if (suite == "gamma") return gamma_checks(cfg);
  for (const auto& c : acceptance_criteria()) {
    if (c.suite != suite) continue;
    auto r = run_criterion(c, cfg, timed);
    out.insert(out.end(), r.checks.begin(), r.checks.end());
  }
  return out;
}

}  // namespace fundsol
