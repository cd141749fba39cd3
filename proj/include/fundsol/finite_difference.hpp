#pragma once

#include <array>
#include <cmath>

#include "fundsol/errors.hpp"

namespace fundsol {

/// Central-difference settings. The step along each axis is h times the
/// magnitude of the local coordinate (h itself when the coordinate is 0).
struct FDConfig {
  double h = 1e-3;
  bool richardson = true;  // combine steps s and s/2 for fourth-order accuracy

  void validate() const {
    if (!(h > 0.0 && h < 0.5)) throw domain_error("finite-difference step h must lie in (0, 0.5)");
  }
};

struct Derivatives3 {
  double value = 0.0;
  std::array<double, 3> grad{};
  std::array<std::array<double, 3>, 3> hess{};
};

inline double fd_step(double coord, double h) { return coord != 0.0 ? h * std::abs(coord) : h; }

/// Value, gradient and Hessian of f at x by central differences.
/// The mixed entries are only formed when `mixed` is set.
template <class F>
Derivatives3 derivatives_fd(F&& f, const std::array<double, 3>& x, const FDConfig& fd, bool mixed = false) {
  fd.validate();
  Derivatives3 out;
  out.value = f(x);
  std::array<double, 3> step{};
  for (int i = 0; i < 3; ++i) step[i] = fd_step(x[i], fd.h);

  auto shifted = [&](int i, double di, int j = -1, double dj = 0.0) {
    auto y = x;
    y[i] += di;
    if (j >= 0) y[j] += dj;
    return f(y);
  };
  auto combine = [&](double coarse, double fine) { return fd.richardson ? fine + (fine - coarse) / 3.0 : coarse; };

  for (int i = 0; i < 3; ++i) {
    auto axis = [&](double s, double& d1, double& d2) {
      double fp = shifted(i, s), fm = shifted(i, -s);
      d1 = (fp - fm) / (2.0 * s);
      d2 = (fp - 2.0 * out.value + fm) / (s * s);
    };
    double d1h, d2h;
    axis(step[i], d1h, d2h);
    if (fd.richardson) {
      double d1f, d2f;
      axis(0.5 * step[i], d1f, d2f);
      out.grad[i] = combine(d1h, d1f);
      out.hess[i][i] = combine(d2h, d2f);
    } else {
      out.grad[i] = d1h;
      out.hess[i][i] = d2h;
    }
  }
  if (mixed) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        auto cross = [&](double si, double sj) {
          return (shifted(i, si, j, sj) - shifted(i, si, j, -sj) - shifted(i, -si, j, sj) + shifted(i, -si, j, -sj)) /
                 (4.0 * si * sj);
        };
        double coarse = cross(step[i], step[j]);
        double v = fd.richardson ? combine(coarse, cross(0.5 * step[i], 0.5 * step[j])) : coarse;
        out.hess[i][j] = out.hess[j][i] = v;
      }
    }
  }
  return out;
}

}  // namespace fundsol
