#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "fundsol/errors.hpp"

namespace fundsol {

/// Truncation control shared by every series evaluator.
struct SeriesControl {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  int max_terms = 500;  // per summation index

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0) || max_terms < 1) {
      throw domain_error("SeriesControl requires abs_tol > 0, rel_tol > 0, max_terms >= 1");
    }
  }

  double target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }

  /// Tolerances used by the verification code, where values are differentiated numerically.
  static SeriesControl tight() { return {1e-17, 1e-16, 2000}; }
};

/// Which evaluation path produced a value.
enum class Route {
  none,
  series,      // direct power series
  pfaff,       // 2F1 through the autotransformation
  euler,       // 2F1 through Euler's transformation (positive-term series)
  gauss_sum,   // 2F1 at unit argument via the gamma-ratio
  decomposed,  // F_A via products of Gauss functions
  integral,    // F_A via the Euler triple integral
  laplace,     // F_A via the one-dimensional Laplace-Kummer integral
  limit,       // closed-form limit value
};

inline std::string_view to_string(Route r) {
  switch (r) {
    case Route::none: return "none";
    case Route::series: return "series";
    case Route::pfaff: return "pfaff";
    case Route::euler: return "euler";
    case Route::gauss_sum: return "gauss_sum";
    case Route::decomposed: return "decomposed";
    case Route::integral: return "integral";
    case Route::laplace: return "laplace";
    case Route::limit: return "limit";
  }
  return "unknown";
}

struct EvalResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int terms_used = 0;
  bool converged = false;
  Route route = Route::none;
};

class non_convergent : public error {
 public:
  non_convergent(const std::string& what, EvalResult partial) : error(what), partial_(partial) {}
  const EvalResult& partial() const noexcept { return partial_; }

 private:
  EvalResult partial_;
};

/// Geometric tail estimate for a series whose term (or shell) magnitudes are
/// fed one at a time. The estimate is only offered once the last three
/// successive ratios are all below one.
class TailMonitor {
 public:
  /// `next` is the magnitude of the first term not yet added to the sum.
  /// Returns the tail bound next / (1 - ratio), or +inf while the ratio test fails.
  /// `ratio_floor` is a known limit of the term ratio when the caller has one.
  double observe(double next, double ratio_floor = 0.0) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (next == 0.0) return 0.0;
    double ratio = prev_ > 0.0 ? next / prev_ : inf;
    prev_ = next;
    ratios_[count_ % 3] = ratio;
    ++count_;
    if (count_ < 3) return inf;
    double worst = std::max({ratios_[0], ratios_[1], ratios_[2], ratio_floor});
    if (!(worst < 1.0)) return inf;
    return next / (1.0 - worst);
  }

  void seed(double first_magnitude) { prev_ = first_magnitude; }

 private:
  double prev_ = 0.0;
  std::array<double, 3> ratios_{};
  int count_ = 0;
};

}  // namespace fundsol
