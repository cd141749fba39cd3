#pragma once

#include <algorithm>
#include <cmath>

#include "fundsol/errors.hpp"
#include "fundsol/special_functions.hpp"

namespace fundsol {

namespace detail {

// Terminating or positive-term power series sum_n (p)_n/((c)_n n!) z^n.
inline double kummer_series(double p, double c, double z) {
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < 4000; ++n) {
    term *= (p + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (term == 0.0) break;
    if (n > std::abs(z) && std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace detail

/// Confluent hypergeometric 1F1(b; c; -w) for w >= 0.
///
/// Small w: Kummer's transformation e^{-w} 1F1(c-b; c; w), a positive-term
/// series when c > b > 0. Large w: the algebraic asymptotic expansion, with the
/// exponentially small companion dropped.
inline double kummer_negative(double b, double c, double w) {
  if (w < 0.0) throw domain_error("kummer_negative expects w >= 0");
  if (detail::is_nonpositive_integer(c)) throw pole_error("1F1: c is a nonpositive integer");
  if (w == 0.0) return 1.0;
  if (detail::is_nonpositive_integer(b)) return detail::kummer_series(b, c, -w);
  if (detail::is_nonpositive_integer(c - b)) return std::exp(-w) * detail::kummer_series(c - b, c, w);

  const double threshold = 45.0 + 4.0 * std::max(0.0, 2.0 * b - c) + std::abs(b - c);
  if (w < threshold) return std::exp(-w) * detail::kummer_series(c - b, c, w);

  double lead = reciprocal_gamma(c - b);
  if (lead == 0.0) return 0.0;
  auto gc = log_abs_gamma(c);
  double sum = 1.0, term = 1.0, smallest = 1.0;
  for (int s = 0; s < 200; ++s) {
    term *= (b + s) * (b - c + 1.0 + s) / ((s + 1.0) * w);
    double mag = std::abs(term);
    if (mag >= smallest) break;  // asymptotic series starts to diverge
    smallest = mag;
    sum += term;
    if (mag <= 1e-17 * std::abs(sum)) break;
  }
  return gc.sign * std::exp(gc.log_abs - b * std::log(w)) * lead * sum;
}

}  // namespace fundsol
