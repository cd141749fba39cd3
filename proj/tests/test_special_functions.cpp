#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fundsol/kummer.hpp"
#include "fundsol/operator_verify.hpp"
#include "fundsol/quadrature.hpp"
#include "fundsol/special_functions.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace fundsol;
namespace oc = fundsol::oracle;

TEST_CASE("log_gamma matches high-precision values") {
  const std::pair<double, double> cases[] = {
      {0.1, oc::lgamma_0_1},   {0.25, oc::lgamma_0_25},  {0.5, oc::lgamma_0_5},    {0.75, oc::lgamma_0_75},
      {1.5, oc::lgamma_1_5},   {3.3, oc::lgamma_3_3},    {7.25, oc::lgamma_7_25},  {10.5, oc::lgamma_10_5},
      {25.0, oc::lgamma_25},   {100.7, oc::lgamma_100_7}, {1e-3, oc::lgamma_1e_minus_3}};
  for (auto [x, want] : cases) {
    CAPTURE(x);
    CHECK(std::abs(log_gamma(x) - want) <= 1e-14 * std::max(1.0, std::abs(want)));
  }
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("log_gamma rejects nonpositive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), domain_error);
  CHECK_THROWS_AS(log_gamma(NAN), domain_error);
}

TEST_CASE("reflection gives sign and magnitude for negative arguments") {
  auto g = log_abs_gamma(-0.5);  // gamma(-1/2) = -2 sqrt(pi)
  CHECK(g.sign == -1);
  CHECK(rel_err(std::exp(g.log_abs), 2.0 * std::sqrt(std::numbers::pi)) < 1e-14);
  auto h = log_abs_gamma(-1.5);  // 4 sqrt(pi) / 3
  CHECK(h.sign == 1);
  CHECK(rel_err(std::exp(h.log_abs), 4.0 * std::sqrt(std::numbers::pi) / 3.0) < 1e-14);
  CHECK_THROWS_AS(log_abs_gamma(-2.0), pole_error);
  CHECK(reciprocal_gamma(-3.0) == 0.0);
}

TEST_CASE("pochhammer symbols") {
  CHECK(pochhammer(0.37, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == doctest::Approx(120.0).epsilon(1e-15));
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(-2.0, 2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
  // Large n goes through logarithms.
  CHECK(rel_err(pochhammer(2.5, 150), std::exp(log_gamma(152.5) - log_gamma(2.5))) < 1e-12);
  CHECK_THROWS_AS(pochhammer(1.0, -1), domain_error);
}

TEST_CASE("property: (a)_{m+n} = (a)_m (a+m)_n") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    double a = -4.0 + 10.0 * unit_draw(rng);
    int m = static_cast<int>(unit_draw(rng) * 25), n = static_cast<int>(unit_draw(rng) * 25);
    double lhs = pochhammer(a, m + n), rhs = pochhammer(a, m) * pochhammer(a + m, n);
    CAPTURE(a);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), 1e-300));
  }
}

TEST_CASE("property: gamma duplication formula") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    double a = 0.05 + 20.0 * unit_draw(rng);
    double lhs = log_gamma(a) + log_gamma(a + 0.5);
    double rhs = 0.5 * std::log(std::numbers::pi) + (1.0 - 2.0 * a) * std::log(2.0) + log_gamma(2.0 * a);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("2F1 at unit argument") {
  CHECK(rel_err(gauss_2f1_at_one(0.25, 0.25, 1.0), oc::gauss_at_one_quarter_quarter_one) < 1e-14);
  CHECK(rel_err(gauss_2f1_at_one(0.3, 0.4, 2.0), oc::gauss_series_0_3_0_4_2_at_one) < 1e-14);
  auto r = gauss_2f1(0.3, 0.4, 2.0, 1.0);
  CHECK(r.route == Route::gauss_sum);
  CHECK(r.converged);
  CHECK_THROWS_AS(gauss_2f1_at_one(0.5, 0.5, 1.0), domain_error);
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 0.9, 1.0), domain_error);
}

TEST_CASE("2F1 matches high-precision values") {
  CHECK(rel_err(gauss_2f1(-0.7, 1.3, 2.1, -4.0).value, oc::gauss_2f1_m0_7_1_3_2_1_m4) < 1e-12);
  CHECK(rel_err(gauss_2f1(0.5, 0.75, 1.25, 0.9).value, oc::gauss_2f1_0_5_0_75_1_25_0_9) < 1e-12);
  CHECK(rel_err(gauss_2f1(-25.5, 0.5, 1.5, 0.7).value, oc::gauss_2f1_m25_5_0_5_1_5_0_7) < 1e-12);
}

TEST_CASE("2F1 elementary cases") {
  for (double x : {-3.0, -0.5, 0.25, 0.5, 0.9}) {
    CAPTURE(x);
    CHECK(rel_err(gauss_2f1(1.0, 1.0, 2.0, x).value, -std::log1p(-x) / x) < 1e-12);
    CHECK(rel_err(gauss_2f1(0.7, 1.9, 1.9, x).value, std::pow(1.0 - x, -0.7)) < 1e-12);
    double b = 0.8, c = 1.7;
    double poly = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0));
    CHECK(rel_err(gauss_2f1(-2.0, b, c, x).value, poly) < 1e-12);
  }
  CHECK(gauss_2f1(0.3, 0.4, 1.5, 0.0).value == 1.0);
}

TEST_CASE("2F1 route selection and errors") {
  CHECK(gauss_2f1(0.3, 0.4, 1.5, -2.0).route == Route::pfaff);
  CHECK(gauss_2f1(0.3, 0.4, 1.5, 0.5).route == Route::series);
  CHECK(gauss_2f1(-3.5, 0.4, 1.5, 0.5).route == Route::euler);
  CHECK_THROWS_AS(gauss_2f1(0.3, 0.4, 1.5, 1.5), domain_error);
  CHECK_THROWS_AS(gauss_2f1(0.3, 0.4, -2.0, 0.5), pole_error);
  CHECK_THROWS_AS(gauss_2f1(0.3, 0.4, 1.5, NAN), domain_error);
}

TEST_CASE("2F1 series reports non-convergence within its budget") {
  CHECK_THROWS_AS(gauss_2f1_series(0.5, 0.5, 1.0, 0.99, SeriesControl{}, 10), non_convergent);
  try {
    gauss_2f1_series(0.5, 0.5, 1.0, 0.99, SeriesControl{}, 10);
  } catch (const non_convergent& e) {
    CHECK_FALSE(e.partial().converged);
    CHECK(e.partial().terms_used >= 10);
  }
}

TEST_CASE("property: autotransformation") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    double a = -2.0 + 5.0 * unit_draw(rng), b = -2.0 + 5.0 * unit_draw(rng), c = 0.2 + 4.0 * unit_draw(rng);
    double x = -8.0 + 8.9 * unit_draw(rng);
    double lhs = gauss_2f1(a, b, c, x).value;
    double rhs = std::pow(1.0 - x, -b) * gauss_2f1(c - a, b, c, x / (x - 1.0)).value;
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(x);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("property: Euler transformation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    double a = -1.0 + 3.0 * unit_draw(rng), b = -1.0 + 3.0 * unit_draw(rng), c = 0.3 + 3.0 * unit_draw(rng);
    double x = 0.8 * unit_draw(rng);
    double lhs = gauss_2f1(a, b, c, x).value;
    double rhs = std::pow(1.0 - x, c - a - b) * gauss_2f1(c - a, c - b, c, x).value;
    CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("Gauss-Jacobi rule integrates its moments") {
  for (auto [p, q] : {std::pair{0.0, 0.0}, {-0.5, 0.3}, {0.7, -0.8}, {2.5, 1.5}}) {
    auto rule = gauss_jacobi_unit(12, p, q);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-13));
    // E[t^k] under the normalized weight is (p+1)_k / (p+q+2)_k.
    for (int k = 1; k <= 20; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
      CAPTURE(k);
      CHECK(rel_err(s, pochhammer(p + 1.0, k) / pochhammer(p + q + 2.0, k)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(gauss_jacobi_unit(0, 0.0, 0.0), domain_error);
  CHECK_THROWS_AS(gauss_jacobi_unit(4, -1.0, 0.0), domain_error);
}

TEST_CASE("confluent function at negative argument") {
  for (double w : {0.0, 0.3, 5.0, 40.0, 200.0, 5000.0}) {
    CAPTURE(w);
    double want = w == 0.0 ? 1.0 : -std::expm1(-w) / w;
    CHECK(rel_err(kummer_negative(1.0, 2.0, w), want) < 1e-12);
    CHECK(rel_err(kummer_negative(0.8, 0.8, w), std::exp(-w)) < 1e-12);
  }
  // Terminating case: 1F1(-2; c; -w) is a quadratic.
  double c = 1.5, w = 3.0;
  CHECK(rel_err(kummer_negative(-2.0, c, w), 1.0 + 2.0 * w / c + w * w / (c * (c + 1.0))) < 1e-13);
  CHECK_THROWS_AS(kummer_negative(0.5, 1.0, -1.0), domain_error);
}
