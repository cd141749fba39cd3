#include <doctest.h>

#include <random>

#include "fundsol/fundamental_solutions.hpp"
#include "fundsol/operator_verify.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace fundsol;
namespace oc = fundsol::oracle;

namespace {

const SingularParams ref_params{0.3, 0.15, 0.45};
const FieldPoint ref_point{1.0, 2.0, 1.5};
const Pole ref_pole{0.8, 1.1, 2.0};

}  // namespace

TEST_CASE("all eight kinds match high-precision values at a reference point") {
  const double want[8] = {oc::q1_ref_point, oc::q2_ref_point, oc::q3_ref_point, oc::q4_ref_point,
                          oc::q5_ref_point, oc::q6_ref_point, oc::q7_ref_point, oc::q8_ref_point};
  for (auto kind : all_kinds) {
    CAPTURE(to_string(kind));
    auto r = evaluate(kind, ref_params, ref_point, ref_pole);
    CHECK(r.converged);
    CHECK(rel_err(r.value, want[index_of(kind)]) < 1e-12);
  }
}

TEST_CASE("gradient matches high-precision values and finite differences") {
  auto g = grad_q1(ref_params, ref_point, ref_pole);
  CHECK(rel_err(g[0], oc::grad_q1_x_ref_point) < 1e-12);
  CHECK(rel_err(g[1], oc::grad_q1_y_ref_point) < 1e-12);
  CHECK(rel_err(g[2], oc::grad_q1_z_ref_point) < 1e-12);
  for (auto kind : all_kinds) {
    CAPTURE(to_string(kind));
    auto f = [&](const std::array<double, 3>& x) {
      return evaluate(kind, ref_params, {x[0], x[1], x[2]}, ref_pole, 1.0, SeriesControl::tight()).value;
    };
    auto d = derivatives_fd(f, {ref_point.x, ref_point.y, ref_point.z}, FDConfig{});
    auto exact = gradient(kind, ref_params, ref_point, ref_pole);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(exact[i] - d.grad[i]) < 1e-8 * (std::abs(exact[i]) + 1e-3));
  }
}

TEST_CASE("kind table") {
  CHECK(to_string(SolutionKind::q5) == "q5");
  CHECK(parse_kind("q8") == SolutionKind::q8);
  CHECK_FALSE(parse_kind("q9").has_value());
  CHECK(flipped_axes(SolutionKind::q1) == std::array<bool, 3>{false, false, false});
  CHECK(flipped_axes(SolutionKind::q3) == std::array<bool, 3>{false, true, false});
  CHECK(flipped_axes(SolutionKind::q6) == std::array<bool, 3>{true, false, true});
  CHECK(flipped_axes(SolutionKind::q8) == std::array<bool, 3>{true, true, true});

  SingularParams sp{0.1, 0.2, 0.3};
  auto r = solution_recipe(SolutionKind::q4, sp);
  CHECK(r.params.b == std::array<double, 3>{0.1, 0.2, 0.7});
  CHECK(r.params.c == std::array<double, 3>{0.2, 0.4, 1.4});
  CHECK(r.params.a == doctest::Approx(1.5));
  CHECK(r.axis_power[2] == doctest::Approx(0.4));
  CHECK(r.axis_power[0] == 0.0);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(evaluate(SolutionKind::q1, ref_params, {1, 1, 1}, {1, 1, 1}), coincident_pole);
  CHECK_THROWS_WITH(evaluate(SolutionKind::q1, ref_params, {1, 1, 1}, {1, 1, 1}), "coincident pole");
  CHECK_THROWS_AS(evaluate(SolutionKind::q1, ref_params, {-1, 1, 1}, {1, 1, 1}), domain_error);
  CHECK_THROWS_AS(evaluate(SolutionKind::q1, ref_params, {1, 1, 1}, {1, 0, 1}), domain_error);
  CHECK_THROWS_AS(evaluate(SolutionKind::q1, {0.5, 0.2, 0.2}, {1, 1, 1}, {2, 1, 1}), domain_error);
  CHECK_THROWS_AS(evaluate(SolutionKind::q1, {0.0, 0.2, 0.2}, {1, 1, 1}, {2, 1, 1}), domain_error);
}

TEST_CASE("normalization constant scales linearly") {
  double one = evaluate(SolutionKind::q6, ref_params, ref_point, ref_pole).value;
  CHECK(rel_err(evaluate(SolutionKind::q6, ref_params, ref_point, ref_pole, -2.5).value, -2.5 * one) < 1e-15);
}

TEST_CASE("limit constant matches high-precision values") {
  CHECK(rel_err(singular_limit_constant({0.25, 0.25, 0.25}), oc::singular_limit_quarter) < 1e-13);
  CHECK(rel_err(singular_limit_constant({0.3, 0.2, 0.4}), oc::singular_limit_p3_p2_p4) < 1e-13);
  CHECK(rel_err(singular_limit_constant({0.1, 0.25, 0.4}), oc::singular_limit_p1_p25_p4) < 1e-13);
}

TEST_CASE("regular part near the pole") {
  SingularParams sp{0.3, 0.2, 0.4};
  Pole pole{1, 1, 1};
  auto at = regular_part_q1(sp, {1, 1, 1}, pole);
  CHECK(at.route == Route::limit);
  CHECK(at.value == singular_limit_constant(sp));
  double prev = 1.0;
  for (double r : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    FieldPoint pt{1 + r / std::sqrt(3.0), 1 + r / std::sqrt(3.0), 1 + r / std::sqrt(3.0)};
    double reg = regular_part_q1(sp, pt, pole).value;
    CHECK(rel_err(reg, compensated_q1(sp, pt, pole)) < 1e-12);
    double gap = std::abs(reg / at.value - 1.0);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-5);
  // Farther out the Gauss-product sum is used.
  FieldPoint far{0.3, 0.2, 0.25};
  auto r = regular_part_q1(sp, far, pole);
  CHECK(r.route == Route::decomposed);
  CHECK(rel_err(r.value, compensated_q1(sp, far, pole)) < 1e-12);
}

TEST_CASE("property: point-pole exchange, homogeneity and permutation") {
  std::mt19937_64 rng(31);
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * unit_draw(rng); };
  for (int i = 0; i < 12; ++i) {
    SingularParams sp{u(0.05, 0.45), u(0.05, 0.45), u(0.05, 0.45)};
    FieldPoint pt{u(0.1, 4), u(0.1, 4), u(0.1, 4)};
    Pole pole{u(0.1, 4), u(0.1, 4), u(0.1, 4)};
    double lam = u(0.1, 20);
    for (auto kind : all_kinds) {
      CAPTURE(to_string(kind));
      double v = evaluate(kind, sp, pt, pole).value;
      CHECK(rel_err(evaluate(kind, sp, as_point(pole), as_pole(pt)).value, v) < 1e-12);
      double scaled = evaluate(kind, sp, {lam * pt.x, lam * pt.y, lam * pt.z},
                               {lam * pole.x0, lam * pole.y0, lam * pole.z0})
                          .value;
      CHECK(rel_err(scaled, std::pow(lam, homogeneity_degree(sp)) * v) < 1e-9);
      CHECK(v > 0.0);
    }
    // Rotating the axes x -> y -> z -> x maps q2 (x flipped) to q3 (y flipped).
    SingularParams rot{sp.gamma, sp.alpha, sp.beta};
    FieldPoint rpt{pt.z, pt.x, pt.y};
    Pole rpole{pole.z0, pole.x0, pole.y0};
    CHECK(rel_err(evaluate(SolutionKind::q3, rot, rpt, rpole).value, evaluate(SolutionKind::q2, sp, pt, pole).value) <
          1e-12);
    CHECK(rel_err(evaluate(SolutionKind::q1, rot, rpt, rpole).value, evaluate(SolutionKind::q1, sp, pt, pole).value) <
          1e-12);
  }
}

TEST_CASE("boundary table for every kind") {
  SingularParams sp{0.3, 0.2, 0.4};
  for (auto kind : all_kinds) {
    CAPTURE(to_string(kind));
    auto rep = boundary_property_table(kind, sp, {1, 1.2, 0.9});
    CHECK(rep.pass());
    auto flip = flipped_axes(kind);
    for (const auto& e : rep.entries) {
      CHECK(e.dirichlet == flip[e.axis]);
      CHECK(std::abs(e.measured_exponent - e.expected_exponent) < 0.05);
    }
  }
}

TEST_CASE("far-field decay follows the homogeneity degree") {
  SingularParams sp{0.25, 0.25, 0.25};
  Pole pole{1, 1, 1};
  double v1 = evaluate(SolutionKind::q1, sp, {100, 100, 100}, pole).value;
  double v2 = evaluate(SolutionKind::q1, sp, {1000, 1000, 1000}, pole).value;
  // q1 decays like |x|^{-(1 + 2 sum)} for a fixed pole as the point recedes along the diagonal.
  double slope = std::log(v2 / v1) / std::log(10.0);
  CHECK(slope == doctest::Approx(-2.5).epsilon(0.01));
}
