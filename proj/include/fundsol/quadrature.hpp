#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fundsol/errors.hpp"

namespace fundsol {

/// Nodes on [0, 1] with weights summing to one.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight t^p (1-t)^q on [0, 1], normalized so the
/// weights sum to one (the Beta-function constant is divided out).
/// Built by Golub-Welsch from the monic Jacobi recurrence on [-1, 1].
inline QuadratureRule gauss_jacobi_unit(int n, double p, double q) {
  if (n < 1) throw domain_error("quadrature needs at least one node");
  if (!(p > -1.0) || !(q > -1.0)) throw domain_error("Jacobi exponents must exceed -1");
  // On [-1, 1] the weight is (1-x)^al (1+x)^be with x = 2t - 1.
  const double al = q, be = p;
  const double ab = al + be;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  diag(0) = (be - al) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double s = 2.0 * k + ab;
    diag(k) = (be * be - al * al) / (s * (s + 2.0));
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + al) * (k + be) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.5 * (diag(0) + 1.0);
    rule.weights[0] = 1.0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw error("Golub-Welsch eigensolve failed");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = eig.eigenvectors()(0, i);
    rule.nodes[i] = 0.5 * (eig.eigenvalues()(i) + 1.0);
    rule.weights[i] = v * v;
    total += v * v;
  }
  for (double& w : rule.weights) w /= total;
  return rule;
}

/// Gauss-Legendre on [0, 1], weights summing to one.
inline QuadratureRule gauss_legendre_unit(int n) { return gauss_jacobi_unit(n, 0.0, 0.0); }

}  // namespace fundsol
