#include "morse/contour_quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "morse/specfun.hpp"

namespace morse {

QuadratureRule gauss_jacobi_rule(double p, double q, int order) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::domain_error("gauss_jacobi_rule: requires p > 0 and q > 0 (integrable weight)");
  if (order < 1 || order > 256)
    throw std::domain_error("gauss_jacobi_rule: order must lie in [1, 256]");

  // Standard-form Jacobi weight on (-1, 1): (1-z)^A (1+z)^B with A = p - 1,
  // B = q - 1; the map u = (1+z)/2 carries it onto u^{q-1} (1-u)^{p-1}.
  const double A = p - 1.0;
  const double B = q - 1.0;

  // Monic three-term recurrence coefficients (Jacobi matrix).
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(order > 1 ? order - 1 : 0);
  diag(0) = (B - A) / (A + B + 2.0);
  for (int j = 1; j < order; ++j) {
    const double s = 2.0 * j + A + B;
    diag(j) = (B * B - A * A) / (s * (s + 2.0));
    double b2;
    if (j == 1) {
      b2 = 4.0 * (1.0 + A) * (1.0 + B) / ((A + B + 2.0) * (A + B + 2.0) * (A + B + 3.0));
    } else {
      b2 = 4.0 * j * (j + A) * (j + B) * (j + A + B) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(j - 1) = std::sqrt(b2);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi_rule: tridiagonal eigensolve failed");

  // Golub-Welsch: node_i = eigenvalue_i (ascending from Eigen), weight_i =
  // mu0 * (first eigenvector component)^2.  The (0,1) rescale folds mu0 =
  // 2^{A+B+1} B(p, q) and the du = dz/2 Jacobians into exactly B(p, q).
  QuadratureRule rule;
  rule.p = p;
  rule.q = q;
  rule.order = order;
  rule.nodes = (es.eigenvalues().array() + 1.0) * 0.5;
  rule.weights = beta_function(p, q) * es.eigenvectors().row(0).array().square();
  return rule;
}

double line_laplace_F(double xi, const QuadratureRule& rule) {
  if (!(xi > 0.0)) throw std::domain_error("line_laplace_F: requires xi > 0");
  if (xi > 700.0)
    throw std::range_error("line_laplace_F: xi > 700 overflows the nodal exponentials");
  return std::exp(-0.5 * xi) * (rule.weights * (xi * rule.nodes).exp()).sum();
}

double line_laplace_F(double xi, double p, double q, int order) {
  return line_laplace_F(xi, gauss_jacobi_rule(p, q, order));
}

double euler_integral_error(double alpha, double gamma, double xi, int order) {
  if (!(alpha > 0.0) || !(gamma > alpha))
    throw std::domain_error("euler_integral_error: requires gamma > alpha > 0");
  if (!(xi > 0.0)) throw std::domain_error("euler_integral_error: requires xi > 0");
  // Euler weight u^{alpha-1} (1-u)^{gamma-alpha-1} is the (p, q) =
  // (gamma - alpha, alpha) rule of this module.
  const QuadratureRule rule = gauss_jacobi_rule(gamma - alpha, alpha, order);
  const double integral = (rule.weights * (xi * rule.nodes).exp()).sum();
  const double series = kummer_1f1(alpha, gamma, xi).value;
  const double euler = integral / beta_function(alpha, gamma - alpha);
  return std::abs(euler - series) / std::abs(series);
}

}  // namespace morse
