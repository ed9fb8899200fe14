#ifndef MORSE_CONTOUR_QUADRATURE_HPP
#define MORSE_CONTOUR_QUADRATURE_HPP

// Gauss-Jacobi quadrature tailored to the segment contour.  After mapping
// t = u - 1/2 the transform becomes
//
//   F(xi) = e^{-xi/2} Int_0^1 u^{q-1} (1-u)^{p-1} e^{xi u} du,
//
// i.e. a Jacobi weight times the analytic factor e^{xi u}.  A rule that
// absorbs the weight converges geometrically in the order even when the
// endpoint exponents are singular (0 < p, q < 1).

#include <Eigen/Core>

namespace morse {

// Nodes and weights on (0, 1) for the weight u^{q-1} (1-u)^{p-1}.
struct QuadratureRule {
  Eigen::ArrayXd nodes;    // ascending, strictly inside (0, 1)
  Eigen::ArrayXd weights;  // positive; sum equals B(q, p)
  double p = 0.0;
  double q = 0.0;
  int order = 0;
};

// Golub-Welsch construction: the symmetric tridiagonal Jacobi matrix of the
// monic recurrence is diagonalized (Eigen, tridiagonal QR); nodes are the
// eigenvalues mapped to (0, 1), weights come from the first eigenvector
// components scaled so their sum is exactly B(p, q).
// Requires p > 0, q > 0 (weight integrability) and 1 <= order <= 256;
// throws std::domain_error otherwise.
QuadratureRule gauss_jacobi_rule(double p, double q, int order);

// Applies a precomputed rule to F(xi) = e^{-xi/2} Sum_i w_i e^{xi u_i}.
// Requires xi > 0; throws std::range_error when xi > 700 (e^{xi u}
// overflows double before the e^{-xi/2} damping can act).
double line_laplace_F(double xi, const QuadratureRule& rule);

// Convenience: builds the (p, q, order) rule and applies it.
double line_laplace_F(double xi, double p, double q, int order);

// Relative error of the Euler-integral representation
//   1F1(alpha; gamma; xi) = [1 / B(alpha, gamma - alpha)] *
//       Int_0^1 u^{alpha-1} (1-u)^{gamma-alpha-1} e^{xi u} du
// with the integral done by this module and the series by kummer_1f1.
// Requires gamma > alpha > 0 and xi > 0 (std::domain_error otherwise).
double euler_integral_error(double alpha, double gamma, double xi, int order);

}  // namespace morse

#endif  // MORSE_CONTOUR_QUADRATURE_HPP
