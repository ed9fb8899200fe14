#ifndef MORSE_LAPLACE_KERNEL_HPP
#define MORSE_LAPLACE_KERNEL_HPP

// The line-Laplace kernel on the cut segment t in (-1/2, 1/2).
//
// Writing the bound-state transform F(xi) = Int f(t) e^{xi t} dt over the
// segment turns the transformed radial equation into a first-order ODE for
// the kernel,
//
//   d/dt [ (t^2 - 1/4) f ] + [ (2 beta - 1) t - k/2 ] f = 0,
//
// whose regular solution is f(t) = (1/2 - t)^{p-1} (t + 1/2)^{q-1} with the
// exponent pair below.  Everything here checks that algebra numerically.

#include <functional>

namespace morse {

// Endpoint exponents of the segment kernel.
struct KernelExponents {
  double p = 0.0;  // exponent at t = +1/2 is p - 1
  double q = 0.0;  // exponent at t = -1/2 is q - 1

  bool operator==(const KernelExponents&) const = default;
};

// p = k/2 - (2 beta + 1)/2 + 1,  q = -k/2 - (2 beta + 1)/2 + 1, so that
// p - q = k and p + q = 1 - 2 beta identically.
// Requires k > 0 and beta >= 0 (std::domain_error otherwise).
KernelExponents kernel_exponents(double k, double beta);

// f(t) = (1/2 - t)^{p-1} (t + 1/2)^{q-1} on the open segment.
// Throws std::domain_error when t is outside (-1/2, 1/2).
double kernel_function(double t, const KernelExponents& e);

// Residual of the kernel ODE at t, using the 5-point stencil with
// h = max(1e-4, 1e-6 |t|):
//   d/dt[(t^2 - 1/4) f] + [(2 beta - 1) t - k/2] f.
// Zero (to truncation error) when e = kernel_exponents(k, beta).
// Throws std::domain_error when the stencil leaves the open segment.
double kernel_ode_residual(double t, const KernelExponents& e, double k, double beta);

// Integration-by-parts boundary term (t^2 - 1/4) f(t) e^{xi t}, written in
// the endpoint-stable form (1/2 - t)^p (t + 1/2)^q e^{xi t} (sign absorbed:
// this is -(t^2 - 1/4) f, the combination whose endpoint limits matter).
// At t = +1/2 the limit is 0 when p > 0; at t = -1/2 it is 0 when q > 0.
// Throws std::domain_error at an endpoint whose exponent is nonpositive
// (the term diverges or stays finite-nonzero, so the contour is invalid).
double boundary_term(double t, const KernelExponents& e, double xi);

// Residual of the transformed radial ODE
//   xi F'' - (2 beta - 1) F' + (k/2 - xi/4) F
// at xi > 0 for an arbitrary candidate transform F, via the same stencil
// policy.  Non-finite samples of F propagate as std::runtime_error.
double transformed_ode_residual(const std::function<double(double)>& F, double xi, double k,
                                double beta);

// Same residual divided by the largest magnitude among its four terms
// (xi F'', (2 beta - 1) F', xi F / 4, k F / 2); 0 when all terms vanish.
// Scale-free: suitable for tolerance checks on solutions of any amplitude.
double transformed_ode_residual_scaled(const std::function<double(double)>& F, double xi,
                                       double k, double beta);

}  // namespace morse

#endif  // MORSE_LAPLACE_KERNEL_HPP
