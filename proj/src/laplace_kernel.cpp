#include "morse/laplace_kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "morse/stencil.hpp"

namespace morse {

KernelExponents kernel_exponents(double k, double beta) {
  if (!(k > 0.0)) throw std::domain_error("kernel_exponents: requires k > 0");
  if (!(beta >= 0.0)) throw std::domain_error("kernel_exponents: requires beta >= 0");
  const double s = 0.5 * (2.0 * beta + 1.0);
  return {0.5 * k - s + 1.0, -0.5 * k - s + 1.0};
}

double kernel_function(double t, const KernelExponents& e) {
  if (!(t > -0.5 && t < 0.5))
    throw std::domain_error("kernel_function: t must lie in the open segment (-1/2, 1/2)");
  return std::pow(0.5 - t, e.p - 1.0) * std::pow(t + 0.5, e.q - 1.0);
}

double kernel_ode_residual(double t, const KernelExponents& e, double k, double beta) {
  const double h = fd_step(t);
  if (!(t - 2.0 * h > -0.5 && t + 2.0 * h < 0.5))
    throw std::domain_error("kernel_ode_residual: stencil leaves the open segment");
  auto f = [&e](double u) { return kernel_function(u, e); };
  auto tf = [&e](double u) { return (u * u - 0.25) * kernel_function(u, e); };
  return deriv1_5p(tf, t, h) + ((2.0 * beta - 1.0) * t - 0.5 * k) * f(t);
}

double boundary_term(double t, const KernelExponents& e, double xi) {
  if (!(t >= -0.5 && t <= 0.5))
    throw std::domain_error("boundary_term: t must lie in [-1/2, 1/2]");
  if (!(xi >= 0.0)) throw std::domain_error("boundary_term: requires xi >= 0");
  if (t == 0.5) {
    if (e.p > 0.0) return 0.0;
    throw std::domain_error("boundary_term: endpoint t = +1/2 does not vanish (p <= 0)");
  }
  if (t == -0.5) {
    if (e.q > 0.0) return 0.0;
    throw std::domain_error("boundary_term: endpoint t = -1/2 does not vanish (q <= 0)");
  }
  return std::pow(0.5 - t, e.p) * std::pow(t + 0.5, e.q) * std::exp(xi * t);
}

namespace {

// Shared sampling for the transformed-ODE residual: the four ODE terms at
// xi, each finite-checked, so raw and scaled variants agree on the physics.
struct OdeTerms {
  double stiff;     // xi F''
  double drift;     // -(2 beta - 1) F'
  double well;      // -xi F / 4
  double coupling;  // k F / 2
};

OdeTerms sample_terms(const std::function<double(double)>& F, double xi, double k, double beta) {
  if (!(xi > 0.0)) throw std::domain_error("transformed_ode_residual: requires xi > 0");
  const double h = fd_step(xi);
  const double fm2 = F(xi - 2.0 * h), fm1 = F(xi - h), f0 = F(xi);
  const double fp1 = F(xi + h), fp2 = F(xi + 2.0 * h);
  for (double v : {fm2, fm1, f0, fp1, fp2})
    if (!std::isfinite(v))
      throw std::runtime_error("transformed_ode_residual: non-finite sample of F");
  const double d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  const double d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  return {xi * d2, -(2.0 * beta - 1.0) * d1, -0.25 * xi * f0, 0.5 * k * f0};
}

}  // namespace

double transformed_ode_residual(const std::function<double(double)>& F, double xi, double k,
                                double beta) {
  const OdeTerms t = sample_terms(F, xi, k, beta);
  return t.stiff + t.drift + t.well + t.coupling;
}

double transformed_ode_residual_scaled(const std::function<double(double)>& F, double xi,
                                       double k, double beta) {
  const OdeTerms t = sample_terms(F, xi, k, beta);
  const double scale = std::max({std::abs(t.stiff), std::abs(t.drift), std::abs(t.well),
                                 std::abs(t.coupling)});
  if (scale == 0.0) return 0.0;
  return std::abs(t.stiff + t.drift + t.well + t.coupling) / scale;
}

}  // namespace morse
