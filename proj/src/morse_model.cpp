#include "morse/morse_model.hpp"

#include <cmath>
#include <stdexcept>

#include "morse/integrate.hpp"
#include "morse/specfun.hpp"
#include "morse/stencil.hpp"

namespace morse {

MorseParameters::MorseParameters(double mass_, double hbar_, double a_, double V0_)
    : mass(mass_), hbar(hbar_), a(a_), V0(V0_) {
  if (!(mass > 0.0) || !(hbar > 0.0) || !(a > 0.0) || !(V0 > 0.0))
    throw std::domain_error("MorseParameters: mass, hbar, a, V0 must all be positive");
  k = 2.0 * std::sqrt(2.0 * mass * V0) / (a * hbar);
}

double potential(double x, const MorseParameters& P) {
  const double d = 1.0 - std::exp(-P.a * x);
  return P.V0 * d * d;
}

double xi_of_x(double x, const MorseParameters& P) { return P.k * std::exp(-P.a * x); }

double beta_of_E(double E, const MorseParameters& P) {
  if (E > P.V0) throw std::domain_error("beta_of_E: continuum state (E > V0)");
  return std::sqrt(2.0 * P.mass * (P.V0 - E)) / (P.a * P.hbar);
}

std::optional<int> n_max(const MorseParameters& P) {
  if (P.k <= 1.0) return std::nullopt;
  // Largest n with 2n + 1 < k, strictly: beta_n = 0 is not normalizable.
  const double half = 0.5 * (P.k - 1.0);
  int nm = static_cast<int>(std::floor(half));
  if (static_cast<double>(nm) == half) --nm;
  return nm;
}

namespace {

void require_admissible(int n, const MorseParameters& P, const char* who) {
  const std::optional<int> nm = n_max(P);
  if (n < 0 || !nm || n > *nm)
    throw std::domain_error(std::string(who) + ": level above dissociation (2n+1 >= k)");
}

}  // namespace

double level_beta(int n, const MorseParameters& P) {
  require_admissible(n, P, "level_beta");
  return 0.5 * (P.k - 2.0 * n - 1.0);
}

double energy(int n, const MorseParameters& P) {
  require_admissible(n, P, "energy");
  const double u = 1.0 - (2.0 * n + 1.0) / P.k;
  return P.V0 * (1.0 - u * u);
}

double confluent_F(double xi, int n, const MorseParameters& P) {
  require_admissible(n, P, "confluent_F");
  if (!(xi > 0.0)) throw std::domain_error("confluent_F: requires xi > 0");
  const double beta = level_beta(n, P);
  return std::exp(-0.5 * xi) * std::pow(xi, 2.0 * beta) *
         kummer_1f1(-static_cast<double>(n), 2.0 * beta + 1.0, xi).value;
}

namespace {

// Int_0^inf xi^{s-1} e^{-xi} L_{na}^{aa}(xi) L_{nb}^{ab}(xi) dxi, s > 0.
//
// Split at xi = 1.  The lower piece is integrated as-is when s >= 1
// (integrand continuous at 0; adaptive splitting absorbs the Hoelder
// endpoint for s < 2) and through the substitution w = xi^s when s < 1,
// which regularizes the xi^{s-1} divergence (dw = s xi^{s-1} dxi).  The
// upper limit truncates where the analytic envelope xi^{c} e^{-xi},
// c = s - 1 + na + nb, falls below 1e-18 of its peak -- an envelope, not
// a sample scan, so a Laguerre zero cannot fake an early tail.
double laguerre_pair_integral(double s, int na, double aa, int nb, double ab) {
  auto pair = [&](double xi) { return laguerre(na, aa, xi) * laguerre(nb, ab, xi); };

  const double c = s - 1.0 + na + nb;
  double xi_hi = std::max(c, 1.0) + 41.5;  // e^{-41.5} < 1e-18
  if (c > 0.0) {
    const double peak = std::max(c, 1.0);
    for (int it = 0; it < 30; ++it)
      xi_hi = peak + 41.5 + c * std::log(xi_hi / peak);
  }

  // Tolerance budget: absolute, scaled to the Gamma-function magnitude of
  // the integral so the 1e-10 normalization contract has headroom.
  const double mag = std::exp(ln_gamma(std::max(s, 1.0) + na + nb));
  const double tol = 1e-14 * std::max(1.0, mag);

  double lower;
  if (s < 1.0) {
    lower = adaptive_simpson(
        [&](double w) {
          const double xi = std::pow(w, 1.0 / s);
          return std::exp(-xi) * pair(xi) / s;
        },
        0.0, 1.0, tol);
  } else {
    lower = adaptive_simpson([&](double xi) { return std::pow(xi, s - 1.0) * std::exp(-xi) * pair(xi); },
                             0.0, 1.0, tol);
  }
  const double upper = adaptive_simpson(
      [&](double xi) { return std::pow(xi, s - 1.0) * std::exp(-xi) * pair(xi); }, 1.0, xi_hi,
      tol);
  return lower + upper;
}

}  // namespace

BoundState normalize(int n, const MorseParameters& P) {
  require_admissible(n, P, "normalize");
  const double beta = level_beta(n, P);
  // dx = -dxi/(a xi): Int |psi|^2 dx = (norm^2/a) Int xi^{2 beta - 1} e^{-xi} L^2 dxi.
  const double I = laguerre_pair_integral(2.0 * beta, n, 2.0 * beta, n, 2.0 * beta) / P.a;
  BoundState s;
  s.n = n;
  s.beta_n = beta;
  s.energy = energy(n, P);
  s.norm = 1.0 / std::sqrt(I);
  s.mu = -beta;
  return s;
}

double wavefunction(double x, const BoundState& state, const MorseParameters& P) {
  const double xi = xi_of_x(x, P);
  // xi overflows double for x deep in the left wall; the true value has
  // long since underflowed through e^{-xi/2}.
  if (!std::isfinite(xi)) return 0.0;
  const double arg = state.beta_n * std::log(xi) - 0.5 * xi;
  // Envelope underflow: the polynomial factor cannot rescue e^{-745}.
  if (arg < -745.0) return 0.0;
  return state.norm * std::exp(arg) * laguerre(state.n, 2.0 * state.beta_n, xi);
}

namespace {

struct PsiTerms {
  double second;    // psi''
  double coupling;  // (2m/hbar^2)(E - V) psi
};

PsiTerms psi_terms(const BoundState& state, double x, const MorseParameters& P) {
  const double h = fd_step(x);
  auto psi = [&](double u) { return wavefunction(u, state, P); };
  const double fm2 = psi(x - 2.0 * h), fm1 = psi(x - h), f0 = psi(x);
  const double fp1 = psi(x + h), fp2 = psi(x + 2.0 * h);
  for (double v : {fm2, fm1, f0, fp1, fp2})
    if (!std::isfinite(v)) throw std::runtime_error("schrodinger_residual: non-finite sample");
  const double d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  const double w = 2.0 * P.mass / (P.hbar * P.hbar);
  return {d2, w * (state.energy - potential(x, P)) * f0};
}

}  // namespace

double schrodinger_residual(const BoundState& state, double x, const MorseParameters& P) {
  const PsiTerms t = psi_terms(state, x, P);
  return t.second + t.coupling;
}

double schrodinger_residual_scaled(const BoundState& state, double x, const MorseParameters& P) {
  const PsiTerms t = psi_terms(state, x, P);
  const double w = 2.0 * P.mass / (P.hbar * P.hbar);
  const double psi0 = wavefunction(x, state, P);
  const double scale = std::max(std::abs(t.second), w * P.V0 * std::abs(psi0));
  if (scale == 0.0) return 0.0;
  return std::abs(t.second + t.coupling) / scale;
}

double state_overlap(const BoundState& sa, const BoundState& sb, const MorseParameters& P) {
  const double s = sa.beta_n + sb.beta_n;
  const double I =
      laguerre_pair_integral(s, sa.n, 2.0 * sa.beta_n, sb.n, 2.0 * sb.beta_n) / P.a;
  return sa.norm * sb.norm * I;
}

}  // namespace morse
