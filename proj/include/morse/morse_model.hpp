#ifndef MORSE_MORSE_MODEL_HPP
#define MORSE_MORSE_MODEL_HPP

// Closed-form bound states of the Morse oscillator
//   V(x) = V0 (1 - e^{-a x})^2.
// The dimensionless well-capacity parameter k = 2 sqrt(2 m V0) / (a hbar)
// controls everything: level n exists iff 2n + 1 < k, with
//   beta_n = (k - 2n - 1) / 2,   E_n = V0 [1 - (1 - (2n+1)/k)^2],
// and eigenfunction psi_n = N e^{-xi/2} xi^{beta_n} L_n^{2 beta_n}(xi) in
// the exponential coordinate xi = k e^{-a x}.

#include <functional>
#include <optional>

namespace morse {

// Validated physical parameters; k is derived once at construction.
struct MorseParameters {
  double mass = 1.0;
  double hbar = 1.0;
  double a = 1.0;
  double V0 = 1.0;
  double k = 0.0;

  // Throws std::domain_error unless all four inputs are positive.
  MorseParameters(double mass, double hbar, double a, double V0);

  bool operator==(const MorseParameters&) const = default;
};

// One normalized bound level.  mu = -beta_n is the exponent of the
// xi^mu prefactor relating psi to the transform F (psi = xi^mu F).
struct BoundState {
  int n = 0;
  double beta_n = 0.0;
  double energy = 0.0;
  double norm = 0.0;
  double mu = 0.0;

  bool operator==(const BoundState&) const = default;
};

// V(x) = V0 (1 - e^{-a x})^2.
double potential(double x, const MorseParameters& P);

// xi(x) = k e^{-a x} (always positive, decreasing in x).
double xi_of_x(double x, const MorseParameters& P);

// beta(E) = sqrt(2 m (V0 - E)) / (a hbar) for E below the dissociation
// threshold; throws std::domain_error when E > V0 (continuum).
double beta_of_E(double E, const MorseParameters& P);

// Index of the highest bound level (largest n with 2n + 1 < k), or
// std::nullopt when k <= 1 and the well holds no level at all.
std::optional<int> n_max(const MorseParameters& P);

// beta_n = (k - 2n - 1)/2 for an admissible level index.
// Throws std::domain_error when n < 0 or n exceeds n_max.
double level_beta(int n, const MorseParameters& P);

// E_n = V0 [1 - (1 - (2n+1)/k)^2].  Same admissibility contract as
// level_beta.  Strictly increasing in n, always inside (0, V0).
double energy(int n, const MorseParameters& P);

// The transform evaluated in closed form: F_n(xi) = e^{-xi/2} xi^{2 beta_n}
// * 1F1(-n; 2 beta_n + 1; xi), i.e. the solution the contour integral
// produces up to normalization.  Requires an admissible n and xi > 0.
double confluent_F(double xi, int n, const MorseParameters& P);

// Normalized level: norm fixed by Int |psi_n|^2 dx = 1, computed by
// adaptive quadrature in xi ((1/a) Int xi^{2 beta - 1} e^{-xi} L_n^2 dxi,
// the x = +inf endpoint mapped to xi = 0 by a power substitution, the
// xi = +inf tail truncated where the integrand's analytic envelope falls
// below 1e-18 of its peak).
BoundState normalize(int n, const MorseParameters& P);

// psi_n(x) = norm * e^{-xi/2} xi^{beta_n} L_n^{2 beta_n}(xi) at xi = xi(x).
// Returns 0 once the envelope underflows double (deep forbidden region).
double wavefunction(double x, const BoundState& state, const MorseParameters& P);

// Residual of the radial Schroedinger equation
//   psi'' + (2 m / hbar^2) (E - V(x)) psi
// at x, 5-point stencil with h = max(1e-4, 1e-6 |x|).
double schrodinger_residual(const BoundState& state, double x, const MorseParameters& P);

// Same residual divided by max(|psi''|, (2 m / hbar^2) V0 |psi|); 0 when
// both scales vanish (far tail).
double schrodinger_residual_scaled(const BoundState& state, double x, const MorseParameters& P);

// Int psi_a psi_b dx by the same xi-space quadrature as normalize;
// ~1 for a = b, ~0 otherwise (analytic orthonormality).
double state_overlap(const BoundState& sa, const BoundState& sb, const MorseParameters& P);

}  // namespace morse

#endif  // MORSE_MORSE_MODEL_HPP
