#ifndef MORSE_FD_ORACLE_HPP
#define MORSE_FD_ORACLE_HPP

// Independent numerical eigensolver for the 1-D Schroedinger equation:
// 3-point finite differences on a Dirichlet box, Sturm-sequence bisection
// for eigenvalues, inverse iteration for eigenvectors.  Shares no code
// with the closed-form machinery it validates.

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "morse/morse_model.hpp"

namespace morse {

// Uniform grid on [x_min, x_max] with count points (Dirichlet box).
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  int count = 0;

  // Throws std::invalid_argument unless x_min < x_max and count >= 3.
  Grid(double x_min, double x_max, int count);

  double spacing() const { return (x_max - x_min) / (count - 1); }
  Eigen::ArrayXd points() const;

  bool operator==(const Grid&) const = default;
};

// Symmetric tridiagonal matrix; the single off-diagonal array enforces
// symmetry by construction.
struct TridiagonalOperator {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;  // length diagonal.size() - 1
};

// Function samples over a grid (wavefunctions, eigenvectors, residuals).
struct SampledFunction {
  Eigen::ArrayXd x;
  Eigen::ArrayXd values;
};

// H = -(hbar^2/2m) d2/dx2 + V sampled at every grid point (dimension
// grid.count); the Dirichlet walls sit one spacing outside the box, i.e.
// psi(x_min - h) = psi(x_max + h) = 0.  diagonal[i] = hbar^2/(m h^2)
// + V(x_i), off-diagonal -hbar^2/(2m h^2).
TridiagonalOperator build_hamiltonian(const std::function<double(double)>& V, double mass,
                                      double hbar, const Grid& grid);

// Convenience overload for the Morse potential itself.
TridiagonalOperator build_hamiltonian(const MorseParameters& P, const Grid& grid);

// Number of eigenvalues strictly below lambda (Sturm sequence: negative
// pivots of the shifted LDL^T factorization, LAPACK-style pivot floor).
int sturm_count_below(const TridiagonalOperator& op, double lambda);

// The count_wanted smallest eigenvalues by Sturm bisection, each bracketed
// to 1e-12 x (Gershgorin radius); strictly increasing output.
// Throws std::invalid_argument when count_wanted is out of [1, dim].
std::vector<double> eigen_lowest(const TridiagonalOperator& op, int count_wanted);

// Inverse-iteration eigenvector for an eigenvalue known to 1e-8 (scaled).
// Unit discrete L2 norm (trapezoidal with weight h); sign fixed so the
// first interior extremum of |v| is positive.  The grid supplies the x
// coordinates and the trapezoid weight.
// Throws std::runtime_error if 20 sweeps fail to converge.
SampledFunction eigenvector(const TridiagonalOperator& op, const Grid& grid, double eigenvalue);

// Trapezoidal Int fa.fb dx.  Throws std::invalid_argument on grid mismatch.
double overlap(const SampledFunction& fa, const SampledFunction& fb);

// Number of strict sign changes among consecutive samples with |f| > floor.
// Throws std::invalid_argument when floor < 0.
int count_nodes(const SampledFunction& f, double floor);

// Box tied to the analytic decay of the bound states: x_min where
// xi = max(60, 2k+30) (left wall deep in the e^{-xi/2} region) and x_max
// where xi^{beta_min} = 1e-12 (right wall past the slowest xi^beta decay).
// Throws std::domain_error when the well holds no bound state.
Grid auto_domain(const MorseParameters& P, int count);

// FD spectrum at the given grid and its exact h/2 refinement (2N-1 points),
// plus the Richardson combination (4 E_{h/2} - E_h)/3 per level.
struct FdSpectrum {
  std::vector<double> coarse;
  std::vector<double> refined;
  std::vector<double> richardson;
};

FdSpectrum fd_spectrum(const MorseParameters& P, const Grid& grid, int count_wanted);

}  // namespace morse

#endif  // MORSE_FD_ORACLE_HPP
