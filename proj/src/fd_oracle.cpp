#include "morse/fd_oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace morse {

Grid::Grid(double x_min_, double x_max_, int count_)
    : x_min(x_min_), x_max(x_max_), count(count_) {
  if (!(x_min < x_max)) throw std::invalid_argument("Grid: requires x_min < x_max");
  if (count < 3) throw std::invalid_argument("Grid: requires count >= 3");
}

Eigen::ArrayXd Grid::points() const {
  return Eigen::ArrayXd::LinSpaced(count, x_min, x_max);
}

TridiagonalOperator build_hamiltonian(const std::function<double(double)>& V, double mass,
                                      double hbar, const Grid& grid) {
  const double h = grid.spacing();
  const double kin = hbar * hbar / (2.0 * mass * h * h);
  const Eigen::ArrayXd x = grid.points();
  TridiagonalOperator op;
  op.diagonal.resize(grid.count);
  for (int i = 0; i < grid.count; ++i) op.diagonal(i) = 2.0 * kin + V(x(i));
  op.off_diagonal = Eigen::VectorXd::Constant(grid.count - 1, -kin);
  return op;
}

TridiagonalOperator build_hamiltonian(const MorseParameters& P, const Grid& grid) {
  return build_hamiltonian([&P](double x) { return potential(x, P); }, P.mass, P.hbar, grid);
}

namespace {

// Floor for Sturm/LU pivots, scaled by the largest off-diagonal square so
// b^2 / pivot can never overflow (LAPACK dstebz convention).
double pivot_floor(const TridiagonalOperator& op) {
  double bmax2 = 1.0;
  for (int i = 0; i < op.off_diagonal.size(); ++i)
    bmax2 = std::max(bmax2, op.off_diagonal(i) * op.off_diagonal(i));
  return std::numeric_limits<double>::min() * bmax2 / std::numeric_limits<double>::epsilon();
}

// Gershgorin bounds [lo, hi] enclosing the whole spectrum.
void gershgorin(const TridiagonalOperator& op, double& lo, double& hi) {
  const int n = static_cast<int>(op.diagonal.size());
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.off_diagonal(i - 1));
    if (i + 1 < n) r += std::abs(op.off_diagonal(i));
    lo = std::min(lo, op.diagonal(i) - r);
    hi = std::max(hi, op.diagonal(i) + r);
  }
}

int sturm_count(const TridiagonalOperator& op, double lambda, double pivmin) {
  const int n = static_cast<int>(op.diagonal.size());
  int count = 0;
  double d = op.diagonal(0) - lambda;
  if (d < 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    if (std::abs(d) < pivmin) d = (d < 0.0 ? -pivmin : pivmin);
    const double b = op.off_diagonal(i - 1);
    d = (op.diagonal(i) - lambda) - b * b / d;
    if (d < 0.0) ++count;
  }
  return count;
}

// One solve of (T - lambda I) w = rhs by tridiagonal Gaussian elimination
// with partial pivoting (one fill-in superdiagonal).  Pivots are floored,
// never rejected: for inverse iteration a near-singular shift is the point.
Eigen::VectorXd solve_shifted(const TridiagonalOperator& op, double lambda,
                              Eigen::VectorXd rhs, double pivmin) {
  const int n = static_cast<int>(op.diagonal.size());
  Eigen::VectorXd dd = op.diagonal.array() - lambda;
  Eigen::VectorXd u1(n), u2(n);
  u2.setZero();
  for (int i = 0; i < n; ++i) u1(i) = (i + 1 < n) ? op.off_diagonal(i) : 0.0;

  for (int i = 0; i + 1 < n; ++i) {
    double below = op.off_diagonal(i);
    // Row i+1 as stored: (below, dd(i+1), u1(i+1)); u2(i+1) is still 0.
    if (std::abs(below) > std::abs(dd(i))) {
      std::swap(dd(i), below);
      const double t1 = u1(i);
      u1(i) = dd(i + 1);
      dd(i + 1) = t1;
      const double t2 = u2(i);
      u2(i) = u1(i + 1);
      u1(i + 1) = t2;
      std::swap(rhs(i), rhs(i + 1));
    }
    if (std::abs(dd(i)) < pivmin) dd(i) = (dd(i) < 0.0 ? -pivmin : pivmin);
    const double m = below / dd(i);
    dd(i + 1) -= m * u1(i);
    u1(i + 1) -= m * u2(i);
    rhs(i + 1) -= m * rhs(i);
  }
  if (std::abs(dd(n - 1)) < pivmin) dd(n - 1) = (dd(n - 1) < 0.0 ? -pivmin : pivmin);

  Eigen::VectorXd w(n);
  w(n - 1) = rhs(n - 1) / dd(n - 1);
  if (n >= 2) w(n - 2) = (rhs(n - 2) - u1(n - 2) * w(n - 1)) / dd(n - 2);
  for (int i = n - 3; i >= 0; --i)
    w(i) = (rhs(i) - u1(i) * w(i + 1) - u2(i) * w(i + 2)) / dd(i);
  return w;
}

}  // namespace

int sturm_count_below(const TridiagonalOperator& op, double lambda) {
  return sturm_count(op, lambda, pivot_floor(op));
}

std::vector<double> eigen_lowest(const TridiagonalOperator& op, int count_wanted) {
  const int n = static_cast<int>(op.diagonal.size());
  if (count_wanted < 1 || count_wanted > n)
    throw std::invalid_argument("eigen_lowest: count_wanted out of range");
  const double pivmin = pivot_floor(op);
  double lo, hi;
  gershgorin(op, lo, hi);
  const double radius = std::max(std::abs(lo), std::abs(hi));
  const double tol = 1e-12 * radius;

  std::vector<double> out;
  out.reserve(count_wanted);
  for (int j = 0; j < count_wanted; ++j) {
    double a = lo, b = hi;
    // count > j  <=>  lambda_j < mid.
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(op, mid, pivmin) > j)
        b = mid;
      else
        a = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

SampledFunction eigenvector(const TridiagonalOperator& op, const Grid& grid,
                            double eigenvalue) {
  const int n = static_cast<int>(op.diagonal.size());
  if (n != grid.count)
    throw std::invalid_argument("eigenvector: operator dimension does not match grid");
  const double pivmin = pivot_floor(op);
  const double h = grid.spacing();
  double lo, hi;
  gershgorin(op, lo, hi);
  const double radius = std::max(std::abs(lo), std::abs(hi));

  auto trapezoid_norm = [&](const Eigen::VectorXd& v) {
    double s = 0.5 * (v(0) * v(0) + v(n - 1) * v(n - 1));
    for (int i = 1; i + 1 < n; ++i) s += v(i) * v(i);
    return std::sqrt(s * h);
  };

  // Fixed-seed random start: reproducible, and orthogonality to the target
  // eigenvector would be a measure-zero accident.
  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = uni(rng);
  v /= trapezoid_norm(v);

  bool polished = false;
  for (int sweep = 0; sweep < 20; ++sweep) {
    Eigen::VectorXd w = solve_shifted(op, eigenvalue, v, pivmin);
    w /= trapezoid_norm(w);
    v = w;

    // Residual ||(T - E) v||_2 / ||v||_2 against the Gershgorin scale.
    double rnum = 0.0, rden = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = (op.diagonal(i) - eigenvalue) * v(i);
      if (i > 0) r += op.off_diagonal(i - 1) * v(i - 1);
      if (i + 1 < n) r += op.off_diagonal(i) * v(i + 1);
      rnum += r * r;
      rden += v(i) * v(i);
    }
    if (std::sqrt(rnum / rden) <= 1e-8 * radius) {
      // The residual test is loose on fine grids (radius ~ 1/h^2), and the
      // first satisfying iterate can still hold coherent contamination of
      // order (shift error / spectral gap) from neighboring modes -- enough
      // to flip signs in the far tails.  One extra sweep after the first
      // convergence shrinks that contamination quadratically.
      if (!polished) {
        polished = true;
        continue;
      }
      // Sign convention: first interior extremum of |v| above 1e-3 of the
      // peak (the floor keeps tail round-off from electing the extremum).
      const double vmax = v.cwiseAbs().maxCoeff();
      int first = -1;
      for (int i = 1; i + 1 < n; ++i) {
        const double m = std::abs(v(i));
        if (m >= std::abs(v(i - 1)) && m >= std::abs(v(i + 1)) && m > 1e-3 * vmax) {
          first = i;
          break;
        }
      }
      if (first < 0) {
        v.cwiseAbs().maxCoeff(&first);
      }
      if (v(first) < 0.0) v = -v;
      return {grid.points(), v.array()};
    }
  }
  throw std::runtime_error("eigenvector: inverse iteration did not converge in 20 sweeps");
}

double overlap(const SampledFunction& fa, const SampledFunction& fb) {
  const int n = static_cast<int>(fa.x.size());
  if (n != fb.x.size() || n < 2) throw std::invalid_argument("overlap: grid mismatch");
  const double span = std::max(std::abs(fa.x(n - 1) - fa.x(0)), 1.0);
  if (((fa.x - fb.x).abs() > 1e-12 * span).any())
    throw std::invalid_argument("overlap: grid mismatch");
  double s = 0.0;
  for (int i = 0; i + 1 < n; ++i)
    s += 0.5 * (fa.x(i + 1) - fa.x(i)) *
         (fa.values(i) * fb.values(i) + fa.values(i + 1) * fb.values(i + 1));
  return s;
}

int count_nodes(const SampledFunction& f, double floor) {
  if (!(floor >= 0.0)) throw std::invalid_argument("count_nodes: requires floor >= 0");
  int count = 0, prev = 0;
  for (int i = 0; i < f.values.size(); ++i) {
    const double v = f.values(i);
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

Grid auto_domain(const MorseParameters& P, int count) {
  const std::optional<int> nm = n_max(P);
  if (!nm) throw std::domain_error("auto_domain: no bound states (k <= 1)");
  const double beta_min = level_beta(*nm, P);
  const double xi_left = std::max(60.0, 2.0 * P.k + 30.0);
  const double x_min = -std::log(xi_left / P.k) / P.a;
  // xi^{beta_min} = 1e-12  =>  xi = 10^{-12/beta_min}.
  const double x_max = (std::log(P.k) + 12.0 * std::log(10.0) / beta_min) / P.a;
  return Grid(x_min, x_max, count);
}

FdSpectrum fd_spectrum(const MorseParameters& P, const Grid& grid, int count_wanted) {
  const Grid fine(grid.x_min, grid.x_max, 2 * grid.count - 1);
  FdSpectrum s;
  s.coarse = eigen_lowest(build_hamiltonian(P, grid), count_wanted);
  s.refined = eigen_lowest(build_hamiltonian(P, fine), count_wanted);
  s.richardson.resize(count_wanted);
  for (int i = 0; i < count_wanted; ++i)
    s.richardson[i] = (4.0 * s.refined[i] - s.coarse[i]) / 3.0;
  return s;
}

}  // namespace morse
