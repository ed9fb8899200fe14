#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "morse/fd_oracle.hpp"
#include "morse/morse_model.hpp"

using namespace morse;

namespace {
const MorseParameters kRef(1.0, 1.0, 1.0, 8.0);

double gershgorin_radius(const TridiagonalOperator& op) {
  const int n = static_cast<int>(op.diagonal.size());
  double lo = op.diagonal[0], hi = op.diagonal[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < n) r += std::abs(op.off_diagonal[i]);
    lo = std::min(lo, op.diagonal[i] - r);
    hi = std::max(hi, op.diagonal[i] + r);
  }
  return std::max(std::abs(lo), std::abs(hi));
}
}  // namespace

TEST_CASE("Grid validation, spacing, points") {
  CHECK_THROWS_AS(Grid(1.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(Grid(2.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, 1.0, 2), std::invalid_argument);

  const Grid g(-1.0, 2.0, 7);
  CHECK(g.spacing() == doctest::Approx(0.5).epsilon(1e-15));
  const Eigen::ArrayXd x = g.points();
  REQUIRE(x.size() == 7);
  CHECK(x[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(x[3] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(x[6] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("build_hamiltonian structure for the free particle") {
  const Grid g(0.0, 1.0, 5);  // h = 0.25; one unknown per grid point
  const TridiagonalOperator op =
      build_hamiltonian([](double) { return 0.0; }, 1.0, 1.0, g);
  REQUIRE(op.diagonal.size() == 5);
  REQUIRE(op.off_diagonal.size() == 4);
  for (int i = 0; i < 5; ++i)
    CHECK(op.diagonal[i] == doctest::Approx(16.0).epsilon(1e-14));  // hbar^2/(m h^2)
  for (int i = 0; i < 4; ++i)
    CHECK(op.off_diagonal[i] == doctest::Approx(-8.0).epsilon(1e-14));
}

TEST_CASE("build_hamiltonian Morse overload samples the potential") {
  const Grid g(-1.0, 1.0, 5);  // h = 0.5, x = -1, -0.5, 0, 0.5, 1
  const TridiagonalOperator op = build_hamiltonian(kRef, g);
  REQUIRE(op.diagonal.size() == 5);
  const double kin = 1.0 / (0.5 * 0.5);
  CHECK(op.diagonal[0] == doctest::Approx(kin + potential(-1.0, kRef)).epsilon(1e-13));
  CHECK(op.diagonal[2] == doctest::Approx(kin + 0.0).epsilon(1e-13));
  CHECK(op.diagonal[3] == doctest::Approx(kin + potential(0.5, kRef)).epsilon(1e-13));
}

TEST_CASE("particle in a box recovers pi^2 n^2 / 2 levels") {
  const Grid g(0.0, 1.0, 2001);
  const TridiagonalOperator op =
      build_hamiltonian([](double) { return 0.0; }, 1.0, 1.0, g);
  const std::vector<double> e = eigen_lowest(op, 3);
  REQUIRE(e.size() == 3);
  const double pi = std::numbers::pi;
  for (int n = 1; n <= 3; ++n) {
    const double exact = 0.5 * pi * pi * n * n;
    CHECK(std::abs(e[n - 1] - exact) <= 1e-2 * exact);
  }
  CHECK(e[0] < e[1]);
  CHECK(e[1] < e[2]);
}

TEST_CASE("eigen_lowest argument validation") {
  const Grid g(0.0, 1.0, 5);
  const TridiagonalOperator op =
      build_hamiltonian([](double) { return 0.0; }, 1.0, 1.0, g);
  CHECK_THROWS_AS(eigen_lowest(op, 0), std::invalid_argument);
  CHECK_THROWS_AS(eigen_lowest(op, 6), std::invalid_argument);  // dim = 5
  CHECK(eigen_lowest(op, 5).size() == 5);
}

TEST_CASE("Sturm counts isolate the Morse bound levels") {
  const Grid g(-3.0, 12.0, 4001);
  const TridiagonalOperator op = build_hamiltonian(kRef, g);
  CHECK(sturm_count_below(op, kRef.V0) == 4);
  CHECK(sturm_count_below(op, energy(0, kRef) - 0.1) == 0);
  CHECK(sturm_count_below(op, 0.5 * (energy(0, kRef) + energy(1, kRef))) == 1);
  CHECK(sturm_count_below(op, 0.5 * (energy(2, kRef) + energy(3, kRef))) == 3);
}

TEST_CASE("small exact tridiagonal: Toeplitz eigenvalues") {
  // diag 2, off -1, dim 5: eigenvalues 2 - 2 cos(j pi / 6), j = 1..5.
  TridiagonalOperator op;
  op.diagonal = Eigen::VectorXd::Constant(5, 2.0);
  op.off_diagonal = Eigen::VectorXd::Constant(4, -1.0);
  const std::vector<double> e = eigen_lowest(op, 5);
  const double pi = std::numbers::pi;
  for (int j = 1; j <= 5; ++j)
    CHECK(e[j - 1] == doctest::Approx(2.0 - 2.0 * std::cos(j * pi / 6.0)).epsilon(1e-10));
}

TEST_CASE("eigenvector: residual, normalization, node structure, overlap with psi_0") {
  const Grid g = auto_domain(kRef, 4001);
  const TridiagonalOperator op = build_hamiltonian(kRef, g);
  const std::vector<double> e = eigen_lowest(op, 2);
  const double radius = gershgorin_radius(op);

  const SampledFunction v0 = eigenvector(op, g, e[0]);
  REQUIRE(v0.values.size() == g.count);

  // H v = lambda v to inverse-iteration accuracy.
  const int dim = static_cast<int>(v0.values.size());
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    double r = (op.diagonal[i] - e[0]) * v0.values[i];
    if (i > 0) r += op.off_diagonal[i - 1] * v0.values[i - 1];
    if (i + 1 < dim) r += op.off_diagonal[i] * v0.values[i + 1];
    worst = std::max(worst, std::abs(r));
  }
  CHECK(worst <= 1e-8 * radius);

  CHECK(overlap(v0, v0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(count_nodes(v0, 1e-6 * v0.values.abs().maxCoeff()) == 0);

  // Ground state matches the closed form to near machine-limited accuracy.
  const BoundState exact0 = normalize(0, kRef);
  SampledFunction psi0{v0.x, Eigen::ArrayXd(v0.x.size())};
  for (int i = 0; i < v0.x.size(); ++i)
    psi0.values[i] = wavefunction(v0.x[i], exact0, kRef);
  CHECK(std::abs(overlap(v0, psi0)) >= 1.0 - 1e-6);

  // First excited level has exactly one node.
  const SampledFunction v1 = eigenvector(op, g, e[1]);
  CHECK(count_nodes(v1, 1e-6 * v1.values.abs().maxCoeff()) == 1);
}

TEST_CASE("overlap validates grids and is symmetric") {
  Eigen::ArrayXd x = Eigen::ArrayXd::LinSpaced(11, 0.0, 1.0);
  SampledFunction f{x, x.sin()};
  SampledFunction g{x, x.cos()};
  CHECK(overlap(f, g) == doctest::Approx(overlap(g, f)).epsilon(1e-15));

  SampledFunction h{Eigen::ArrayXd::LinSpaced(12, 0.0, 1.0),
                    Eigen::ArrayXd::Zero(12)};
  CHECK_THROWS_AS(overlap(f, h), std::invalid_argument);
}

TEST_CASE("count_nodes on synthetic samples") {
  Eigen::ArrayXd x = Eigen::ArrayXd::LinSpaced(1000, 0.0, 2.0 * std::numbers::pi);
  SampledFunction s{x, x.sin()};
  CHECK(count_nodes(s, 1e-12) == 1);  // one interior zero at pi

  SampledFunction c{x, Eigen::ArrayXd::Constant(1000, 0.7)};
  CHECK(count_nodes(c, 1e-12) == 0);

  CHECK_THROWS_AS(count_nodes(s, -1.0), std::invalid_argument);
}

TEST_CASE("auto_domain pins the analytic decay box") {
  const Grid g = auto_domain(kRef, 101);
  // xi_left = max(60, 2k+30) = 60 -> x_min = -ln(60/8); beta_min = 0.5 ->
  // x_max = ln 8 + 12 ln 10 / 0.5... computed from the stated rule.
  CHECK(g.x_min == doctest::Approx(-std::log(60.0 / 8.0)).epsilon(1e-6));
  CHECK(g.x_max ==
        doctest::Approx(std::log(8.0) + 12.0 * std::log(10.0) / 0.5).epsilon(1e-6));
  CHECK(g.count == 101);
  CHECK_THROWS_AS(auto_domain(MorseParameters(1.0, 1.0, 1.0, 0.1), 101),
                  std::domain_error);
}

TEST_CASE("fd_spectrum: Richardson extrapolation beats both grids") {
  const Grid g(-3.0, 12.0, 2001);
  const FdSpectrum s = fd_spectrum(kRef, g, 4);
  REQUIRE(s.coarse.size() == 4);
  REQUIRE(s.refined.size() == 4);
  REQUIRE(s.richardson.size() == 4);

  const double exact0 = energy(0, kRef);
  const double err_coarse = std::abs(s.coarse[0] - exact0);
  const double err_refined = std::abs(s.refined[0] - exact0);
  const double err_rich = std::abs(s.richardson[0] - exact0);
  CHECK(err_refined < err_coarse);            // second-order convergence
  CHECK(err_rich * 10.0 <= err_refined);      // extrapolation wins big
  CHECK(err_rich <= 1e-7);

  // Refinement is exactly h/2: the coarse error is ~4x the refined error.
  CHECK(err_coarse / err_refined == doctest::Approx(4.0).epsilon(0.05));
}
