#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "morse/laplace_kernel.hpp"
#include "morse/morse_model.hpp"
#include "morse/specfun.hpp"

using namespace morse;

namespace {
const MorseParameters kRef(1.0, 1.0, 1.0, 8.0);  // k = 8, four levels
}

TEST_CASE("MorseParameters derives k and validates inputs") {
  CHECK(kRef.k == doctest::Approx(8.0).epsilon(1e-14));
  CHECK_THROWS_AS(MorseParameters(0.0, 1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(MorseParameters(1.0, -1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(MorseParameters(1.0, 1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(MorseParameters(1.0, 1.0, 1.0, -8.0), std::domain_error);
}

TEST_CASE("potential landmarks") {
  CHECK(potential(0.0, kRef) == 0.0);
  CHECK(potential(50.0, kRef) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(potential(-std::log(2.0), kRef) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("xi_of_x landmarks") {
  CHECK(xi_of_x(0.0, kRef) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(xi_of_x(-std::log(2.0), kRef) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(xi_of_x(60.0, kRef) < 1e-20);
}

TEST_CASE("beta_of_E landmarks and domain") {
  CHECK(beta_of_E(8.0, kRef) == 0.0);
  CHECK(beta_of_E(8.0 - 0.5, kRef) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_of_E(energy(0, kRef), kRef) == doctest::Approx(3.5).epsilon(1e-13));
  CHECK_THROWS_AS(beta_of_E(8.1, kRef), std::domain_error);
}

TEST_CASE("n_max across well depths") {
  CHECK(n_max(kRef) == 3);
  CHECK(n_max(MorseParameters(1.0, 1.0, 1.0, 0.5)) == 0);    // k = 2
  CHECK(!n_max(MorseParameters(1.0, 1.0, 1.0, 0.125)));      // k = 1 exactly
  CHECK(!n_max(MorseParameters(1.0, 1.0, 1.0, 0.1)));        // k < 1
  CHECK(n_max(MorseParameters(1.0, 1.0, 1.0, 0.13)) == 0);   // k barely above 1
}

TEST_CASE("energies of the reference configuration") {
  const double expected[] = {1.875, 4.875, 6.875, 7.875};
  for (int n = 0; n < 4; ++n)
    CHECK(energy(n, kRef) == doctest::Approx(expected[n]).epsilon(1e-13));
  CHECK_THROWS_AS(energy(4, kRef), std::domain_error);
  CHECK_THROWS_AS(energy(-1, kRef), std::domain_error);
}

TEST_CASE("spectrum shape: increasing energies, shrinking gaps") {
  std::vector<double> e;
  for (int n = 0; n < 4; ++n) e.push_back(energy(n, kRef));
  for (int n = 0; n + 1 < 4; ++n) CHECK(e[n] < e[n + 1]);
  for (int n = 0; n + 2 < 4; ++n) CHECK(e[n + 2] - e[n + 1] < e[n + 1] - e[n]);
  for (int n = 0; n < 4; ++n) {
    CHECK(e[n] > 0.0);
    CHECK(e[n] < kRef.V0);
  }
}

TEST_CASE("scale covariance: equal k means equal E/V0") {
  const MorseParameters other(2.0, 1.0, 1.0, 4.0);  // also k = 8
  REQUIRE(other.k == doctest::Approx(8.0).epsilon(1e-14));
  for (int n = 0; n < 4; ++n)
    CHECK(energy(n, kRef) / kRef.V0 ==
          doctest::Approx(energy(n, other) / other.V0).epsilon(1e-12));
}

TEST_CASE("consistency triangle: quantization and energy are inverses via beta") {
  for (int n = 0; n < 4; ++n) {
    CHECK(beta_of_E(energy(n, kRef), kRef) ==
          doctest::Approx(level_beta(n, kRef)).epsilon(1e-12));
    CHECK(level_beta(n, kRef) == doctest::Approx(0.5 * (8.0 - 2.0 * n - 1.0)).epsilon(1e-14));
  }
}

TEST_CASE("confluent_F pinned example and limits") {
  // n=1, xi=3: e^{-1.5} 3^5 (1 - 3/6); beta_1 = 2.5.
  const double expected = std::exp(-1.5) * std::pow(3.0, 5.0) * 0.5;
  CHECK(confluent_F(3.0, 1, kRef) == doctest::Approx(expected).epsilon(1e-13));
  // n=0 reduces to the bare envelope e^{-xi/2} xi^{2 beta_0}.
  CHECK(confluent_F(2.0, 0, kRef) ==
        doctest::Approx(std::exp(-1.0) * std::pow(2.0, 7.0)).epsilon(1e-13));
  CHECK(confluent_F(1e-8, 3, kRef) < 1e-7);  // xi^{2 beta_n} -> 0
  CHECK_THROWS_AS(confluent_F(0.0, 0, kRef), std::domain_error);
  CHECK_THROWS_AS(confluent_F(1.0, 9, kRef), std::domain_error);
}

TEST_CASE("confluent_F solves the transformed ODE on every level") {
  for (int n = 0; n < 4; ++n) {
    const double beta = level_beta(n, kRef);
    auto F = [&](double xi) { return confluent_F(xi, n, kRef); };
    for (double xi : {0.5, 1.0, 3.0, 6.0, 10.0})
      CHECK(transformed_ode_residual_scaled(F, xi, kRef.k, beta) <= 1e-6);
  }
}

TEST_CASE("normalize: unit norm, closed-form cross-check, state fields") {
  for (int n = 0; n < 4; ++n) {
    const BoundState s = normalize(n, kRef);
    CHECK(s.n == n);
    CHECK(s.norm > 0.0);
    CHECK(s.mu == -s.beta_n);
    CHECK(s.beta_n == doctest::Approx(level_beta(n, kRef)).epsilon(1e-14));
    CHECK(s.energy == doctest::Approx(energy(n, kRef)).epsilon(1e-14));

    CHECK(state_overlap(s, s, kRef) == doctest::Approx(1.0).epsilon(1e-10));

    // norm^2 Gamma(k-n) / (a n! (k-2n-1)) = 1 (Laguerre orthogonality with
    // weight xi^{2 beta - 1} e^{-xi}).
    const double check = s.norm * s.norm *
                         std::exp(ln_gamma(kRef.k - n) - ln_gamma(n + 1.0)) /
                         (kRef.a * (kRef.k - 2.0 * n - 1.0));
    CHECK(std::abs(check - 1.0) <= 1e-9);
  }
  CHECK_THROWS_AS(normalize(4, kRef), std::domain_error);
}

TEST_CASE("orthonormality of the bound-state family") {
  std::vector<BoundState> states;
  for (int n = 0; n < 4; ++n) states.push_back(normalize(n, kRef));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double g = state_overlap(states[i], states[j], kRef);
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) <= 1e-8);
    }
}

TEST_CASE("wavefunction sign structure and decay") {
  const BoundState ground = normalize(0, kRef);
  for (double x : {-1.5, 0.0, 1.0, 4.0, 9.0}) CHECK(wavefunction(x, ground, kRef) > 0.0);

  // Right tail: approaches 0 from above (positive leading Laguerre coeff).
  const BoundState s3 = normalize(3, kRef);
  CHECK(wavefunction(40.0, s3, kRef) > 0.0);
  CHECK(wavefunction(40.0, s3, kRef) < 1e-7);

  // Deep tails underflow to exactly 0 without NaN.
  CHECK(wavefunction(1e6, ground, kRef) == 0.0);
  CHECK(wavefunction(-800.0, ground, kRef) == 0.0);
  CHECK(wavefunction(-5000.0, s3, kRef) == 0.0);
}

TEST_CASE("wavefunction node count on a fine scan") {
  for (int n = 0; n < 4; ++n) {
    const BoundState s = normalize(n, kRef);
    int sign_changes = 0, prev = 0;
    double peak = 0.0;
    std::vector<double> vals(10000);
    for (int i = 0; i < 10000; ++i) {
      vals[i] = wavefunction(-3.0 + 15.0 * i / 9999.0, s, kRef);
      peak = std::max(peak, std::abs(vals[i]));
    }
    for (double v : vals) {
      if (std::abs(v) <= 1e-12 * peak) continue;
      const int sgn = v > 0.0 ? 1 : -1;
      if (prev != 0 && sgn != prev) ++sign_changes;
      prev = sgn;
    }
    CHECK(sign_changes == n);
  }
}

TEST_CASE("schrodinger residual: closed form passes, detuned energy fails") {
  for (int n = 0; n < 4; ++n) {
    const BoundState s = normalize(n, kRef);
    for (int i = 0; i < 100; ++i)
      CHECK(schrodinger_residual_scaled(s, -2.0 + 12.0 * i / 99.0, kRef) <= 1e-6);
  }

  BoundState detuned = normalize(0, kRef);
  detuned.energy += 0.1;
  CHECK(schrodinger_residual_scaled(detuned, 0.0, kRef) > 1e-3);

  BoundState null_state = normalize(0, kRef);
  null_state.norm = 0.0;
  CHECK(schrodinger_residual(null_state, 0.0, kRef) == 0.0);
  CHECK(schrodinger_residual_scaled(null_state, 0.0, kRef) == 0.0);
}

TEST_CASE("wavefunction agrees with the transform route") {
  // psi = norm xi^{mu} F with mu = -beta: check against confluent_F times
  // the 1F1 -> Laguerre conversion factor.
  for (int n = 0; n < 4; ++n) {
    const BoundState s = normalize(n, kRef);
    const double a = 2.0 * s.beta_n;
    const double conv = std::exp(ln_gamma(n + a + 1.0) - ln_gamma(n + 1.0) - ln_gamma(a + 1.0));
    for (double x : {-1.0, 0.0, 1.5, 4.0}) {
      const double xi = xi_of_x(x, kRef);
      const double via_F = s.norm * std::pow(xi, s.mu) * confluent_F(xi, n, kRef) * conv;
      CHECK(wavefunction(x, s, kRef) == doctest::Approx(via_F).epsilon(1e-11));
    }
  }
}
