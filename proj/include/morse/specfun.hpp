#ifndef MORSE_SPECFUN_HPP
#define MORSE_SPECFUN_HPP

// Scalar special functions underpinning the bound-state construction:
// log-gamma, the Euler beta, the Kummer confluent hypergeometric series,
// and generalized Laguerre polynomials.

namespace morse {

// Outcome of a hypergeometric series summation.
struct SeriesEvaluation {
  double value = 0.0;
  int terms_used = 0;
  bool converged = false;

  bool operator==(const SeriesEvaluation&) const = default;
};

// ln Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 coefficients),
// relative accuracy ~1e-15 over the positive axis; x < 0.5 handled through
// the recurrence ln Gamma(x) = ln Gamma(x+1) - ln x.
// Throws std::domain_error for x <= 0.
double ln_gamma(double x);

// Euler beta B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
// Evaluated in log space so large arguments do not overflow prematurely.
// Throws std::domain_error unless a > 0 and b > 0.
double beta_function(double a, double b);

// Kummer confluent hypergeometric 1F1(alpha; gamma; xi).
//
// When alpha sits within 1e-9 of a nonpositive integer -n the series is a
// degree-n polynomial: alpha is snapped to -n and the finite sum returned
// exactly (converged = true).  Otherwise the ascending series is summed to
// relative tolerance 1e-16 with a 1000-term cap; negative xi (alternating
// terms, catastrophic cancellation for large |xi|) is accumulated in
// __float128 before rounding the result back to double.
//
// Throws std::domain_error when gamma hits a pole (nonpositive integer)
// before the series terminates, std::range_error if a term overflows.
SeriesEvaluation kummer_1f1(double alpha, double gamma, double xi);

// Generalized Laguerre polynomial L_n^a(xi) by the three-term recurrence
//   (j+1) L_{j+1} = (2j+1+a-xi) L_j - (j+a) L_{j-1}.
// Requires n >= 0 and a > -1 (std::domain_error otherwise).
double laguerre(int n, double a, double xi);

}  // namespace morse

#endif  // MORSE_SPECFUN_HPP
