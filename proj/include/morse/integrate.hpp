#ifndef MORSE_INTEGRATE_HPP
#define MORSE_INTEGRATE_HPP

// Adaptive Simpson quadrature (recursive bisection with Richardson-style
// acceptance).  Used for the normalization and overlap integrals, whose
// integrands mix smooth exponential decay with Hoelder endpoints; the
// adaptive splitting concentrates points where the local estimate fails.

#include <cmath>
#include <stdexcept>

namespace morse {

namespace detail {

template <class F>
double simpson_step(F&& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // |delta| <= 15 tol certifies the composite estimate to ~tol.
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Integrates f over [a, b] to absolute tolerance abs_tol (recursion capped
// at depth 60, far past double exhaustion).  Throws std::invalid_argument
// when the interval is reversed or the tolerance nonpositive.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol) {
  if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: requires b >= a");
  if (!(abs_tol > 0.0)) throw std::invalid_argument("adaptive_simpson: requires abs_tol > 0");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, 60);
}

}  // namespace morse

#endif  // MORSE_INTEGRATE_HPP
