#ifndef MORSE_STENCIL_HPP
#define MORSE_STENCIL_HPP

// Shared 5-point central-difference stencils used by every residual check.
// The step policy h = max(1e-4, 1e-6 |x|) balances O(h^4) truncation against
// round-off in double; residual tolerances elsewhere assume exactly this h.

#include <algorithm>
#include <cmath>

namespace morse {

inline double fd_step(double x) { return std::max(1e-4, 1e-6 * std::abs(x)); }

// f'(x) = [f(x-2h) - 8 f(x-h) + 8 f(x+h) - f(x+2h)] / (12 h) + O(h^4)
template <class F>
double deriv1_5p(F&& f, double x, double h) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

// f''(x) = [-f(x-2h) + 16 f(x-h) - 30 f(x) + 16 f(x+h) - f(x+2h)] / (12 h^2) + O(h^4)
template <class F>
double deriv2_5p(F&& f, double x, double h) {
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h * h);
}

}  // namespace morse

#endif  // MORSE_STENCIL_HPP
