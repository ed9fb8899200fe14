#ifndef MORSE_REPORTING_HPP
#define MORSE_REPORTING_HPP

// Report assembly and serialization for the CLI: spectrum tables,
// wavefunction samples, verification sweeps, quadrature identity checks.
// JSON (round-trip safe), CSV (fixed schemas), and human tables.

#include <optional>
#include <string>
#include <vector>

#include "morse/morse_model.hpp"

namespace morse {

struct SpectrumRow {
  int n = 0;
  double E_closed = 0.0;
  // Populated only by the verification pass.
  std::optional<double> E_fd;
  std::optional<double> abs_diff;
  std::optional<double> overlap;
  std::optional<int> nodes;

  bool operator==(const SpectrumRow&) const = default;
};

struct SpectrumReport {
  MorseParameters params;
  std::optional<int> n_max;  // empty when the well holds no level
  std::vector<SpectrumRow> rows;

  bool operator==(const SpectrumReport&) const = default;
};

struct WavefunctionRow {
  double x = 0.0;
  double xi = 0.0;
  double psi = 0.0;

  bool operator==(const WavefunctionRow&) const = default;
};

struct WavefunctionReport {
  MorseParameters params;
  int n = 0;
  bool normalized = true;
  std::vector<WavefunctionRow> rows;

  bool operator==(const WavefunctionReport&) const = default;
};

struct VerificationCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  bool operator==(const VerificationCheck&) const = default;
};

struct VerificationReport {
  MorseParameters params;
  std::vector<VerificationCheck> checks;
  bool all_pass = false;

  bool operator==(const VerificationReport&) const = default;
};

struct QuadcheckRow {
  int order = 0;
  double quadrature = 0.0;
  double series = 0.0;
  double rel_error = 0.0;

  bool operator==(const QuadcheckRow&) const = default;
};

struct QuadcheckReport {
  double p = 0.0;
  double q = 0.0;
  double xi = 0.0;
  std::vector<QuadcheckRow> rows;

  bool operator==(const QuadcheckReport&) const = default;
};

// ---- builders -------------------------------------------------------------

// Closed-form levels; with verify, adds FD oracle energies (Richardson from
// grid_count and its h/2 refinement on the auto domain), overlaps against
// the closed form, and FD node counts.  Throws std::domain_error when the
// well holds no bound state (k <= 1).
SpectrumReport build_spectrum_report(const MorseParameters& P, bool verify,
                                     int grid_count = 4001);

// (x, xi, psi) samples of level n on [x_min, x_max].  samples >= 2
// (std::invalid_argument otherwise); n must be admissible (domain error).
// With normalized = false the raw closed form (norm = 1) is emitted.
WavefunctionReport build_wavefunction_report(const MorseParameters& P, int n, double x_min,
                                             double x_max, int samples, bool normalized);

// Runs the full verification suite (kernel ODE, boundary terms, transformed
// ODE both branches, Euler-integral identity, weight sums, Schroedinger
// residuals, normalization + closed-form cross-check, orthonormality, node
// counts, Sturm count, scale covariance).  tolerance_override, when set,
// replaces every check's tolerance (diagnostic use).
VerificationReport build_verification_report(const MorseParameters& P,
                                             std::optional<double> tolerance_override = {});

// Contour quadrature vs Kummer series e^{-xi/2} B(q,p) 1F1(q; p+q; xi)
// across an order sweep.  Requires p, q > 0 and 0 < xi <= 700.
QuadcheckReport build_quadcheck_report(double p, double q, double xi,
                                       const std::vector<int>& orders);

// ---- serialization ---------------------------------------------------------

std::string to_json(const SpectrumReport& r);
std::string to_json(const WavefunctionReport& r);
std::string to_json(const VerificationReport& r);
std::string to_json(const QuadcheckReport& r);

// Parsers recompute derived columns (abs_diff) instead of trusting input.
// Throw std::invalid_argument on malformed documents.
SpectrumReport spectrum_report_from_json(const std::string& text);
WavefunctionReport wavefunction_report_from_json(const std::string& text);
VerificationReport verification_report_from_json(const std::string& text);
QuadcheckReport quadcheck_report_from_json(const std::string& text);

// Fixed column schemas; numbers as %.17g; missing optionals as empty cells.
//   spectrum:      n,E_closed,E_fd,abs_diff,overlap,nodes
//   wavefunction:  x,xi,psi
//   verification:  name,max_error,tolerance,pass
//   quadcheck:     order,quadrature,series,rel_error
std::string to_csv(const SpectrumReport& r);
std::string to_csv(const WavefunctionReport& r);
std::string to_csv(const VerificationReport& r);
std::string to_csv(const QuadcheckReport& r);

std::string to_table(const SpectrumReport& r);
std::string to_table(const WavefunctionReport& r);
std::string to_table(const VerificationReport& r);
std::string to_table(const QuadcheckReport& r);

}  // namespace morse

#endif  // MORSE_REPORTING_HPP
