// morsebound: exact Morse-potential bound states with built-in verification.
//
// Subcommands:
//   spectrum      closed-form levels; --verify adds the FD-oracle columns
//   wavefunction  (x, xi, psi) samples of one level
//   verify        full analytical-step verification suite
//   quadcheck     contour quadrature vs Kummer series across orders
//
// Exit codes: 0 success, 1 usage error, 2 domain rejection, 3 verification
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "morse/fd_oracle.hpp"
#include "morse/morse_model.hpp"
#include "morse/reporting.hpp"

namespace {

struct CommonOpts {
  double mass = 1.0;
  double hbar = 1.0;
  double a = 1.0;
  double v0 = 1.0;
  std::string format = "table";
  std::string out;
  std::string config;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mass", opts.mass, "particle mass")->check(CLI::PositiveNumber);
  cmd->add_option("--hbar", opts.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
  cmd->add_option("--a", opts.a, "inverse potential width")->check(CLI::PositiveNumber);
  cmd->add_option("--v0", opts.v0, "dissociation energy")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", opts.out, "write output to file instead of stdout");
  // The value is consumed by the pre-pass; bound here so CLI11 accepts it.
  cmd->add_option("--config", opts.config, "JSON parameter file (flags override it)");
}

// --config pre-pass: file values become defaults, explicit flags override.
// Returns false (usage failure) on unreadable files or unknown keys.
bool apply_config(int argc, char** argv, CommonOpts& opts, std::string& error) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
  }
  if (path.empty()) return true;

  std::ifstream in(path);
  if (!in) {
    error = "cannot open config file: " + path;
    return false;
  }
  const nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    error = "config file is not a JSON object: " + path;
    return false;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "mass") opts.mass = value.get<double>();
    else if (key == "hbar") opts.hbar = value.get<double>();
    else if (key == "a") opts.a = value.get<double>();
    else if (key == "v0") opts.v0 = value.get<double>();
    else if (key == "format") opts.format = value.get<std::string>();
    else {
      error = "unknown config key: " + key;
      return false;
    }
  }
  return true;
}

int emit(const std::string& text, const CommonOpts& opts) {
  if (opts.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(opts.out);
  if (!out) {
    std::cerr << "error: cannot write " << opts.out << '\n';
    return 1;
  }
  out << text;
  return 0;
}

morse::MorseParameters make_params(const CommonOpts& opts) {
  return morse::MorseParameters(opts.mass, opts.hbar, opts.a, opts.v0);
}

template <class Report>
std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return morse::to_json(rep);
  if (format == "csv") return morse::to_csv(rep);
  return morse::to_table(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and verified bound states of the Morse potential"};
  app.require_subcommand(1);

  CommonOpts spectrum_opts, wave_opts, verify_opts, quad_opts;

  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form bound levels");
  add_common_flags(spectrum, spectrum_opts);
  bool spectrum_verify = false;
  int spectrum_points = 4001;
  spectrum->add_flag("--verify", spectrum_verify, "add FD-oracle energies/overlaps/nodes");
  spectrum->add_option("--points", spectrum_points, "FD grid points (h/2 refinement added)")
      ->check(CLI::Range(3, 200001));

  CLI::App* wave = app.add_subcommand("wavefunction", "sample one bound level");
  add_common_flags(wave, wave_opts);
  int wave_n = 0, wave_samples = 201;
  double wave_xmin = 0.0, wave_xmax = 0.0;
  bool wave_raw = false;
  wave->add_option("--n", wave_n, "vibrational quantum number")->required();
  CLI::Option* optxmin = wave->add_option("--x-min", wave_xmin, "left sample bound");
  CLI::Option* optxmax = wave->add_option("--x-max", wave_xmax, "right sample bound");
  wave->add_option("--samples", wave_samples, "number of samples (>= 2)");
  wave->add_flag("--unnormalized", wave_raw, "emit the raw closed form (norm = 1)");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common_flags(verify, verify_opts);
  double verify_tol = 0.0;
  CLI::Option* opttol =
      verify->add_option("--tolerance", verify_tol, "override every check tolerance");

  CLI::App* quad = app.add_subcommand("quadcheck", "quadrature vs series identity");
  add_common_flags(quad, quad_opts);
  double quad_p = 1.0, quad_q = 1.0, quad_xi = 2.0;
  std::vector<int> quad_orders = {2, 4, 8, 16, 32, 64};
  quad->add_option("--p", quad_p, "exponent p of the contour weight")->required();
  quad->add_option("--q", quad_q, "exponent q of the contour weight")->required();
  quad->add_option("--xi", quad_xi, "transform argument");
  quad->add_option("--orders", quad_orders, "order sweep")->delimiter(',');

  // Config before parse so explicit flags win.
  std::string config_error;
  bool config_ok = true;
  for (CommonOpts* o : {&spectrum_opts, &wave_opts, &verify_opts, &quad_opts})
    config_ok = config_ok && apply_config(argc, argv, *o, config_error);
  if (!config_ok) {
    std::cerr << "error: " << config_error << '\n';
    return 1;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (spectrum->parsed()) {
      const morse::SpectrumReport rep =
          build_spectrum_report(make_params(spectrum_opts), spectrum_verify, spectrum_points);
      return emit(render(rep, spectrum_opts.format), spectrum_opts);
    }

    if (wave->parsed()) {
      const morse::MorseParameters P = make_params(wave_opts);
      double xmin = wave_xmin, xmax = wave_xmax;
      if (optxmin->count() == 0 || optxmax->count() == 0) {
        const morse::Grid box = morse::auto_domain(P, 3);
        if (optxmin->count() == 0) xmin = box.x_min;
        if (optxmax->count() == 0) xmax = box.x_max;
      }
      const morse::WavefunctionReport rep =
          build_wavefunction_report(P, wave_n, xmin, xmax, wave_samples, !wave_raw);
      return emit(render(rep, wave_opts.format), wave_opts);
    }

    if (verify->parsed()) {
      std::optional<double> tol;
      if (opttol->count() > 0) tol = verify_tol;
      const morse::VerificationReport rep =
          build_verification_report(make_params(verify_opts), tol);
      const int rc = emit(render(rep, verify_opts.format), verify_opts);
      if (rc != 0) return rc;
      return rep.all_pass ? 0 : 3;
    }

    if (quad->parsed()) {
      const morse::QuadcheckReport rep =
          morse::build_quadcheck_report(quad_p, quad_q, quad_xi, quad_orders);
      return emit(render(rep, quad_opts.format), quad_opts);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
