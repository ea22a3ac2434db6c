// Command-line front end: spectrum | wavefn | verify | nr-limit.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diracosc/commands.hpp"

namespace {

using diracosc::cli::RunConfig;

enum ExitCode { kOk = 0, kChecksFailed = 1, kUsage = 2, kRuntime = 3 };

// "VALUE" applies to every check, "NAME=VALUE" to one.
void apply_tolerances(const std::vector<std::string>& specs, RunConfig& config) {
  for (const std::string& spec : specs) {
    const auto eq = spec.find('=');
    std::size_t used = 0;
    if (eq == std::string::npos) {
      const double value = std::stod(spec, &used);
      if (used != spec.size()) throw std::invalid_argument("bad tolerance '" + spec + "'");
      for (const auto& check : diracosc::default_checks()) config.tolerances[check.name] = value;
    } else {
      const std::string value_text = spec.substr(eq + 1);
      const double value = std::stod(value_text, &used);
      if (used != value_text.size()) throw std::invalid_argument("bad tolerance '" + spec + "'");
      config.tolerances[spec.substr(0, eq)] = value;
    }
  }
}

void add_common(CLI::App& sub, RunConfig& config, std::vector<std::string>& tolerances) {
  sub.add_option("--n-max", config.n_max, "Largest radial index n")->capture_default_str();
  sub.add_option("--m", config.m, "Angular momentum index m >= 0")->capture_default_str();
  sub.add_option("--omega", config.omega, "Angular frequency (rad/s in SI)");
  sub.add_option("--mass", config.mass, "Rest mass (kg in SI)");
  sub.add_option("--units", config.units, "natural | si")
      ->check(CLI::IsMember({"natural", "si"}))
      ->capture_default_str();
  sub.add_option("--rho-max", config.rho_max_b, "Grid extent in oscillator lengths")
      ->capture_default_str();
  sub.add_option("--grid-points", config.grid_points, "Radial samples (odd)")
      ->capture_default_str();
  sub.add_option("--format", config.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub.add_option("--output,-o", config.output, "Output file, '-' for stdout")
      ->capture_default_str();
  sub.add_option("--tolerance", tolerances, "Check bound override: VALUE or NAME=VALUE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form spectrum and eigenfunctions of the 2D Dirac oscillator"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> tolerances;
  std::vector<double> lambdas;

  CLI::App* spectrum = app.add_subcommand("spectrum", "Energy levels n = 0 .. n-max");
  CLI::App* wavefn = app.add_subcommand("wavefn", "Normalized radial profiles of one state");
  CLI::App* verify = app.add_subcommand("verify", "Run the numerical verification sweep");
  CLI::App* nr_limit = app.add_subcommand("nr-limit", "Three-term small-lambda expansion vs exact");
  for (CLI::App* sub : {spectrum, wavefn, verify, nr_limit}) add_common(*sub, config, tolerances);
  wavefn->add_option("--n", config.n, "Radial index n")->capture_default_str();
  nr_limit->add_option("--lambda", lambdas, "hbar*omega/(m0 c^2) values in (0, 0.1]")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  diracosc::cli::CommandResult result;
  try {
    apply_tolerances(tolerances, config);
    if (!lambdas.empty()) config.lambdas = lambdas;
    if (spectrum->parsed()) {
      result = diracosc::cli::cmd_spectrum(config);
    } else if (wavefn->parsed()) {
      result = diracosc::cli::cmd_wavefn(config);
    } else if (verify->parsed()) {
      result = diracosc::cli::cmd_verify(config);
    } else {
      result = diracosc::cli::cmd_nr_limit(config);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }

  try {
    const std::string text = diracosc::cli::render(config, result);
    const std::string path = diracosc::cli::resolve_output_path(config.output);
    if (path == "-") {
      std::cout << text;
      std::cout.flush();
    } else {
      diracosc::cli::write_atomic(path, text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }

  if (verify->parsed() && !result.ok()) {
    for (const auto& check : result.checks) {
      if (!check.passed) std::cerr << "FAILED " << check.name << '\n';
    }
    return kChecksFailed;
  }
  return kOk;
}
