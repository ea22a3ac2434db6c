#include "diracosc/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "diracosc/spectrum.hpp"
#include "diracosc/wavefn.hpp"

namespace diracosc::cli {

namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (units != "natural" && units != "si") {
    throw std::invalid_argument("units must be 'natural' or 'si'");
  }
  if (format != "csv" && format != "json") {
    throw std::invalid_argument("format must be 'csv' or 'json'");
  }
  if (n_max < 0) throw std::invalid_argument("n-max must be >= 0");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (!(rho_max_b > 0.0) || !std::isfinite(rho_max_b)) {
    throw std::invalid_argument("rho-max must be positive");
  }
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw std::invalid_argument("grid-points must be odd and >= 3");
  }
  if (output.empty()) throw std::invalid_argument("output path is empty");
  (void)params();
}

PhysicalParams RunConfig::params() const {
  if (units == "natural") {
    return PhysicalParams(mass.value_or(1.0), omega.value_or(1.0), 1.0, 1.0);
  }
  return si_params(mass.value_or(kElectronMassKg), omega.value_or(kDefaultSiOmega));
}

namespace {

VerifyConfig verify_config(const RunConfig& config) {
  VerifyConfig vc;
  vc.params = config.params();
  vc.n_max = config.n_max;
  vc.m = config.m;
  vc.rho_max_b = config.rho_max_b;
  vc.num_points = config.grid_points;
  vc.tolerance_overrides = config.tolerances;
  return vc;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string format_cell(const Cell& cell) {
  if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<double>(cell)) return format_real(std::get<double>(cell));
  return "";
}

nlohmann::json cell_json(const Cell& cell) {
  if (std::holds_alternative<long long>(cell)) return std::get<long long>(cell);
  if (std::holds_alternative<double>(cell)) {
    const double v = std::get<double>(cell);
    if (!std::isfinite(v)) return nullptr;
    return v;
  }
  return nullptr;
}

nlohmann::json real_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Table checks_table(const std::vector<Check>& checks) {
  Table t;
  t.columns = {"check", "passed", "measured", "lower", "upper"};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    t.rows.push_back({static_cast<long long>(i), static_cast<long long>(c.passed ? 1 : 0),
                      c.measured, std::isfinite(c.lower) ? Cell{c.lower} : Cell{},
                      std::isfinite(c.upper) ? Cell{c.upper} : Cell{}});
  }
  return t;
}

}  // namespace

CommandResult cmd_spectrum(const RunConfig& config) {
  config.validate();
  const PhysicalParams params = config.params();
  CommandResult out;
  out.command = "spectrum";
  out.table.columns = {"n", "m", "E", "E_minus_rest", "k1", "kummer_a", "spacing_to_next"};
  const std::vector<double> gaps =
      config.n_max >= 1 ? level_spacings(config.n_max, params) : std::vector<double>{};
  for (int n = 0; n <= config.n_max; ++n) {
    const EnergyLevel level = energy({n, config.m}, params);
    // E - m0c^2 = m0c^2 x / (sqrt(1+x) + 1), x = 4(n+1) lambda.
    const double x = 4.0 * (n + 1) * params.lambda();
    const double kinetic = params.rest_energy() * x / (std::sqrt(1.0 + x) + 1.0);
    const Cell spacing = n < config.n_max ? Cell{gaps[static_cast<std::size_t>(n)]} : Cell{};
    out.table.rows.push_back({static_cast<long long>(n), static_cast<long long>(config.m),
                              level.energy, kinetic, level.k1, level.kummer_a, spacing});
  }
  return out;
}

CommandResult cmd_wavefn(const RunConfig& config) {
  config.validate();
  const PhysicalParams params = config.params();
  const QuantumNumbers qn{config.n, config.m};
  const RadialGrid grid =
      RadialGrid::in_oscillator_lengths(config.rho_max_b, config.grid_points, params);
  const SpinorState state(qn, energy(qn, params).energy, params, grid);

  CommandResult out;
  out.command = "wavefn";
  out.table.columns = {"rho", "z", "R1_normalized", "R2_derived", "probability_density"};
  const Eigen::VectorXd r1 = state.upper().normalized_values();
  const Eigen::VectorXd r2 = state.lower().normalized_values();
  for (int j = 0; j < grid.num_points(); ++j) {
    const double rho = grid[j];
    const double density = 2.0 * std::numbers::pi * rho * (r1(j) * r1(j) + r2(j) * r2(j));
    out.table.rows.push_back(
        {rho, to_dimensionless_z(rho, params), r1(j), r2(j), density});
  }
  return out;
}

CommandResult cmd_verify(const RunConfig& config) {
  config.validate();
  CommandResult out;
  out.command = "verify";
  out.checks = run_verification(verify_config(config));
  out.table = checks_table(out.checks);
  return out;
}

CommandResult cmd_nr_limit(const RunConfig& config) {
  config.validate();
  if (config.lambdas.empty()) throw std::invalid_argument("nr-limit: empty lambda list");
  for (double lam : config.lambdas) {
    if (!(lam > 0.0) || lam > 0.1) {
      throw std::invalid_argument("nr-limit: each lambda must lie in (0, 0.1]");
    }
  }
  CommandResult out;
  out.command = "nr-limit";
  out.table.columns = {"lambda",       "n",         "E_exact", "E_three_term",
                       "abs_error",    "error_over_lambda_cubed"};
  for (double lam : config.lambdas) {
    // Energies in units of m0 c^2.
    const PhysicalParams p(1.0, lam, 1.0, 1.0);
    for (int n = 0; n <= config.n_max; ++n) {
      const double exact = energy({n, 0}, p).energy;
      const double three = nr_expansion(n, p).sum();
      const double err = std::abs(nr_remainder(n, p));
      out.table.rows.push_back(
          {lam, static_cast<long long>(n), exact, three, err, err / (lam * lam * lam)});
    }
  }
  return out;
}

std::string render_csv(const CommandResult& result) {
  std::string text;
  const Table& t = result.table;
  const bool is_verify = !result.checks.empty();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c > 0) text += ',';
    text += t.columns[c];
  }
  text += '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) text += ',';
      // The verify table stores the check index in column 0; print its name.
      if (is_verify && c == 0) {
        text += result.checks[r].name;
      } else {
        text += format_cell(row[c]);
      }
    }
    text += '\n';
  }
  return text;
}

std::string render_json(const RunConfig& config, const CommandResult& result) {
  nlohmann::ordered_json cfg;
  cfg["command"] = result.command;
  cfg["units"] = config.units;
  const PhysicalParams p = config.params();
  cfg["rest_mass"] = p.rest_mass();
  cfg["omega"] = p.omega();
  cfg["hbar"] = p.hbar();
  cfg["c"] = p.c();
  cfg["n_max"] = config.n_max;
  cfg["n"] = config.n;
  cfg["m"] = config.m;
  cfg["rho_max_b"] = config.rho_max_b;
  cfg["grid_points"] = config.grid_points;
  cfg["format"] = config.format;
  cfg["tolerances"] = config.tolerances;
  cfg["lambdas"] = config.lambdas;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const bool is_verify = !result.checks.empty();
  for (std::size_t r = 0; r < result.table.rows.size(); ++r) {
    nlohmann::ordered_json row;
    for (std::size_t c = 0; c < result.table.columns.size(); ++c) {
      if (is_verify && c == 0) {
        row[result.table.columns[c]] = result.checks[r].name;
      } else {
        row[result.table.columns[c]] = cell_json(result.table.rows[r][c]);
      }
    }
    rows.push_back(std::move(row));
  }

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : result.checks) {
    checks.push_back({{"name", c.name},
                      {"description", c.description},
                      {"passed", c.passed},
                      {"measured", real_or_null(c.measured)},
                      {"lower", real_or_null(c.lower)},
                      {"upper", real_or_null(c.upper)}});
  }

  nlohmann::ordered_json doc;
  doc["config"] = std::move(cfg);
  doc["rows"] = std::move(rows);
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string render(const RunConfig& config, const CommandResult& result) {
  return config.format == "json" ? render_json(config, result) : render_csv(result);
}

std::string resolve_output_path(const std::string& output) {
  if (output == "-") return output;
  const fs::path path(output);
  if (path.is_absolute()) return output;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return (fs::path(dir) / path).string();
  }
  return output;
}

void write_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into '" + path + "'");
  }
}

}  // namespace diracosc::cli
