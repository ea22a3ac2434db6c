#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diracosc/units.hpp"
#include "diracosc/verification.hpp"

namespace diracosc::cli {

inline constexpr const char* kOutputDirEnv = "DIRAC_OSC_OUTPUT_DIR";
inline constexpr double kElectronMassKg = 9.1093837015e-31;
inline constexpr double kDefaultSiOmega = 1.0e18;  // rad/s, lambda ~ 1.3e-3 for an electron

struct RunConfig {
  std::string units = "natural";  // natural | si
  std::optional<double> omega;    // rad/s in SI, 1 in natural units
  std::optional<double> mass;     // kg in SI, 1 in natural units
  int n_max = 3;
  int n = 0;                      // wavefn only
  int m = 0;
  double rho_max_b = 12.0;        // grid extent in oscillator lengths
  int grid_points = 4097;
  std::string format = "csv";     // csv | json
  std::string output = "-";       // '-' is stdout
  std::map<std::string, double> tolerances;  // per-check bound overrides
  std::vector<double> lambdas = {1e-2, 1e-3, 1e-4};  // nr-limit only

  void validate() const;
  PhysicalParams params() const;
};

/// Empty cell, integer, or real.
using Cell = std::variant<std::monostate, long long, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CommandResult {
  std::string command;
  Table table;
  std::vector<Check> checks;

  bool ok() const { return all_passed(checks); }
};

CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_wavefn(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_nr_limit(const RunConfig& config);

/// Header row, comma separated, LF endings, reals as %.16e, empty cells blank.
std::string render_csv(const CommandResult& result);

/// {"config": ..., "rows": [...], "checks": [...]}, shortest round-trip reals.
std::string render_json(const RunConfig& config, const CommandResult& result);

std::string render(const RunConfig& config, const CommandResult& result);

/// Resolves `output` against $DIRAC_OSC_OUTPUT_DIR when it is relative.
std::string resolve_output_path(const std::string& output);

/// Writes through a temporary file in the target directory and renames it.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace diracosc::cli
