#include "diracosc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "diracosc/oracle.hpp"
#include "diracosc/specfun.hpp"
#include "diracosc/spectrum.hpp"
#include "diracosc/wavefn.hpp"

namespace diracosc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Check make(std::string name, std::string description, double lower, double upper) {
  Check c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.lower = lower;
  c.upper = upper;
  return c;
}

double rel(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// A from 2 pi A^2 (b^2/2) integral e^{-z} z^m M(-k, m+1, z)^2 dz = 1 and
// integral e^{-z} z^a [L_k^(a)]^2 dz = Gamma(k+a+1)/k!, M = L / C(k+m, k).
double laguerre_norm_constant(const QuantumNumbers& qn, const PhysicalParams& params) {
  const int k = qn.n + 1;
  const double b = oscillator_length(params);
  const double c = specfun::binomial(k + qn.m, k);
  const double gamma_ratio = std::exp(std::lgamma(k + qn.m + 1.0) - std::lgamma(k + 1.0));
  return c / (b * std::sqrt(std::numbers::pi * gamma_ratio));
}

using CheckBody = std::function<double(const VerifyConfig&)>;

double spectrum_closed_form(const VerifyConfig& cfg) {
  const PhysicalParams& p = cfg.params;
  double worst = 0.0;
  for (int n = 0; n <= std::max(cfg.n_max, 10); ++n) {
    const double mc2 = p.rest_energy();
    const double direct = std::sqrt(mc2 * mc2 + 4.0 * (n + 1) * mc2 * p.energy_quantum());
    worst = std::max(worst, rel(energy({n, cfg.m}, p).energy, direct));
  }
  return worst;
}

double m_independence(const VerifyConfig& cfg) {
  double worst = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const double reference = energy({n, 0}, cfg.params).energy;
    for (int m = 0; m <= std::max(10, cfg.m); ++m) {
      worst = std::max(worst, std::abs(energy({n, m}, cfg.params).energy - reference));
    }
  }
  return worst;
}

double quantization_bisection(const VerifyConfig& cfg) {
  double worst = 0.0;
  for (int n = 0; n <= std::max(cfg.n_max, 10); ++n) {
    worst = std::max(worst, rel(bisect_energy(n, cfg.m, cfg.params),
                                energy({n, cfg.m}, cfg.params).energy));
  }
  return worst;
}

int fd_level_count(const VerifyConfig& cfg) { return std::max(4, cfg.n_max + 2); }

double exact_k1(int n_r, int m) { return 2.0 * (2 * n_r + m + 1); }

std::vector<double> fd_errors(const VerifyConfig& cfg, int points) {
  const RadialGrid grid =
      RadialGrid::in_oscillator_lengths(cfg.rho_max_b, points, cfg.params);
  const int count = fd_level_count(cfg);
  const std::vector<double> k1 = fd_k1_levels(cfg.m, grid, cfg.params, count);
  std::vector<double> errors;
  for (int n_r = 0; n_r < count; ++n_r) {
    errors.push_back(rel(k1[static_cast<std::size_t>(n_r)], exact_k1(n_r, cfg.m)));
  }
  return errors;
}

double fd_spectrum(const VerifyConfig& cfg) {
  const auto errors = fd_errors(cfg, cfg.num_points);
  return *std::max_element(errors.begin(), errors.end());
}

double fd_convergence(const VerifyConfig& cfg) {
  const auto coarse = fd_errors(cfg, cfg.num_points);
  const auto fine = fd_errors(cfg, 2 * cfg.num_points - 1);
  // Report the ratio farthest from 4.
  double farthest = 4.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double ratio = coarse[i] / fine[i];
    if (!(std::abs(ratio - 4.0) <= std::abs(farthest - 4.0))) farthest = ratio;
  }
  return farthest;
}

double fd_energy_mapping(const VerifyConfig& cfg) {
  const RadialGrid grid =
      RadialGrid::in_oscillator_lengths(cfg.rho_max_b, cfg.num_points, cfg.params);
  const int count = fd_level_count(cfg);
  const std::vector<double> k1 = fd_k1_levels(cfg.m, grid, cfg.params, count);
  double worst = 0.0;
  // n_r = 0 is the threshold level E = m0 c^2, outside the a = -n-1 family.
  for (int n_r = 1; n_r < count; ++n_r) {
    const double e = energy_from_k1(k1[static_cast<std::size_t>(n_r)], cfg.m, cfg.params);
    worst = std::max(worst, rel(e, energy({n_r - 1, cfg.m}, cfg.params).energy));
  }
  return worst;
}

RadialGrid config_grid(const VerifyConfig& cfg) {
  return RadialGrid::in_oscillator_lengths(cfg.rho_max_b, cfg.num_points, cfg.params);
}

double ode_residual_upper(const VerifyConfig& cfg) {
  const RadialGrid grid = config_grid(cfg);
  double worst = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const EnergyLevel level = energy({n, cfg.m}, cfg.params);
    const auto report =
        ode_residual(radial_psi1(level.qn, grid, cfg.params), cfg.m, level.k1, cfg.params);
    worst = std::max(worst, report.rms_residual);
  }
  return worst;
}

double ode_residual_lower(const VerifyConfig& cfg) {
  const RadialGrid grid = config_grid(cfg);
  double worst = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const EnergyLevel level = energy({n, cfg.m}, cfg.params);
    const RadialFunction psi2 = derive_lower_component(radial_psi1(level.qn, grid, cfg.params),
                                                       cfg.m, level.energy, cfg.params);
    worst = std::max(worst, lower_equation_residual(psi2, level.energy, cfg.params).rms_residual);
  }
  return worst;
}

double coupled(const VerifyConfig& cfg) {
  double worst = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const EnergyLevel level = energy({n, cfg.m}, cfg.params);
    worst = std::max(worst, coupled_residual(level.qn, level.energy, cfg.params).rms_residual);
  }
  return worst;
}

double coupled_sensitivity(const VerifyConfig& cfg) {
  double weakest = kInf;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const EnergyLevel level = energy({n, cfg.m}, cfg.params);
    weakest = std::min(
        weakest, coupled_residual(level.qn, 1.01 * level.energy, cfg.params).rms_residual);
  }
  return weakest;
}

double node_count(const VerifyConfig& cfg) {
  int mismatches = 0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    if (count_radial_nodes({n, cfg.m}, cfg.params, Component::Upper) != n + 1) ++mismatches;
    if (count_radial_nodes({n, cfg.m}, cfg.params, Component::LowerAnsatz) != n) ++mismatches;
  }
  return mismatches;
}

double normalization(const VerifyConfig& cfg) {
  const RadialGrid grid = config_grid(cfg);
  double worst = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const QuantumNumbers qn{n, cfg.m};
    const double a = *normalize(radial_psi1(qn, grid, cfg.params)).norm_constant();
    worst = std::max(worst, rel(a, laguerre_norm_constant(qn, cfg.params)));
  }
  return worst;
}

double kummer_laguerre(const VerifyConfig&) {
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int alpha = 0; alpha <= 10; ++alpha) {
      for (double z : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0}) {
        const double l = specfun::laguerre(n, alpha, z);
        const double via_m =
            specfun::binomial(n + alpha, n) * specfun::kummer_m<double>(-n, alpha + 1.0, z);
        worst = std::max(worst, std::abs(via_m - l) / std::max(1.0, std::abs(l)));
      }
    }
  }
  return worst;
}

double nr_limit_scaling(const VerifyConfig& cfg) {
  double worst = 1.0;
  for (int n = 0; n <= std::max(cfg.n_max, 5); ++n) {
    double lo = kInf;
    double hi = 0.0;
    for (double lam : {1e-2, 1e-3, 1e-4}) {
      const PhysicalParams p(1.0, lam, 1.0, 1.0);
      const NrExpansion nr = nr_expansion(n, p);
      const double exact = energy({n, 0}, p).energy;
      const double scaled = std::abs(exact - nr.sum()) / (lam * lam * lam);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    worst = std::max(worst, hi / lo);
  }
  return worst;
}

double level_spacing(const VerifyConfig& cfg) {
  const auto gaps = level_spacings(100, cfg.params);
  int violations = 0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (!(gaps[i] > 0.0)) ++violations;
    if (i > 0 && !(gaps[i] < gaps[i - 1])) ++violations;
  }
  return violations;
}

struct Entry {
  Check check;
  CheckBody body;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {make("spectrum_closed_form", "E(n) vs sqrt(m0^2c^4 + 4(n+1) m0c^2 hbar w), max rel", -kInf, 1e-12),
       spectrum_closed_form},
      {make("m_independence", "max |E(n,m) - E(n,0)| over m <= 10", -kInf, 0.0), m_independence},
      {make("quantization_bisection", "bisection on a(E) = -(n+1) vs E(n), max rel", -kInf, 1e-10),
       quantization_bisection},
      {make("fd_spectrum", "FD k1 vs 2(2n_r+m+1), max rel", -kInf, 1e-3), fd_spectrum},
      {make("fd_convergence", "FD error ratio under 2x refinement (farthest from 4)", 3.6, 4.4),
       fd_convergence},
      {make("fd_energy_mapping", "FD k1 (n_r >= 1) mapped to E vs E(n_r - 1), max rel", -kInf, 1e-3),
       fd_energy_mapping},
      {make("ode_residual_upper", "radial equation residual of psi1, max rms", -kInf, 1e-12),
       ode_residual_upper},
      {make("ode_residual_lower", "lower radial equation residual of derived psi2, max rms", -kInf, 1e-8),
       ode_residual_lower},
      {make("coupled_residual", "first-order coupled system residual, max rms", -kInf, 1e-6), coupled},
      {make("coupled_sensitivity", "coupled residual with E * 1.01, min rms", 1e-3, kInf),
       coupled_sensitivity},
      {make("node_count", "node-count mismatches (psi1: n+1, psi2 ansatz: n)", -kInf, 0.0), node_count},
      {make("normalization", "quadrature A vs Laguerre closed form, max rel", -kInf, 1e-8), normalization},
      {make("kummer_laguerre_identity", "|C(n+a,n) M(-n,a+1,z) - L_n^a(z)| / max(1,|L|)", -kInf, 1e-10),
       kummer_laguerre},
      {make("nr_limit_scaling", "max/min of |E - E_3term| / lambda^3 over lambda decades", -kInf, 2.0),
       nr_limit_scaling},
      {make("level_spacing", "violations of 0 < dE(n+1) < dE(n) for n < 100", -kInf, 0.0), level_spacing},
  };
  return entries;
}

}  // namespace

const std::vector<Check>& default_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (const auto& e : registry()) out.push_back(e.check);
    return out;
  }();
  return checks;
}

std::vector<Check> run_verification(const VerifyConfig& config) {
  if (config.n_max < 0) throw std::invalid_argument("run_verification: n_max must be >= 0");
  if (config.m < 0) throw std::invalid_argument("run_verification: m must be >= 0");
  for (const auto& [name, value] : config.tolerance_overrides) {
    const auto& entries = registry();
    const bool known = std::any_of(entries.begin(), entries.end(),
                                   [&](const Entry& e) { return e.check.name == name; });
    if (!known) throw std::invalid_argument("run_verification: unknown check '" + name + "'");
    (void)value;
  }

  std::vector<Check> results;
  for (const auto& entry : registry()) {
    Check check = entry.check;
    if (auto it = config.tolerance_overrides.find(check.name);
        it != config.tolerance_overrides.end()) {
      const bool has_lower = std::isfinite(check.lower);
      const bool has_upper = std::isfinite(check.upper);
      if (has_upper && !has_lower) check.upper = it->second;
      if (has_lower && !has_upper) check.lower = it->second;
    }
    try {
      check.measured = entry.body(config);
      check.passed = check.measured >= check.lower && check.measured <= check.upper;
    } catch (const std::exception& ex) {
      check.measured = std::numeric_limits<double>::quiet_NaN();
      check.passed = false;
      check.description += std::string(" [error: ") + ex.what() + "]";
    }
    results.push_back(std::move(check));
  }
  return results;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace diracosc
