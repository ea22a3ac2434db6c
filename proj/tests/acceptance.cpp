// Acceptance sweep: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "diracosc/commands.hpp"
#include "diracosc/oracle.hpp"
#include "diracosc/quadrature.hpp"
#include "diracosc/specfun.hpp"
#include "diracosc/spectrum.hpp"
#include "diracosc/wavefn.hpp"

using namespace diracosc;

namespace {

constexpr double kSpectrumRel = 1e-12;
constexpr double kExactThree = 1e-15;
constexpr double kFdRel = 1e-3;
constexpr double kFdRatioLow = 3.6;
constexpr double kFdRatioHigh = 4.4;
constexpr double kBisectionRel = 1e-10;
constexpr double kOdeRms = 1e-12;
constexpr double kCoupledRms = 1e-6;
constexpr double kPerturbedRms = 1e-3;
constexpr double kIdentity = 1e-10;
constexpr double kNrScaleFactor = 2.0;
constexpr double kNrExampleAbs = 1e-12;
constexpr double kNormRel = 1e-8;
constexpr double kDensityAbs = 1e-6;

const PhysicalParams kNatural = natural_params();

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome spectrum_exactness() {
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    // E^2 - m0^2c^4 = 4(n+1) m0c^2 hbar w, natural units.
    const double direct = std::sqrt(1.0 + 4.0 * (n + 1));
    worst = std::max(worst, rel(energy({n, 0}, kNatural).energy, direct));
  }
  const double e1 = std::abs(energy({1, 0}, kNatural).energy - 3.0);
  return {worst <= kSpectrumRel && e1 <= kExactThree,
          fmt("max rel %.3e", worst) + fmt(", |E(1)-3| %.3e", e1)};
}

Outcome m_independence() {
  int mismatches = 0;
  for (int n = 0; n <= 5; ++n) {
    const double ref = energy({n, 0}, kNatural).energy;
    for (int m = 1; m <= 10; ++m) mismatches += energy({n, m}, kNatural).energy != ref;
  }
  return {mismatches == 0, std::to_string(mismatches) + " non-identical energies"};
}

Outcome oracle_agreement() {
  const RadialGrid coarse = RadialGrid::in_oscillator_lengths(12.0, 4097, kNatural);
  const RadialGrid fine = RadialGrid::in_oscillator_lengths(12.0, 8193, kNatural);
  double worst = 0.0, worst_map = 0.0;
  double ratio_min = INFINITY, ratio_max = 0.0;
  for (int m = 0; m <= 2; ++m) {
    const auto kc = fd_k1_levels(m, coarse, kNatural, 4);
    const auto kf = fd_k1_levels(m, fine, kNatural, 4);
    for (int n_r = 0; n_r < 4; ++n_r) {
      const double exact = 2.0 * (2 * n_r + m + 1);
      const double ec = rel(kc[static_cast<std::size_t>(n_r)], exact);
      const double ef = rel(kf[static_cast<std::size_t>(n_r)], exact);
      worst = std::max(worst, ec);
      ratio_min = std::min(ratio_min, ec / ef);
      ratio_max = std::max(ratio_max, ec / ef);
      if (n_r >= 1) {
        // n_r = n + 1 for the Dirac level n; n_r = 0 is the E = m0c^2 threshold.
        const double e_fd = energy_from_k1(kc[static_cast<std::size_t>(n_r)], m, kNatural);
        worst_map = std::max(worst_map, rel(e_fd, energy({n_r - 1, m}, kNatural).energy));
      }
    }
  }
  const bool ok = worst <= kFdRel && worst_map <= kFdRel && ratio_min >= kFdRatioLow &&
                  ratio_max <= kFdRatioHigh;
  return {ok, fmt("max rel %.3e", worst) + fmt(", ratio [%.3f", ratio_min) +
                  fmt(", %.3f]", ratio_max) + fmt(", energy map %.3e", worst_map)};
}

Outcome quantization_monotonicity() {
  bool decreasing = true;
  const int m = 1;
  double prev = quantization_residual(1.0, m, kNatural);
  for (int i = 1; i <= 2000; ++i) {
    const double e = 1.0 + 0.005 * i;
    const double r = quantization_residual(e, m, kNatural);
    decreasing = decreasing && r < prev;
    prev = r;
  }
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    worst = std::max(worst, rel(bisect_energy(n, m, kNatural), energy({n, m}, kNatural).energy));
  }
  return {decreasing && worst <= kBisectionRel,
          std::string(decreasing ? "strictly decreasing" : "NOT decreasing") +
              fmt(", bisection max rel %.3e", worst)};
}

Outcome eigenfunction_consistency() {
  const RadialGrid grid = RadialGrid::default_for(kNatural);
  double ode = 0.0, coupled = 0.0, perturbed = INFINITY;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const EnergyLevel level = energy({n, m}, kNatural);
      ode = std::max(ode, ode_residual(radial_psi1(level.qn, grid, kNatural), m, level.k1, kNatural)
                              .rms_residual);
      coupled = std::max(coupled, coupled_residual(level.qn, level.energy, kNatural).rms_residual);
      for (double f : {0.99, 1.01}) {
        perturbed = std::min(perturbed,
                             coupled_residual(level.qn, f * level.energy, kNatural).rms_residual);
      }
    }
  }
  return {ode <= kOdeRms && coupled <= kCoupledRms && perturbed > kPerturbedRms,
          fmt("ODE rms %.3e", ode) + fmt(", coupled rms %.3e", coupled) +
              fmt(", perturbed min %.3e", perturbed)};
}

Outcome node_counts() {
  int bad = 0;
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 5; ++m) {
      bad += count_radial_nodes({n, m}, kNatural, Component::Upper) != n + 1;
      bad += count_radial_nodes({n, m}, kNatural, Component::LowerAnsatz) != n;
    }
  }
  return {bad == 0, std::to_string(bad) + " wrong node counts"};
}

Outcome special_function_identity() {
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int alpha = 0; alpha <= 10; ++alpha) {
      for (int i = 0; i <= 200; ++i) {
        const double z = 0.25 * i;
        const double l = specfun::laguerre(n, alpha, z);
        const double lhs = specfun::binomial(n + alpha, n) * specfun::kummer_m(static_cast<double>(-n), alpha + 1.0, z);
        worst = std::max(worst, std::abs(lhs - l) / std::max(1.0, std::abs(l)));
      }
    }
  }
  return {worst <= kIdentity, fmt("max scaled error %.3e", worst)};
}

Outcome nr_limit() {
  const std::vector<double> lambdas = {1e-2, 1e-3, 1e-4};
  double spread = 1.0;
  for (int n = 0; n <= 5; ++n) {
    double lo = INFINITY, hi = 0.0;
    for (double lam : lambdas) {
      const PhysicalParams p(1.0, lam, 1.0, 1.0);
      const double scaled = std::abs(nr_remainder(n, p)) / (lam * lam * lam);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    spread = std::max(spread, hi / lo);
  }
  const double e = energy({0, 0}, PhysicalParams(1.0, 1e-4, 1.0, 1.0)).energy;
  const double err = std::abs(e - 1.000199980004);
  return {spread <= kNrScaleFactor && err <= kNrExampleAbs,
          fmt("error/lambda^3 spread %.4f", spread) + fmt(", |E - 1.000199980004| %.3e", err)};
}

Outcome normalization() {
  const RadialGrid grid = RadialGrid::default_for(kNatural);
  const double b = oscillator_length(kNatural);
  double worst = 0.0;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const int k = n + 1;
      const double gamma_ratio = std::exp(std::lgamma(k + m + 1.0) - std::lgamma(k + 1.0));
      const double closed =
          specfun::binomial(k + m, k) / (b * std::sqrt(std::numbers::pi * gamma_ratio));
      worst = std::max(worst, rel(*normalize(radial_psi1({n, m}, grid, kNatural)).norm_constant(),
                                  closed));
    }
  }
  // Emitted density column, composite Simpson in rho (same rule as normalize).
  double density_err = 0.0;
  for (int n = 0; n <= 3; ++n) {
    cli::RunConfig cfg;
    cfg.n = n;
    cfg.m = n % 3;
    const cli::CommandResult r = cli::cmd_wavefn(cfg);
    Eigen::VectorXd density(static_cast<Eigen::Index>(r.table.rows.size()));
    for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
      density(static_cast<Eigen::Index>(j)) = std::get<double>(r.table.rows[j][4]);
    }
    const double h = std::get<double>(r.table.rows[1][0]) - std::get<double>(r.table.rows[0][0]);
    const double integral = integrate_simpson(density, h);
    density_err = std::max(density_err, std::abs(integral - 1.0));
  }
  return {worst <= kNormRel && density_err <= kDensityAbs,
          fmt("norm max rel %.3e", worst) + fmt(", |density integral - 1| %.3e", density_err)};
}

Outcome level_spacing() {
  bool ok = true;
  for (const PhysicalParams& p :
       {kNatural, PhysicalParams(1.0, 1e-3, 1.0, 1.0), PhysicalParams(9.109e-31, 1e18, 1.054571817e-34, 2.99792458e8)}) {
    const auto gaps = level_spacings(100, p);
    ok = ok && gaps.size() == 100 && gaps[0] > 0.0;
    for (std::size_t i = 1; i < gaps.size(); ++i) ok = ok && gaps[i] > 0.0 && gaps[i] < gaps[i - 1];
  }
  const auto gaps = level_spacings(2, kNatural);
  const double e0 = std::abs(gaps[0] - (3.0 - std::sqrt(5.0)));
  const double e1 = std::abs(gaps[1] - (std::sqrt(13.0) - 3.0));
  ok = ok && e0 <= 1e-15 && e1 <= 1e-15;
  return {ok, std::string(ok ? "positive, decreasing" : "violation") + fmt(", first gaps err %.1e", std::max(e0, e1))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 spectrum exactness", spectrum_exactness},
      {"2 m-independence", m_independence},
      {"3 oracle agreement", oracle_agreement},
      {"4 quantization monotonicity", quantization_monotonicity},
      {"5 eigenfunction self-consistency", eigenfunction_consistency},
      {"6 node counts", node_counts},
      {"7 special-function identity", special_function_identity},
      {"8 non-relativistic limit", nr_limit},
      {"9 normalization", normalization},
      {"10 level spacing", level_spacing},
  };
  int failures = 0;
  for (const auto& [name, body] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-34s %s (%.2fs)\n", out.passed ? "PASS" : "FAIL", name.c_str(),
                out.detail.c_str(), secs);
    failures += !out.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
