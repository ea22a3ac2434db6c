#pragma once

#include <vector>

#include "diracosc/units.hpp"

namespace diracosc {

/// Radial termination index n >= 0 and angular momentum index m >= 0.
///
/// Negative m is rejected: the regular radial factor z^{m/2} diverges at the
/// origin for m < 0, and the m-independent spectrum only holds for m >= 0.
struct QuantumNumbers {
  int n = 0;
  int m = 0;

  QuantumNumbers() = default;
  QuantumNumbers(int n_, int m_);
};

/// Positive-branch eigenvalue together with the dimensionless bookkeeping of
/// the radial equation.
struct EnergyLevel {
  QuantumNumbers qn;
  double energy;     // E
  double k1;         // k^2 hbar / (m0 omega)
  double kummer_a;   // (m + 1 - k1/2) / 2, equal to -(n+1)
  double k_sq;       // k^2, inverse length squared
};

/// Three terms of the small-lambda expansion of E.
struct NrExpansion {
  double rest_energy;     // m0 c^2
  double harmonic_term;   // 2 (n+1) hbar omega
  double correction;      // -2 (n+1)^2 (hbar omega)^2 / (m0 c^2)

  double sum() const { return rest_energy + harmonic_term + correction; }
};

/// E = sqrt(m0^2 c^4 + 4 (n+1) m0 c^2 hbar omega).  Independent of m.
EnergyLevel energy(const QuantumNumbers& qn, const PhysicalParams& params);

/// (E^2 - m0^2 c^4) / (m0 c^2 hbar omega), the kinetic part of k1.
double kinetic_k1(double energy, const PhysicalParams& params);

/// k1 = 2(m+1) + kinetic_k1(E).
double k1_from_energy(double energy, int m, const PhysicalParams& params);

/// Kummer first argument a(E) = (m + 1 - k1(E)/2) / 2.  An eigenvalue is
/// reached where this equals -(n+1).  Strictly decreasing in E.
double quantization_residual(double trial_energy, int m, const PhysicalParams& params);

NrExpansion nr_expansion(int n, const PhysicalParams& params);

/// E_exact - (three-term expansion), evaluated without cancellation.
double nr_remainder(int n, const PhysicalParams& params);

/// E(n+1) - E(n) for n = 0 .. n_max - 1.
std::vector<double> level_spacings(int n_max, const PhysicalParams& params);

}  // namespace diracosc
