#pragma once

#include <cmath>
#include <stdexcept>

namespace diracosc {

/// Rest mass, oscillator angular frequency and the two fundamental constants.
///
/// Every derived quantity in the library depends only on the dimensionless
/// ratio lambda = hbar*omega / (m0 c^2) and on z = (rho/b)^2, so SI inputs are
/// reduced to those before any arithmetic happens.
class PhysicalParams {
 public:
  PhysicalParams(double rest_mass, double omega, double hbar, double c);

  double rest_mass() const { return rest_mass_; }
  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  double c() const { return c_; }

  /// hbar*omega / (m0 c^2).
  double lambda() const { return lambda_; }
  double rest_energy() const { return rest_mass_ * c_ * c_; }
  double energy_quantum() const { return hbar_ * omega_; }

 private:
  double rest_mass_;
  double omega_;
  double hbar_;
  double c_;
  double lambda_;
};

/// Length and energy scales of a given parameter set.
struct OscillatorScales {
  double length;         // b = sqrt(hbar / (m0 omega))
  double energy_quantum; // hbar omega
  double rest_energy;    // m0 c^2
};

inline constexpr double kHbarSI = 1.054571817e-34;  // J s
inline constexpr double kSpeedOfLightSI = 299792458.0;  // m / s

/// m0 = c = hbar = omega = 1.
PhysicalParams natural_params();

/// SI mass (kg) and angular frequency (rad/s) with CODATA hbar and c.
PhysicalParams si_params(double rest_mass_kg, double omega_rad_s);

OscillatorScales scales(const PhysicalParams& params);

/// sqrt(hbar / (m0 omega)).
double oscillator_length(const PhysicalParams& params);

/// z = (m0 omega / hbar) rho^2, evaluated as (rho / b)^2.
double to_dimensionless_z(double rho, const PhysicalParams& params);

}  // namespace diracosc
