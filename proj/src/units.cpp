#include "diracosc/units.hpp"

#include <string>

namespace diracosc {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string("PhysicalParams: ") + name +
                                " must be finite and strictly positive");
  }
}

}  // namespace

PhysicalParams::PhysicalParams(double rest_mass, double omega, double hbar, double c)
    : rest_mass_(rest_mass), omega_(omega), hbar_(hbar), c_(c), lambda_(0.0) {
  require_positive(rest_mass, "rest_mass");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  require_positive(c, "c");
  // Divide stepwise: hbar*omega in SI is ~1e-14 J and m0 c^2 ~1e-13 J, both
  // representable, but keep the ratio out of under/overflow for extreme inputs.
  lambda_ = (hbar / c) * (omega / c) / rest_mass;
  if (!std::isfinite(lambda_) || !(lambda_ > 0.0)) {
    throw std::invalid_argument("PhysicalParams: hbar*omega/(m0 c^2) is not finite and positive");
  }
}

PhysicalParams natural_params() { return PhysicalParams(1.0, 1.0, 1.0, 1.0); }

PhysicalParams si_params(double rest_mass_kg, double omega_rad_s) {
  return PhysicalParams(rest_mass_kg, omega_rad_s, kHbarSI, kSpeedOfLightSI);
}

double oscillator_length(const PhysicalParams& params) {
  return std::sqrt(params.hbar() / (params.rest_mass() * params.omega()));
}

OscillatorScales scales(const PhysicalParams& params) {
  return {oscillator_length(params), params.energy_quantum(), params.rest_energy()};
}

double to_dimensionless_z(double rho, const PhysicalParams& params) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) {
    throw std::domain_error("to_dimensionless_z: rho must be finite and non-negative");
  }
  const double r = rho / oscillator_length(params);
  return r * r;
}

}  // namespace diracosc
