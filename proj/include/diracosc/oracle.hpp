#pragma once

// Numerical checks that do not go through the closed-form spectrum: Simpson
// quadrature, a finite-difference radial eigensolver, and residuals of the
// radial and coupled first-order equations.

#include <Eigen/Core>
#include <string>
#include <vector>

#include "diracosc/spectrum.hpp"
#include "diracosc/units.hpp"
#include "diracosc/wavefn.hpp"

namespace diracosc {

/// integral_0^{rho_max} f(rho) drho by composite Simpson; f(0) is sample 0.
double integrate_radial(const Eigen::Ref<const Eigen::VectorXd>& values, const RadialGrid& grid);

/// Symmetric tridiagonal discretization of the radial oscillator equation
///
///   -(r R')' + (m^2 / r + r^3) R = k1 r R,      r = rho / b,
///
/// on nodes r_j = j h with Dirichlet R = 0 at r_max.  Rows are cell
/// integrals (flux form), and u_j = sqrt(w_j) R_j with cell weights w_j ~ r_j
/// turns the generalized problem into a symmetric one whose eigenvalues are
/// k1 directly.  For m = 0 the origin node is an unknown with half-cell
/// weight h/8; for m >= 1 the first unknown is r_1 = h and R(0) = 0.
struct TridiagonalOperator {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;
  Eigen::VectorXd nodes;    // r of each unknown, units of b
  Eigen::VectorXd weights;  // w_j, so that R_j = u_j / sqrt(w_j)
  RadialGrid grid;
  int angular_m;

  Eigen::Index dimension() const { return diagonal.size(); }
};

inline constexpr int kMinOperatorPoints = 64;

TridiagonalOperator build_radial_operator(int m, const RadialGrid& grid,
                                          const PhysicalParams& params);

/// The `count` smallest eigenvalues, ascending (Sturm bisection).
std::vector<double> smallest_eigenvalues(const TridiagonalOperator& op, int count);

/// Convenience: smallest `count` FD values of k1 for angular index m.
std::vector<double> fd_k1_levels(int m, const RadialGrid& grid, const PhysicalParams& params,
                                 int count);

/// Energy reached from an FD k1 value by inverting k1 = 2(m+1) + (E^2 - m0^2 c^4)/(m0 c^2 hbar omega).
double energy_from_k1(double k1, int m, const PhysicalParams& params);

/// Solves quantization_residual(E, m) = -(n+1) by bisection on
/// [m0 c^2, E_hi] without consulting the closed-form energy.
double bisect_energy(int n, int m, const PhysicalParams& params);

struct ResidualReport {
  std::string equation_id;
  double rms_residual = 0.0;  // sqrt(mean r^2) / sqrt(mean s^2)
  double max_residual = 0.0;  // max |r|     / sqrt(mean s^2)
  int num_samples = 0;
  bool degenerate = false;    // zero input; residuals are 0 by convention
  int grid_points = 0;
  double rho_max = 0.0;
};

/// Left side of z^2 R'' + z R' + (k1 z - m^2 - z^2) R / 4 at interior grid
/// samples, with derivatives of the closed form from the Kummer identity.
/// s is the largest single term at each sample.
ResidualReport ode_residual(const RadialFunction& rf, int m, double k1,
                            const PhysicalParams& params);

/// Radial form of the decoupled lower-component equation for an angular
/// index l = rf.angular_index(): same operator as above with
/// k1 -> 2(l - 1) + (E^2 - m0^2 c^4)/(m0 c^2 hbar omega).
ResidualReport lower_equation_residual(const RadialFunction& rf, double energy,
                                       const PhysicalParams& params);

/// Samples (r, phi) in units of b for the coupled-system residual; r > 0.
struct PolarGrid {
  double r_min = 0.05;
  double r_max = 6.0;
  int num_radial = 96;
  int num_angular = 24;
};

/// Both first-order equations
///   (E - m0 c^2) psi1 + (i hbar c d_x + hbar c d_y - i c m0 w x - m0 c w y) psi2 = 0
///   (-i hbar c d_x + hbar c d_y - i c m0 w x + m0 c w y) psi1 - (E + m0 c^2) psi2 = 0
/// evaluated in Cartesian form on the polar sample set, with d_x, d_y built
/// from exact radial derivatives and the angular index of each component.
/// Reports the worse of the two equations.
ResidualReport coupled_residual(const RadialFunction& psi1, const RadialFunction& psi2,
                                double energy, const PhysicalParams& params,
                                const PolarGrid& polar = {});

/// psi1 from qn, psi2 derived from psi1 at the given energy.
ResidualReport coupled_residual(const QuantumNumbers& qn, double energy,
                                const PhysicalParams& params, const PolarGrid& polar = {});

/// Relates the derived lower component to the e^{i m phi} M(-n, m+1, z)
/// ansatz.  Misfits are ||d - s f|| / ||d|| with the least-squares scale s.
struct LowerComponentComparison {
  int derived_angular_index;
  double misfit_same_index;     // f = exp(-z/2) z^{m/2} M(-n, m+1, z)
  double misfit_shifted_index;  // f = exp(-z/2) z^{(m+1)/2} M(-n, m+2, z)
  ResidualReport ansatz_decoupled;  // ansatz in the lower equation with l = m
  ResidualReport derived_decoupled; // derived component, l = m + 1
  ResidualReport ansatz_coupled;    // ansatz (best-fit scale, phase -i) as psi2 in the coupled system
};

LowerComponentComparison compare_lower_component(const QuantumNumbers& qn, double energy,
                                                 const PhysicalParams& params,
                                                 const RadialGrid& grid);

}  // namespace diracosc
