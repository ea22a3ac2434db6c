#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>

#include "diracosc/spectrum.hpp"
#include "diracosc/units.hpp"

namespace diracosc {

/// Uniform radial samples rho_j = j * rho_max / (N - 1), j = 0 .. N-1.  The
/// origin is sample 0; N is odd so composite Simpson applies.
class RadialGrid {
 public:
  RadialGrid(double rho_max, int num_points);

  /// Grid whose extent is given in oscillator lengths b.
  static RadialGrid in_oscillator_lengths(double rho_max_over_b, int num_points,
                                          const PhysicalParams& params);
  /// rho_max = 12 b, 4097 points.
  static RadialGrid default_for(const PhysicalParams& params);

  double rho_max() const { return rho_max_; }
  int num_points() const { return static_cast<int>(samples_.size()); }
  double spacing() const { return spacing_; }
  const Eigen::VectorXd& samples() const { return samples_; }
  double operator[](Eigen::Index j) const { return samples_(j); }

 private:
  double rho_max_;
  double spacing_;
  Eigen::VectorXd samples_;
};

/// Closed-form radial shape exp(-z/2) z^{power/2} M(a, b, z).
struct KummerProfile {
  double a = 0.0;
  double b = 1.0;
  int power = 0;

  double value(double z) const;

  /// f, z f_z and z^2 f_zz at z; the scaled forms stay finite at z = 0.
  struct Derivatives {
    double f;
    double z_fz;
    double z2_fzz;
  };
  Derivatives derivatives(double z) const;
};

/// Sampled radial profile with the closed form it came from.
///
/// The sampled values are amplitude * profile(z_j); the complex unit `phase`
/// multiplies the whole function and is carried separately so that the
/// radial values stay real.  `norm_constant` is filled by normalize().
class RadialFunction {
 public:
  RadialFunction(RadialGrid grid, KummerProfile profile, double length_scale, int angular_index,
                 double amplitude = 1.0, std::complex<double> phase = {1.0, 0.0});

  const RadialGrid& grid() const { return grid_; }
  const KummerProfile& profile() const { return profile_; }
  double length_scale() const { return length_scale_; }
  int angular_index() const { return angular_index_; }
  double amplitude() const { return amplitude_; }
  std::complex<double> phase() const { return phase_; }
  const Eigen::VectorXd& values() const { return values_; }
  Eigen::VectorXcd complex_values() const { return values_.cast<std::complex<double>>() * phase_; }

  std::optional<double> norm_constant() const { return norm_constant_; }
  RadialFunction with_norm_constant(double a) const;
  /// A * values; throws if not normalized.
  Eigen::VectorXd normalized_values() const;

  /// Radial value amplitude * profile(z(rho)) at an arbitrary rho.
  double evaluate(double rho) const;

  /// Copy with amplitude and values multiplied by s; norm constant dropped.
  RadialFunction scaled(double s) const;

  bool is_zero() const { return amplitude_ == 0.0; }

 private:
  RadialGrid grid_;
  KummerProfile profile_;
  double length_scale_;
  int angular_index_;
  double amplitude_;
  std::complex<double> phase_;
  Eigen::VectorXd values_;
  std::optional<double> norm_constant_;
};

/// Upper component exp(-z/2) z^{m/2} M(-n-1, m+1, z), unnormalized.
RadialFunction radial_psi1(const QuantumNumbers& qn, const RadialGrid& grid,
                           const PhysicalParams& params);

/// Lower-component ansatz exp(-z/2) z^{m/2} M(-n, m+1, z), unnormalized,
/// labelled with angular index m.
RadialFunction radial_psi2(const QuantumNumbers& qn, const RadialGrid& grid,
                           const PhysicalParams& params);

inline constexpr double kTailTolerance = 1e-10;

/// Sets A so that 2 pi * integral |A R|^2 rho drho = 1 over the grid.
/// Throws if the function is zero or if more than kTailTolerance of the
/// probability lies beyond rho_max.
RadialFunction normalize(const RadialFunction& rf);

/// Lower component from the upper one through the first-order coupling
///   psi2 = [(-i hbar c d_x + hbar c d_y - i c m0 omega x + m0 c omega y) psi1] / (E + m0 c^2).
///
/// For psi1 = e^{i m phi} R(z) with R = exp(-z/2) z^{m/2} M(a, m+1, z) this is
///   psi2 = -i e^{i(m+1)phi} (2a/(m+1)) exp(-z/2) z^{(m+1)/2} M(a+1, m+2, z) / e_plus,
/// e_plus = (E + m0 c^2) / sqrt(m0 c^2 hbar omega).  The result carries
/// angular index m + 1 and inherits psi1's norm constant.
RadialFunction derive_lower_component(const RadialFunction& psi1_radial, int m, double energy,
                                      const PhysicalParams& params);

/// (E + m0 c^2) / sqrt(m0 c^2 hbar omega).
double reduced_energy_plus(double energy, const PhysicalParams& params);
/// (E - m0 c^2) / sqrt(m0 c^2 hbar omega).
double reduced_energy_minus(double energy, const PhysicalParams& params);

/// Point value of the two-component spinor.
struct SpinorSample {
  double rho;
  double phi;  // in [0, 2 pi)
  std::complex<double> psi1;
  std::complex<double> psi2;
};

/// Upper component and its derived lower component with a joint
/// normalization constant A: 2 pi * integral (|A R1|^2 + |A R2|^2) rho drho = 1.
class SpinorState {
 public:
  SpinorState(const QuantumNumbers& qn, double energy, const PhysicalParams& params);
  SpinorState(const QuantumNumbers& qn, double energy, const PhysicalParams& params,
              const RadialGrid& grid);

  const QuantumNumbers& qn() const { return qn_; }
  double energy() const { return energy_; }
  double norm_constant() const { return norm_; }
  const RadialFunction& upper() const { return upper_; }
  const RadialFunction& lower() const { return lower_; }

  SpinorSample sample(double rho, double phi) const;

 private:
  QuantumNumbers qn_;
  double energy_;
  RadialFunction upper_;
  RadialFunction lower_;
  double norm_;
};

SpinorSample spinor_sample(const QuantumNumbers& qn, double rho, double phi, double energy,
                           const PhysicalParams& params);

/// Sign changes between consecutive samples, skipping samples with
/// |v| < 1e-13 max|v|.
int count_sign_changes(const Eigen::Ref<const Eigen::VectorXd>& values);

enum class Component { Upper, LowerAnsatz };

/// Nodes of the radial profile on (0, rho_max), rho_max = (2 sqrt(4(n+1) + 2m) + 4) b.
/// Upper has n + 1 nodes; the lower ansatz has n.
int count_radial_nodes(const QuantumNumbers& qn, const PhysicalParams& params,
                       Component component = Component::Upper);

}  // namespace diracosc
