#include "diracosc/wavefn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "diracosc/quadrature.hpp"
#include "diracosc/specfun.hpp"

namespace diracosc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kDefaultGridPoints = 4097;
constexpr double kDefaultGridExtent = 12.0;
constexpr double kNodeFloor = 1e-13;

double gaussian_power(double z, int power) {
  const double base = std::exp(-0.5 * z);
  if (power == 0) return base;
  return base * std::pow(z, 0.5 * power);
}

// 2 pi * integral f^2 rho drho over the grid, f given by samples.
double probability_integral(const Eigen::VectorXd& values, const RadialGrid& grid) {
  const Eigen::VectorXd integrand = values.array().square() * grid.samples().array();
  return kTwoPi * integrate_simpson(integrand, grid.spacing());
}

// Probability beyond rho_max, integrated on [rho_max, rho_max + 10 b].
double tail_probability(const RadialFunction& rf) {
  const RadialGrid& grid = rf.grid();
  const double start = grid.rho_max();
  const int points = 1025;
  const double step = 10.0 * rf.length_scale() / (points - 1);
  Eigen::VectorXd integrand(points);
  for (int j = 0; j < points; ++j) {
    const double rho = start + j * step;
    const double v = rf.evaluate(rho);
    integrand(j) = v * v * rho;
  }
  return kTwoPi * integrate_simpson(integrand, step);
}

void require_nonnegative_m(int m, const char* where) {
  if (m < 0) throw std::invalid_argument(std::string(where) + ": m must be >= 0");
}

}  // namespace

// --- RadialGrid -------------------------------------------------------------

RadialGrid::RadialGrid(double rho_max, int num_points) : rho_max_(rho_max), spacing_(0.0) {
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) {
    throw std::invalid_argument("RadialGrid: rho_max must be finite and positive");
  }
  if (num_points < 3 || num_points % 2 == 0) {
    throw std::invalid_argument("RadialGrid: num_points must be odd and >= 3");
  }
  spacing_ = rho_max / (num_points - 1);
  samples_ = Eigen::VectorXd::LinSpaced(num_points, 0.0, rho_max);
  // LinSpaced may round the endpoint; pin it.
  samples_(num_points - 1) = rho_max;
}

RadialGrid RadialGrid::in_oscillator_lengths(double rho_max_over_b, int num_points,
                                             const PhysicalParams& params) {
  return RadialGrid(rho_max_over_b * oscillator_length(params), num_points);
}

RadialGrid RadialGrid::default_for(const PhysicalParams& params) {
  return in_oscillator_lengths(kDefaultGridExtent, kDefaultGridPoints, params);
}

// --- KummerProfile ----------------------------------------------------------

double KummerProfile::value(double z) const {
  return gaussian_power(z, power) * specfun::kummer_m(a, b, z);
}

KummerProfile::Derivatives KummerProfile::derivatives(double z) const {
  const double g = gaussian_power(z, power);
  const double q = 0.5 * power;
  const double shift = q - 0.5 * z;
  const double m0 = specfun::kummer_m(a, b, z);
  const double m1 = specfun::kummer_m_derivative(a, b, z);
  const double m2 = specfun::kummer_m_second_derivative(a, b, z);
  return {g * m0, g * (shift * m0 + z * m1),
          g * ((shift * shift - q) * m0 + 2.0 * z * shift * m1 + z * z * m2)};
}

// --- RadialFunction ---------------------------------------------------------

RadialFunction::RadialFunction(RadialGrid grid, KummerProfile profile, double length_scale,
                               int angular_index, double amplitude, std::complex<double> phase)
    : grid_(std::move(grid)),
      profile_(profile),
      length_scale_(length_scale),
      angular_index_(angular_index),
      amplitude_(amplitude),
      phase_(phase),
      values_(grid_.num_points()) {
  if (!(length_scale > 0.0)) throw std::invalid_argument("RadialFunction: bad length scale");
  for (int j = 0; j < grid_.num_points(); ++j) {
    values_(j) = evaluate(grid_[j]);
    if (!std::isfinite(values_(j))) {
      throw std::runtime_error("RadialFunction: non-finite sample");
    }
  }
}

double RadialFunction::evaluate(double rho) const {
  if (amplitude_ == 0.0) return 0.0;
  const double r = rho / length_scale_;
  return amplitude_ * profile_.value(r * r);
}

RadialFunction RadialFunction::with_norm_constant(double a) const {
  RadialFunction copy = *this;
  copy.norm_constant_ = a;
  return copy;
}

Eigen::VectorXd RadialFunction::normalized_values() const {
  if (!norm_constant_) throw std::logic_error("RadialFunction: not normalized");
  return *norm_constant_ * values_;
}

RadialFunction RadialFunction::scaled(double s) const {
  RadialFunction copy = *this;
  copy.amplitude_ *= s;
  copy.values_ *= s;
  copy.norm_constant_.reset();
  return copy;
}

// --- constructors of physical profiles -------------------------------------

RadialFunction radial_psi1(const QuantumNumbers& qn, const RadialGrid& grid,
                           const PhysicalParams& params) {
  require_nonnegative_m(qn.m, "radial_psi1");
  const KummerProfile profile{-(qn.n + 1.0), qn.m + 1.0, qn.m};
  return RadialFunction(grid, profile, oscillator_length(params), qn.m);
}

RadialFunction radial_psi2(const QuantumNumbers& qn, const RadialGrid& grid,
                           const PhysicalParams& params) {
  require_nonnegative_m(qn.m, "radial_psi2");
  const KummerProfile profile{-static_cast<double>(qn.n), qn.m + 1.0, qn.m};
  return RadialFunction(grid, profile, oscillator_length(params), qn.m);
}

RadialFunction normalize(const RadialFunction& rf) {
  if (rf.is_zero() || rf.values().cwiseAbs().maxCoeff() == 0.0) {
    throw std::invalid_argument("normalize: zero function");
  }
  const double total = probability_integral(rf.values(), rf.grid());
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::invalid_argument("normalize: non-positive norm integral");
  }
  const double tail = tail_probability(rf);
  if (tail > kTailTolerance * total) {
    throw std::runtime_error("normalize: rho_max truncates more than 1e-10 of the probability");
  }
  return rf.with_norm_constant(1.0 / std::sqrt(total));
}

double reduced_energy_plus(double energy, const PhysicalParams& params) {
  return (energy / params.rest_energy() + 1.0) / std::sqrt(params.lambda());
}

double reduced_energy_minus(double energy, const PhysicalParams& params) {
  return (energy / params.rest_energy() - 1.0) / std::sqrt(params.lambda());
}

RadialFunction derive_lower_component(const RadialFunction& psi1_radial, int m, double energy,
                                      const PhysicalParams& params) {
  require_nonnegative_m(m, "derive_lower_component");
  if (!(energy + params.rest_energy() > 0.0)) {
    throw std::domain_error("derive_lower_component: E + m0 c^2 must be positive");
  }
  const KummerProfile& upper = psi1_radial.profile();
  if (psi1_radial.angular_index() != m || upper.power != m || upper.b != m + 1.0) {
    throw std::invalid_argument(
        "derive_lower_component: expects exp(-z/2) z^{m/2} M(a, m+1, z) with angular index m");
  }
  // In units of b the operator is (hbar c / b) * [-i(d_x + i d_y) - i(x + i y)];
  // on e^{i m phi} R it yields -i e^{i(m+1)phi} (R' - m R / r + r R), and the
  // bracket collapses to 2 r exp(-z/2) z^{m/2} dM/dz.
  const double e_plus = reduced_energy_plus(energy, params);
  const double factor = 2.0 * upper.a / upper.b / e_plus;
  const KummerProfile lower{upper.a + 1.0, upper.b + 1.0, m + 1};
  RadialFunction result(psi1_radial.grid(), lower, psi1_radial.length_scale(), m + 1,
                        psi1_radial.amplitude() * factor,
                        psi1_radial.phase() * std::complex<double>(0.0, -1.0));
  if (psi1_radial.norm_constant()) return result.with_norm_constant(*psi1_radial.norm_constant());
  return result;
}

// --- spinor -----------------------------------------------------------------

SpinorState::SpinorState(const QuantumNumbers& qn, double energy, const PhysicalParams& params)
    : SpinorState(qn, energy, params, RadialGrid::default_for(params)) {}

SpinorState::SpinorState(const QuantumNumbers& qn, double energy, const PhysicalParams& params,
                         const RadialGrid& grid)
    : qn_(qn),
      energy_(energy),
      upper_(radial_psi1(qn, grid, params)),
      lower_(derive_lower_component(upper_, qn.m, energy, params)),
      norm_(0.0) {
  const double total =
      probability_integral(upper_.values(), grid) + probability_integral(lower_.values(), grid);
  const double tail = tail_probability(upper_) + tail_probability(lower_);
  if (tail > kTailTolerance * total) {
    throw std::runtime_error("SpinorState: rho_max truncates more than 1e-10 of the probability");
  }
  norm_ = 1.0 / std::sqrt(total);
  upper_ = upper_.with_norm_constant(norm_);
  lower_ = lower_.with_norm_constant(norm_);
}

SpinorSample SpinorState::sample(double rho, double phi) const {
  if (!(rho >= 0.0)) throw std::domain_error("SpinorState::sample: rho must be >= 0");
  double wrapped = std::fmod(phi, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  const auto angular = [wrapped](int index) {
    return std::polar(1.0, index * wrapped);
  };
  const std::complex<double> psi1 =
      norm_ * upper_.phase() * angular(upper_.angular_index()) * upper_.evaluate(rho);
  const std::complex<double> psi2 =
      norm_ * lower_.phase() * angular(lower_.angular_index()) * lower_.evaluate(rho);
  return {rho, wrapped, psi1, psi2};
}

SpinorSample spinor_sample(const QuantumNumbers& qn, double rho, double phi, double energy,
                           const PhysicalParams& params) {
  return SpinorState(qn, energy, params).sample(rho, phi);
}

// --- nodes ------------------------------------------------------------------

int count_sign_changes(const Eigen::Ref<const Eigen::VectorXd>& values) {
  const double floor = kNodeFloor * values.cwiseAbs().maxCoeff();
  int changes = 0;
  int last_sign = 0;
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const double v = values(j);
    if (std::abs(v) < floor || v == 0.0) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

int count_radial_nodes(const QuantumNumbers& qn, const PhysicalParams& params,
                       Component component) {
  require_nonnegative_m(qn.m, "count_radial_nodes");
  const double extent = 2.0 * std::sqrt(4.0 * (qn.n + 1) + 2.0 * qn.m) + 4.0;
  const RadialGrid grid = RadialGrid::in_oscillator_lengths(extent, kDefaultGridPoints, params);
  const RadialFunction rf = component == Component::Upper ? radial_psi1(qn, grid, params)
                                                          : radial_psi2(qn, grid, params);
  return count_sign_changes(rf.values());
}

}  // namespace diracosc
