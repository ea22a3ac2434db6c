#include "diracosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "diracosc/quadrature.hpp"
#include "diracosc/sturm.hpp"

namespace diracosc {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// Accumulates residual r and per-sample dominant-term scale s.
class ResidualAccumulator {
 public:
  void add(double residual_abs, double scale) {
    sum_r2_ += residual_abs * residual_abs;
    sum_s2_ += scale * scale;
    max_r_ = std::max(max_r_, residual_abs);
    ++count_;
  }

  ResidualReport report(std::string id, const RadialGrid* grid) const {
    ResidualReport out;
    out.equation_id = std::move(id);
    out.num_samples = count_;
    if (grid != nullptr) {
      out.grid_points = grid->num_points();
      out.rho_max = grid->rho_max();
    }
    if (count_ == 0 || sum_s2_ == 0.0) {
      out.degenerate = true;
      return out;
    }
    const double scale_rms = std::sqrt(sum_s2_ / count_);
    out.rms_residual = std::sqrt(sum_r2_ / count_) / scale_rms;
    out.max_residual = max_r_ / scale_rms;
    return out;
  }

 private:
  double sum_r2_ = 0.0;
  double sum_s2_ = 0.0;
  double max_r_ = 0.0;
  int count_ = 0;
};

ResidualReport radial_residual(const RadialFunction& rf, int l, double k1, std::string id) {
  const RadialGrid& grid = rf.grid();
  if (grid.num_points() < 257) {
    throw std::invalid_argument("ode_residual: grid needs at least 257 points");
  }
  ResidualAccumulator acc;
  if (rf.is_zero()) return acc.report(std::move(id), &grid);

  const double b = rf.length_scale();
  const double amp = rf.amplitude();
  const double l2 = static_cast<double>(l) * l;
  for (int j = 1; j + 1 < grid.num_points(); ++j) {
    const double r = grid[j] / b;
    const double z = r * r;
    const auto d = rf.profile().derivatives(z);
    const double terms[] = {amp * d.z2_fzz, amp * d.z_fz, 0.25 * k1 * z * amp * d.f,
                            -0.25 * l2 * amp * d.f, -0.25 * z * z * amp * d.f};
    double sum = 0.0;
    double scale = 0.0;
    for (double t : terms) {
      sum += t;
      scale = std::max(scale, std::abs(t));
    }
    acc.add(std::abs(sum), scale);
  }
  return acc.report(std::move(id), &grid);
}

// Value and Cartesian gradient of c * e^{i l phi} R(r) at a point, r in b.
struct PointField {
  cplx value;
  cplx dx;
  cplx dy;
};

PointField field_at(const RadialFunction& rf, double r, double cos_phi, double sin_phi,
                    cplx angular) {
  if (rf.is_zero()) return {0.0, 0.0, 0.0};
  const double z = r * r;
  const auto d = rf.profile().derivatives(z);
  const double radial = rf.amplitude() * d.f;
  const double radial_dr = rf.amplitude() * 2.0 * d.z_fz / r;
  const double l = rf.angular_index();
  const cplx prefactor = rf.phase() * angular;
  // d_x = cos(phi) d_r - sin(phi)/r d_phi, d_y = sin(phi) d_r + cos(phi)/r d_phi.
  const cplx dphi_over_r = kI * l * radial / r;
  return {prefactor * radial, prefactor * (cos_phi * radial_dr - sin_phi * dphi_over_r),
          prefactor * (sin_phi * radial_dr + cos_phi * dphi_over_r)};
}

double max_abs(std::initializer_list<cplx> terms) {
  double m = 0.0;
  for (const cplx& t : terms) m = std::max(m, std::abs(t));
  return m;
}

double least_squares_scale(const Eigen::VectorXd& target, const Eigen::VectorXd& basis) {
  const double denom = basis.squaredNorm();
  return denom == 0.0 ? 0.0 : target.dot(basis) / denom;
}

double relative_misfit(const Eigen::VectorXd& target, const Eigen::VectorXd& basis) {
  const double norm = target.norm();
  if (norm == 0.0) return 0.0;
  const double s = least_squares_scale(target, basis);
  return (target - s * basis).norm() / norm;
}

}  // namespace

double integrate_radial(const Eigen::Ref<const Eigen::VectorXd>& values, const RadialGrid& grid) {
  if (values.size() != grid.num_points()) {
    throw std::invalid_argument("integrate_radial: sample count does not match grid");
  }
  return integrate_simpson(values, grid.spacing());
}

TridiagonalOperator build_radial_operator(int m, const RadialGrid& grid,
                                          const PhysicalParams& params) {
  if (m < 0) throw std::invalid_argument("build_radial_operator: m must be >= 0");
  if (grid.num_points() < kMinOperatorPoints) {
    throw std::invalid_argument("build_radial_operator: grid too coarse (< 64 points)");
  }
  const double h = grid.spacing() / oscillator_length(params);
  const double h2 = h * h;
  const double m2 = static_cast<double>(m) * m;
  const int first = m == 0 ? 0 : 1;
  const int last = grid.num_points() - 2;  // node N-1 carries the Dirichlet condition
  const int dim = last - first + 1;

  Eigen::VectorXd nodes(dim);
  Eigen::VectorXd weights(dim);
  Eigen::VectorXd stiffness(dim);
  Eigen::VectorXd coupling(dim - 1);
  for (int i = 0; i < dim; ++i) {
    const int j = first + i;
    const double r = j * h;
    const double r_plus = r + 0.5 * h;
    nodes(i) = r;
    if (j == 0) {
      // Half cell [0, h/2]: no flux through the origin.
      weights(i) = h / 8.0;
      stiffness(i) = r_plus / h2 + std::pow(0.5 * h, 4) / (4.0 * h);
    } else {
      const double r_minus = r - 0.5 * h;
      weights(i) = r;
      stiffness(i) = (r_plus + r_minus) / h2 + m2 / r + r * r * r;
    }
    if (i + 1 < dim) coupling(i) = -r_plus / h2;
  }

  Eigen::VectorXd diag = stiffness.array() / weights.array();
  Eigen::VectorXd off(dim - 1);
  for (int i = 0; i + 1 < dim; ++i) {
    off(i) = coupling(i) / std::sqrt(weights(i) * weights(i + 1));
  }
  if (!diag.allFinite() || !off.allFinite()) {
    throw std::runtime_error("build_radial_operator: non-finite entries");
  }
  return {std::move(diag), std::move(off), std::move(nodes), std::move(weights), grid, m};
}

std::vector<double> smallest_eigenvalues(const TridiagonalOperator& op, int count) {
  return tridiagonal_smallest_eigenvalues<double>(op.diagonal, op.off_diagonal, count);
}

std::vector<double> fd_k1_levels(int m, const RadialGrid& grid, const PhysicalParams& params,
                                 int count) {
  return smallest_eigenvalues(build_radial_operator(m, grid, params), count);
}

double energy_from_k1(double k1, int m, const PhysicalParams& params) {
  const double kinetic = k1 - 2.0 * (m + 1);
  const double arg = 1.0 + params.lambda() * kinetic;
  if (!(arg >= 1.0)) {
    throw std::domain_error("energy_from_k1: k1 below the rest-energy threshold 2(m+1)");
  }
  return params.rest_energy() * std::sqrt(arg);
}

double bisect_energy(int n, int m, const PhysicalParams& params) {
  if (n < 0 || m < 0) throw std::invalid_argument("bisect_energy: n, m must be >= 0");
  const double target = -(n + 1.0);
  const auto excess = [&](double e) { return quantization_residual(e, m, params) - target; };
  double lo = params.rest_energy();
  double hi = 2.0 * lo;
  while (excess(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::runtime_error("bisect_energy: no bracket");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 400 && hi - lo > 2.0 * eps * hi; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

ResidualReport ode_residual(const RadialFunction& rf, int m, double k1,
                            const PhysicalParams& params) {
  if (std::abs(oscillator_length(params) - rf.length_scale()) >
      1e-12 * oscillator_length(params)) {
    throw std::invalid_argument("ode_residual: function built for different parameters");
  }
  return radial_residual(rf, m, k1, "radial-upper");
}

ResidualReport lower_equation_residual(const RadialFunction& rf, double energy,
                                       const PhysicalParams& params) {
  const int l = rf.angular_index();
  const double kappa = 2.0 * (l - 1) + kinetic_k1(energy, params);
  return radial_residual(rf, l, kappa, "radial-lower");
}

ResidualReport coupled_residual(const RadialFunction& psi1, const RadialFunction& psi2,
                                double energy, const PhysicalParams& params,
                                const PolarGrid& polar) {
  if (!(polar.r_min > 0.0) || !(polar.r_max > polar.r_min) || polar.num_radial < 2 ||
      polar.num_angular < 1) {
    throw std::invalid_argument("coupled_residual: invalid polar grid");
  }
  const double e_plus = reduced_energy_plus(energy, params);
  const double e_minus = reduced_energy_minus(energy, params);

  ResidualAccumulator upper_eq;  // (E - m0c^2) psi1 + D psi2
  ResidualAccumulator lower_eq;  // D' psi1 - (E + m0c^2) psi2
  const double dr = (polar.r_max - polar.r_min) / (polar.num_radial - 1);
  const double dphi = 2.0 * std::numbers::pi / polar.num_angular;
  for (int i = 0; i < polar.num_radial; ++i) {
    const double r = polar.r_min + i * dr;
    for (int k = 0; k < polar.num_angular; ++k) {
      const double phi = (k + 0.25) * dphi;
      const double c = std::cos(phi);
      const double s = std::sin(phi);
      const double x = r * c;
      const double y = r * s;
      const PointField p1 = field_at(psi1, r, c, s, std::polar(1.0, psi1.angular_index() * phi));
      const PointField p2 = field_at(psi2, r, c, s, std::polar(1.0, psi2.angular_index() * phi));

      const cplx a1 = e_minus * p1.value;
      const cplx a2 = kI * p2.dx;
      const cplx a3 = p2.dy;
      const cplx a4 = -kI * x * p2.value;
      const cplx a5 = -y * p2.value;
      upper_eq.add(std::abs(a1 + a2 + a3 + a4 + a5), max_abs({a1, a2, a3, a4, a5}));

      const cplx b1 = -kI * p1.dx;
      const cplx b2 = p1.dy;
      const cplx b3 = -kI * x * p1.value;
      const cplx b4 = y * p1.value;
      const cplx b5 = -e_plus * p2.value;
      lower_eq.add(std::abs(b1 + b2 + b3 + b4 + b5), max_abs({b1, b2, b3, b4, b5}));
    }
  }
  const ResidualReport first = upper_eq.report("coupled-upper", nullptr);
  const ResidualReport second = lower_eq.report("coupled-lower", nullptr);
  ResidualReport worse = first.rms_residual >= second.rms_residual ? first : second;
  worse.degenerate = first.degenerate && second.degenerate;
  worse.equation_id = "coupled(" + worse.equation_id + ")";
  worse.num_samples = first.num_samples;
  return worse;
}

ResidualReport coupled_residual(const QuantumNumbers& qn, double energy,
                                const PhysicalParams& params, const PolarGrid& polar) {
  // Only the closed-form profile matters here; a small grid keeps it cheap.
  const RadialGrid grid = RadialGrid::in_oscillator_lengths(polar.r_max, 3, params);
  const RadialFunction psi1 = radial_psi1(qn, grid, params);
  const RadialFunction psi2 = derive_lower_component(psi1, qn.m, energy, params);
  return coupled_residual(psi1, psi2, energy, params, polar);
}

LowerComponentComparison compare_lower_component(const QuantumNumbers& qn, double energy,
                                                 const PhysicalParams& params,
                                                 const RadialGrid& grid) {
  const RadialFunction psi1 = radial_psi1(qn, grid, params);
  const RadialFunction derived = derive_lower_component(psi1, qn.m, energy, params);
  const RadialFunction ansatz = radial_psi2(qn, grid, params);
  const RadialFunction shifted(grid, KummerProfile{-static_cast<double>(qn.n), qn.m + 2.0, qn.m + 1},
                               oscillator_length(params), qn.m + 1);

  LowerComponentComparison out;
  out.derived_angular_index = derived.angular_index();
  out.misfit_same_index = relative_misfit(derived.values(), ansatz.values());
  out.misfit_shifted_index = relative_misfit(derived.values(), shifted.values());
  out.ansatz_decoupled = lower_equation_residual(ansatz, energy, params);
  out.derived_decoupled = lower_equation_residual(derived, energy, params);

  const double scale = least_squares_scale(derived.values(), ansatz.values());
  const RadialFunction ansatz_as_psi2(grid, ansatz.profile(), oscillator_length(params), qn.m,
                                      scale, derived.phase());
  out.ansatz_coupled = coupled_residual(psi1, ansatz_as_psi2, energy, params);
  return out;
}

}  // namespace diracosc
