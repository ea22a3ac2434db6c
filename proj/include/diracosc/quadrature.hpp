#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace diracosc {

/// Composite Simpson rule on uniformly spaced samples f_0 .. f_{N-1}, N odd.
template <typename Derived>
typename Derived::Scalar integrate_simpson(const Eigen::DenseBase<Derived>& f,
                                           typename Derived::Scalar spacing) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = f.size();
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("integrate_simpson: need an odd number (>= 3) of samples");
  }
  Scalar odd = 0;
  Scalar even = 0;
  for (Eigen::Index j = 1; j < n - 1; ++j) {
    if (j % 2 == 1) {
      odd += f(j);
    } else {
      even += f(j);
    }
  }
  return spacing / Scalar(3) * (f(0) + f(n - 1) + Scalar(4) * odd + Scalar(2) * even);
}

/// Composite trapezoid rule on uniformly spaced samples.
template <typename Derived>
typename Derived::Scalar integrate_trapezoid(const Eigen::DenseBase<Derived>& f,
                                             typename Derived::Scalar spacing) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = f.size();
  if (n < 2) throw std::invalid_argument("integrate_trapezoid: need at least two samples");
  return spacing * (f.sum() - Scalar(0.5) * (f(0) + f(n - 1)));
}

}  // namespace diracosc
