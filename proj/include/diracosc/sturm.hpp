#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace diracosc {

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// strictly below x, from the signs of the LDL^T pivots.
template <typename Scalar>
Eigen::Index sturm_count(const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& diag,
                         const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& off,
                         Scalar x) {
  const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
  Eigen::Index count = 0;
  Scalar pivot = diag(0) - x;
  for (Eigen::Index i = 0;; ++i) {
    if (pivot == Scalar(0)) pivot = -tiny;
    if (pivot < Scalar(0)) ++count;
    if (i + 1 == diag.size()) break;
    pivot = diag(i + 1) - x - off(i) * off(i) / pivot;
  }
  return count;
}

/// The `count` algebraically smallest eigenvalues, ascending, by bisection on
/// the Sturm count inside the Gershgorin interval.  Each interval is shrunk
/// until it is within a few ulps of its endpoints.
template <typename Scalar>
std::vector<Scalar> tridiagonal_smallest_eigenvalues(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& diag,
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& off, Eigen::Index count) {
  const Eigen::Index n = diag.size();
  if (n == 0 || off.size() != n - 1) {
    throw std::invalid_argument("smallest_eigenvalues: inconsistent tridiagonal shape");
  }
  if (count < 1 || count > n) {
    throw std::out_of_range("smallest_eigenvalues: count must lie in [1, dimension]");
  }

  Scalar lower = std::numeric_limits<Scalar>::max();
  Scalar upper = std::numeric_limits<Scalar>::lowest();
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar radius = 0;
    if (i > 0) radius += std::abs(off(i - 1));
    if (i + 1 < n) radius += std::abs(off(i));
    lower = std::min(lower, diag(i) - radius);
    upper = std::max(upper, diag(i) + radius);
  }
  const Scalar pad = std::numeric_limits<Scalar>::epsilon() *
                     std::max(std::abs(lower), std::abs(upper)) * Scalar(4);
  lower -= pad;
  upper += pad;

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  std::vector<Scalar> result;
  result.reserve(static_cast<std::size_t>(count));
  Scalar floor = lower;
  for (Eigen::Index k = 0; k < count; ++k) {
    // lambda_k = inf { x : sturm_count(x) > k }.
    Scalar lo = floor;
    Scalar hi = upper;
    for (int iter = 0; iter < 400; ++iter) {
      const Scalar mid = lo + (hi - lo) / Scalar(2);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= Scalar(2) * eps * std::max(std::abs(lo), std::abs(hi))) break;
      if (sturm_count<Scalar>(diag, off, mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const Scalar value = lo + (hi - lo) / Scalar(2);
    result.push_back(value);
    floor = lo;
  }
  return result;
}

}  // namespace diracosc
