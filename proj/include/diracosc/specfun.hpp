#pragma once

// Confluent hypergeometric function M(a, b, z) by its ascending series, and
// associated Laguerre polynomials by three-term recurrence.  The two are kept
// on separate code paths; tests use one to check the other.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace diracosc::specfun {

#if defined(__SIZEOF_FLOAT128__)
/// Accumulator for the Kummer series.  The terminating series at moderate z
/// cancels by up to ~1e11, which long double cannot absorb.
using wide_float = __float128;
#else
using wide_float = long double;
#endif

inline constexpr double kIntegerSnap = 1e-12;
inline constexpr double kSeriesTolerance = 1e-15;
inline constexpr int kMaxSeriesTerms = 100000;

template <typename Scalar>
struct SeriesResult {
  Scalar value;
  int terms;  // number of non-trivial terms summed, including t_0 = 1
};

/// True when x lies within kIntegerSnap of an integer <= 0; the integer is
/// written to `rounded`.
template <typename Scalar>
bool is_nonpositive_integer(Scalar x, long long& rounded) {
  const Scalar r = std::round(x);
  if (r > Scalar(0) || std::abs(x - r) > Scalar(kIntegerSnap)) return false;
  rounded = static_cast<long long>(r);
  return true;
}

template <typename Scalar>
void check_kummer_domain(Scalar b, Scalar z) {
  long long ignored = 0;
  if (!std::isfinite(b) || is_nonpositive_integer(b, ignored)) {
    throw std::domain_error("kummer_m: b must not be zero or a negative integer");
  }
  if (!std::isfinite(z) || z < Scalar(0)) {
    throw std::domain_error("kummer_m: z must be finite and non-negative");
  }
}

/// Sum of (a)_k / (b)_k * z^k / k! with term count.
///
/// A non-positive integer a (after snapping) terminates the series after
/// exactly |a| + 1 terms.  Otherwise terms are added until two consecutive
/// ones fall below kSeriesTolerance relative to the partial sum while the term
/// ratio is already below one.
template <typename Scalar>
SeriesResult<Scalar> kummer_series(Scalar a, Scalar b, Scalar z) {
  check_kummer_domain(b, z);
  if (!std::isfinite(a)) throw std::domain_error("kummer_m: a must be finite");

  long long degree = 0;
  const bool terminating = is_nonpositive_integer(a, degree);
  const wide_float wa = terminating ? static_cast<wide_float>(degree)
                                    : static_cast<wide_float>(a);
  const wide_float wb = static_cast<wide_float>(b);
  const wide_float wz = static_cast<wide_float>(z);

  wide_float term = 1;
  wide_float sum = 1;
  int terms = 1;

  if (terminating) {
    const long long count = -degree;
    for (long long k = 0; k < count; ++k) {
      const wide_float kk = static_cast<wide_float>(k);
      term *= (wa + kk) / ((wb + kk) * (kk + 1)) * wz;
      sum += term;
      ++terms;
    }
    return {static_cast<Scalar>(sum), terms};
  }

  if (z == Scalar(0)) return {Scalar(1), 1};

  const auto abs_w = [](wide_float v) { return v < 0 ? -v : v; };
  int small_in_a_row = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const wide_float kk = static_cast<wide_float>(k);
    const wide_float ratio = (wa + kk) / ((wb + kk) * (kk + 1)) * wz;
    term *= ratio;
    sum += term;
    ++terms;
    const bool decaying = abs_w(ratio) < 1;
    if (decaying && abs_w(term) < static_cast<wide_float>(kSeriesTolerance) * abs_w(sum)) {
      if (++small_in_a_row == 2) return {static_cast<Scalar>(sum), terms};
    } else {
      small_in_a_row = 0;
    }
  }
  throw std::runtime_error("kummer_m: series did not converge");
}

/// Regular confluent hypergeometric function M(a, b, z), z >= 0.
template <typename Scalar>
Scalar kummer_m(Scalar a, Scalar b, Scalar z) {
  return kummer_series(a, b, z).value;
}

/// dM/dz = (a/b) M(a+1, b+1, z).
template <typename Scalar>
Scalar kummer_m_derivative(Scalar a, Scalar b, Scalar z) {
  check_kummer_domain(b, z);
  check_kummer_domain(b + Scalar(1), z);
  if (a == Scalar(0)) return Scalar(0);
  return a / b * kummer_m(a + Scalar(1), b + Scalar(1), z);
}

/// d^2M/dz^2 = a(a+1) / (b(b+1)) M(a+2, b+2, z).
template <typename Scalar>
Scalar kummer_m_second_derivative(Scalar a, Scalar b, Scalar z) {
  check_kummer_domain(b, z);
  if (a == Scalar(0) || a == Scalar(-1)) return Scalar(0);
  return a * (a + Scalar(1)) / (b * (b + Scalar(1))) *
         kummer_m(a + Scalar(2), b + Scalar(2), z);
}

/// Associated Laguerre polynomial L_n^(alpha)(z) by forward recurrence
///   (k+1) L_{k+1} = (2k + 1 + alpha - z) L_k - (k + alpha) L_{k-1}.
template <typename Scalar>
Scalar laguerre(int n, int alpha, Scalar z) {
  if (n < 0 || alpha < 0) {
    throw std::domain_error("laguerre: n and alpha must be non-negative");
  }
  Scalar prev = Scalar(1);
  if (n == 0) return prev;
  Scalar curr = Scalar(1 + alpha) - z;
  for (int k = 1; k < n; ++k) {
    const Scalar next =
        ((Scalar(2 * k + 1 + alpha) - z) * curr - Scalar(k + alpha) * prev) / Scalar(k + 1);
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Binomial coefficient C(n, k) as a floating value.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

}  // namespace diracosc::specfun
