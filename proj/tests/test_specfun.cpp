#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "diracosc/specfun.hpp"

using namespace diracosc::specfun;

namespace {

const std::vector<double> kZGrid = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0};

// Independent route: L_n^(a)(z) = sum_k (-1)^k C(n+a, n-k) z^k / k!, summed in
// long double (only used where its own cancellation is harmless).
long double laguerre_explicit(int n, int alpha, long double z) {
  long double sum = 0.0L;
  long double zk_over_kfact = 1.0L;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) zk_over_kfact *= z / k;
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * static_cast<long double>(binomial(n + alpha, n - k)) * zk_over_kfact;
  }
  return sum;
}

}  // namespace

TEST_CASE("kummer_m examples") {
  CHECK(kummer_m(0.37, 1.0, 0.0) == 1.0);
  CHECK(kummer_m(-3.0, 1.0, 0.0) == 1.0);
  for (double z : {0.0, 0.25, 3.0, 17.5}) CHECK(kummer_m(-1.0, 1.0, z) == doctest::Approx(1.0 - z).epsilon(1e-15));
  CHECK(kummer_m(-2.0, 1.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(kummer_m(1.0, 1.0, 1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  // M(a, a, z) = e^z for non-integer a as well.
  CHECK(kummer_m(2.5, 2.5, 7.0) == doctest::Approx(std::exp(7.0)).epsilon(1e-14));
}

TEST_CASE("kummer_m domain errors") {
  CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(kummer_m(1.0, -3.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(kummer_m(1.0, -3.0 + 1e-14, 1.0), std::domain_error);
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, -0.1), std::domain_error);
  CHECK_NOTHROW(kummer_m(1.0, -2.5, 1.0));
}

TEST_CASE("non-integer a is summed as an infinite series") {
  // M(1/2, 3/2, -x^2) is erf-related but z < 0 is out of scope; use
  // M(1, 2, z) = (e^z - 1)/z instead.
  for (double z : {0.1, 1.0, 10.0, 60.0}) {
    CHECK(kummer_m(1.0, 2.0, z) == doctest::Approx(std::expm1(z) / z).epsilon(1e-14));
  }
  const auto r = kummer_series(-0.5, 1.0, 4.0);
  CHECK(r.terms > 10);
}

TEST_CASE("terminating series has exactly k+1 terms and degree k") {
  for (int k = 0; k <= 12; ++k) {
    for (double b : {1.0, 2.0, 3.5}) {
      CHECK(kummer_series(-static_cast<double>(k), b, 3.0).terms == k + 1);
      CHECK(kummer_series(-k + 1e-13, b, 3.0).terms == k + 1);
      // (k+1)-th forward difference of a degree-k polynomial on unit steps is 0.
      const int order = k + 1;
      double diff = 0.0;
      double scale = 0.0;
      for (int j = 0; j <= order; ++j) {
        const double weight = binomial(order, j) * ((order - j) % 2 == 0 ? 1.0 : -1.0);
        const double v = kummer_m(-static_cast<double>(k), b, 0.5 + j);
        diff += weight * v;
        scale += std::abs(weight * v);
      }
      CHECK(std::abs(diff) <= 1e-11 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("kummer_m_derivative examples") {
  CHECK(kummer_m_derivative(0.0, 1.0, 5.0) == 0.0);
  CHECK(kummer_m_derivative(-1.0, 1.0, 3.0) == -1.0);
  CHECK(kummer_m_derivative(1.0, 1.0, 1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
}

TEST_CASE("derivative matches central finite differences") {
  const double step = 1e-5;
  for (int n = 0; n <= 20; n += 2) {
    for (int alpha = 0; alpha <= 10; alpha += 2) {
      for (double z : kZGrid) {
        if (z < step) continue;
        const double a = -n;
        const double b = alpha + 1.0;
        const double fd = (kummer_m(a, b, z + step) - kummer_m(a, b, z - step)) / (2.0 * step);
        const double exact = kummer_m_derivative(a, b, z);
        const double scale = std::max({1.0, std::abs(exact), std::abs(kummer_m(a, b, z)) / z});
        CHECK(std::abs(fd - exact) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("laguerre examples") {
  for (int alpha : {0, 1, 4}) CHECK(laguerre(0, alpha, 2.7) == 1.0);
  for (double z : {0.0, 0.3, 9.0}) CHECK(laguerre(1, 0, z) == doctest::Approx(1.0 - z).epsilon(1e-15));
  // L_2^1(1) = (z^2 - 6z + 6)/2 = 0.5; identity partner 3 M(-2, 2, 1) = 3 (1 - 1 + 1/6).
  CHECK(laguerre(2, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(3.0 * kummer_m(-2.0, 2.0, 1.0) == doctest::Approx(laguerre(2, 1, 1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(laguerre(-1, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre(1, -1, 1.0), std::domain_error);
}

TEST_CASE("laguerre recurrence vs explicit sum") {
  for (int n = 0; n <= 12; ++n) {
    for (int alpha = 0; alpha <= 6; ++alpha) {
      for (double z : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        const double ref = static_cast<double>(laguerre_explicit(n, alpha, z));
        CHECK(std::abs(laguerre(n, alpha, z) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("Kummer-Laguerre identity over the full grid") {
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int alpha = 0; alpha <= 10; ++alpha) {
      for (double z : kZGrid) {
        const double l = laguerre(n, alpha, z);
        const double m = binomial(n + alpha, n) * kummer_m<double>(-n, alpha + 1.0, z);
        worst = std::max(worst, std::abs(m - l) / std::max(1.0, std::abs(l)));
      }
    }
  }
  MESSAGE("worst identity error " << worst);
  CHECK(worst <= 1e-10);
}

TEST_CASE("root count of M(-k, m+1, z) inside the Laguerre bound") {
  for (int k = 1; k <= 12; ++k) {
    for (int m = 0; m <= 6; ++m) {
      const double upper = 4.0 * k + 2.0 * m + 4.0;
      const int samples = 20001;
      int changes = 0;
      double prev = kummer_m(-static_cast<double>(k), m + 1.0, 0.0);
      for (int j = 1; j < samples; ++j) {
        const double v = kummer_m(-static_cast<double>(k), m + 1.0, upper * j / samples);
        if ((v > 0) != (prev > 0) && v != 0.0) ++changes;
        if (v != 0.0) prev = v;
      }
      CHECK_MESSAGE(changes == k, "k=" << k << " m=" << m);
    }
  }
}
