#pragma once

#include <cmath>
#include <stdexcept>

#include "clf/errors.hpp"

namespace clf {

namespace detail {

// M(a,c,x) power series for x >= 0; terms are single-signed in the uses
// below, so plain accumulation is stable.
inline double kummer_series(double a, double c, double x) {
  double sum = 1.0, term = 1.0;
  int small_streak = 0;
  for (int m = 0; m < 100000; ++m) {
    term *= (a + m) / ((c + m) * (m + 1)) * x;
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) {
      if (++small_streak == 3) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("kummer_m: series tolerance not met");
}

}  // namespace detail

// Confluent hypergeometric M(a,c,x). Negative arguments go through the
// Kummer transformation M(a,c,x) = e^x M(c-a,c,-x) so the series never
// alternates.
inline double kummer_m(double a, double c, double x) {
  if (c <= 0.0 && c == std::floor(c)) {
    throw std::domain_error("kummer_m: c must not be a nonpositive integer");
  }
  if (x < 0.0) return std::exp(x) * detail::kummer_series(c - a, c, -x);
  return detail::kummer_series(a, c, x);
}

// Modified Bessel function I_0 by its power series sum (x/2)^{2m} / (m!)^2.
inline double bessel_i0(double x) {
  const double q = x * x / 4.0;
  double sum = 1.0, term = 1.0;
  for (int m = 1; m < 1000; ++m) {
    term *= q / (static_cast<double>(m) * m);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

struct KummerAsymptotic {
  double value;
  bool past_optimal_truncation;  // term magnitudes started growing again
};

// Large-x approximation M(a,c,-x) ~ x^{-a} Gamma(c)/Gamma(c-a)
// sum_m (a)_m (1+a-c)_m / (m! x^m).
inline KummerAsymptotic kummer_asymptotic(double a, double c, double x, int terms) {
  if (x <= 0.0) throw std::domain_error("kummer_asymptotic: x must be positive");
  if (terms < 1) throw std::invalid_argument("kummer_asymptotic: need at least one term");

  double gamma_ratio;
  const double ca = c - a;
  if (ca <= 0.0 && ca == std::floor(ca)) {
    gamma_ratio = 0.0;  // 1/Gamma at a pole
  } else {
    gamma_ratio = std::tgamma(c) / std::tgamma(ca);
  }

  double sum = 1.0, term = 1.0;
  bool grew = false;
  for (int m = 1; m < terms; ++m) {
    const double next = term * (a + m - 1) * (1 + a - c + m - 1) / (m * x);
    if (std::abs(next) > std::abs(term)) grew = true;
    term = next;
    sum += term;
  }
  return KummerAsymptotic{std::pow(x, -a) * gamma_ratio * sum, grew};
}

}  // namespace clf
