#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "clf/exact.hpp"
#include "clf/kummer.hpp"

// Saddle-point route to the generating-function coefficients F_n: expand
// h(w) = [M(1/2,1,-w)]^2 at the saddle w0 = n/2 of e^{2w} w^{-n-1}, pair
// the Taylor coefficients A_k with the exact contour moments Phi_k, and
// sum the convergent series F_n = sum A_k Phi_k.

namespace clf {

// a_k = (-1)^k (1/2)_k / (k!)^2 M(1/2+k, 1+k, -n/2).
inline std::vector<double> taylor_a_coeffs(unsigned long n, int count) {
  if (n < 1) throw std::invalid_argument("taylor_a_coeffs: n must be >= 1");
  if (count < 1) throw std::invalid_argument("taylor_a_coeffs: count must be >= 1");
  const double w0 = static_cast<double>(n) / 2.0;
  std::vector<double> a(static_cast<size_t>(count));
  Rational prefactor(1);  // (1/2)_k / (k!)^2
  for (int k = 0; k < count; ++k) {
    if (k > 0) prefactor *= Rational(2 * k - 1, 2 * k * k);
    const double m = kummer_m(0.5 + k, 1.0 + k, -w0);
    a[static_cast<size_t>(k)] = (k % 2 == 0 ? 1.0 : -1.0) * prefactor.to_double() * m;
  }
  return a;
}

// Cauchy product of a series with itself, truncated to the input length.
inline std::vector<double> square_series(const std::vector<double>& a) {
  if (a.empty()) throw std::invalid_argument("square_series: empty input");
  std::vector<double> sq(a.size(), 0.0);
  for (size_t j = 0; j < a.size(); ++j) {
    for (size_t k = 0; j + k < a.size(); ++k) {
      sq[j + k] += a[j] * a[k];
    }
  }
  return sq;
}

// Contour moments Phi_k = (1/2 pi i) oint e^{2w} w^{-n-1} (w-w0)^k dw,
// by the integration-by-parts recursion, exact.
inline std::vector<Rational> phi_sequence(unsigned long n, int count) {
  if (count < 2) throw std::invalid_argument("phi_sequence: count must be >= 2");
  std::vector<Rational> phi(static_cast<size_t>(count));
  phi[0] = Rational(pow2(n), factorial(n));
  phi[1] = Rational(0);
  const Rational w0(static_cast<long>(n), 2L);
  for (int k = 2; k < count; ++k) {
    phi[static_cast<size_t>(k)] =
        (phi[static_cast<size_t>(k - 1)] + w0 * phi[static_cast<size_t>(k - 2)]) *
        Rational(-(k - 1), 2L);
  }
  return phi;
}

struct SaddleExpansion {
  unsigned long n;
  double w0;
  std::vector<double> a_coeffs;
  std::vector<double> A_coeffs;
  std::vector<Rational> phi;
};

inline SaddleExpansion build_saddle_expansion(unsigned long n, int count) {
  SaddleExpansion s;
  s.n = n;
  s.w0 = static_cast<double>(n) / 2.0;
  s.a_coeffs = taylor_a_coeffs(n, count);
  s.A_coeffs = square_series(s.a_coeffs);
  s.phi = phi_sequence(n, std::max(count, 2));
  return s;
}

// Terms for ~1e-14 relative convergence of sum A_k Phi_k. Decay only sets
// in past k ~ 2e w0 and the constant matters at small n, hence the floor.
inline int default_saddle_terms(unsigned long n) {
  return std::max<int>(60, static_cast<int>(2 * n) + 40);
}

// F_n = sum_{k<count} A_k Phi_k; Phi_k stay exact until this final
// float summation.
inline double F_via_saddle(unsigned long n, int count) {
  if (n < 1) throw std::invalid_argument("F_via_saddle: n must be >= 1");
  if (count < 2) throw std::invalid_argument("F_via_saddle: count must be >= 2");
  const SaddleExpansion s = build_saddle_expansion(n, count);
  double sum = 0.0;
  int tiny_streak = 0;
  for (int k = 0; k < count; ++k) {
    const double phi = s.phi[static_cast<size_t>(k)].to_double();
    if (!std::isfinite(phi)) break;  // Phi_k overflowed binary64; A_k Phi_k is long past negligible
    const double term = s.A_coeffs[static_cast<size_t>(k)] * phi;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) {
      if (++tiny_streak == 3) break;
    } else {
      tiny_streak = 0;
    }
  }
  return sum;
}

// |[e^{w/2} I_0(w/2)]^2 - sum_{m<terms} F_m w^m| with exact-series F_m.
inline double generating_function_check(double w, int terms) {
  if (w < 0.0 || w > 0.2) throw std::domain_error("generating_function_check: w outside [0, 0.2]");
  if (terms < 10) throw std::invalid_argument("generating_function_check: need terms >= 10");
  const double g = std::exp(w / 2.0) * bessel_i0(w / 2.0);
  const double lhs = g * g;
  double rhs = 0.0, wpow = 1.0;
  for (int m = 0; m < terms; ++m) {
    rhs += generating_coefficient(static_cast<unsigned long>(m)).to_double() * wpow;
    wpow *= w;
  }
  return std::abs(lhs - rhs);
}

}  // namespace clf
