#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "clf/errors.hpp"
#include "clf/exact.hpp"
#include "clf/poly_series.hpp"

// Symbolic Watson's-lemma machine: reverts the logarithmic change of
// variable w = -ln(1 - r + 2 sigma r^2) as a truncated series r(w), expands
// the resulting Laplace integrand F(w,t) = dr/dw [(1-r cos^2 t)(1-r sin^2 t)]^{-1/2},
// integrates its coefficients over t, and composes with the gamma-ratio
// series to produce the rational coefficients e_k of f(n) ~ 2 sum e_k n^{-k}.
// Everything is exact rational arithmetic; no floating point enters.

namespace clf {

// sigma = cos^2 t sin^2 t = s^2 - s^4.
inline EvenSinPoly sigma_poly() {
  EvenSinPoly p = EvenSinPoly::monomial(1, Rational(1));
  p -= EvenSinPoly::monomial(2, Rational(1));
  return p;
}

// x(w) = 1 - e^{-w} = sum_{k>=1} (-1)^{k+1} w^k / k!, truncated.
inline PolySeries one_minus_exp_neg(int order) {
  PolySeries x(order);
  Rational c(1);
  for (int k = 1; k <= order; ++k) {
    c /= Rational(k);
    x.coeff(k) = EvenSinPoly(k % 2 == 1 ? c : -c);
  }
  return x;
}

// Series inverse of the log map: r(w) = sum_{k>=1} b_k(t) w^k with b_1 = 1,
// satisfying r - 2 sigma r^2 = 1 - e^{-w} through the requested order.
// Fixed-point iteration r <- x + 2 sigma r^2 gains one exact order per pass.
inline PolySeries revert_log_map(int order) {
  if (order < 1) throw std::invalid_argument("revert_log_map: order must be >= 1");
  const PolySeries x = one_minus_exp_neg(order);
  const EvenSinPoly two_sigma = sigma_poly() * Rational(2);
  PolySeries r = x;
  for (int pass = 0; pass < order; ++pass) {
    r = x + (r * r).scaled(two_sigma);
  }
  return r;
}

// (1 - u)^{-1/2} for a series u with zero constant term, via the binomial
// series sum_m (1/2)_m/m! u^m evaluated by Horner at the truncation order.
inline PolySeries inv_sqrt_one_minus(const PolySeries& u) {
  if (!u.has_zero_constant_term()) {
    throw std::invalid_argument("inv_sqrt_one_minus: series must vanish at w=0");
  }
  const int order = u.order();
  std::vector<Rational> h(static_cast<size_t>(order) + 1);
  h[0] = Rational(1);
  for (int m = 0; m < order; ++m) {
    h[static_cast<size_t>(m) + 1] =
        h[static_cast<size_t>(m)] * Rational(2 * m + 1, 2 * (m + 1));
  }
  PolySeries acc(order);
  acc.coeff(0) = EvenSinPoly(h[static_cast<size_t>(order)]);
  for (int m = order - 1; m >= 0; --m) {
    acc = acc * u;
    acc.coeff(0) += EvenSinPoly(h[static_cast<size_t>(m)]);
  }
  return acc;
}

// F(w,t) = dr/dw [(1 - r(1-s^2))(1 - r s^2)]^{-1/2} = sum_k c_k(t) w^k.
inline PolySeries expand_F(int order) {
  if (order < 0) throw std::invalid_argument("expand_F: order must be >= 0");
  const PolySeries r = revert_log_map(order + 1);
  PolySeries drdw(order);
  for (int k = 0; k <= order; ++k) {
    drdw.coeff(k) = r.coeff(k + 1) * Rational(k + 1);
  }
  const PolySeries r0 = r.truncated(order);
  const EvenSinPoly s2 = EvenSinPoly::monomial(1, Rational(1));
  EvenSinPoly c2 = EvenSinPoly(Rational(1));
  c2 -= s2;
  const PolySeries root =
      inv_sqrt_one_minus(r0.scaled(c2)) * inv_sqrt_one_minus(r0.scaled(s2));
  return drdw * root;
}

// int_0^{pi/2} sin^{2m} t dt = q pi with q = C(2m,m) / 2^{2m+1}.
inline Rational wallis(unsigned long m) {
  return Rational(binomial(2 * m, m), BigInt(pow2(2 * m + 1)));
}

// C_k = int_0^{pi/2} c_k(t) dt = q_k pi, integrating termwise.
inline Rational integrate_ck(const EvenSinPoly& ck) {
  Rational q(0);
  for (int m = 0; m <= ck.max_exponent_index(); ++m) {
    if (!ck.coeff(m).is_zero()) q += ck.coeff(m) * wallis(static_cast<unsigned long>(m));
  }
  return q;
}

struct GammaRatioSeries {
  std::vector<Rational> coefficients;  // gamma_0 .. gamma_order
};

// n!/(1/2)_n ~ sqrt(pi n) sum_k gamma_k n^{-k}; the six known constants.
// Orders past 5 are a hard error, never an extrapolation.
inline GammaRatioSeries gamma_ratio_coeffs(int order) {
  static const long nums[6] = {1, 1, 1, -5, -21, 399};
  static const long dens[6] = {1, 8, 128, 1024, 32768, 262144};
  if (order < 0 || order > 5) {
    throw OrderError("gamma_ratio_coeffs: only orders 0..5 are supported");
  }
  GammaRatioSeries g;
  for (int k = 0; k <= order; ++k) g.coefficients.emplace_back(nums[k], dens[k]);
  return g;
}

struct AsymptoticExpansion {
  Rational scale;                      // leading constant, value 2
  std::vector<Rational> coefficients;  // e_0 .. e_K with e_0 = 1

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

// f(n) ~ 4 (sum gamma_k n^{-k})^2 (sum q_k k! n^{-k}), normalized to
// scale 2 with e_0 = 1.
inline AsymptoticExpansion compose_expansion(int order) {
  const GammaRatioSeries gamma = gamma_ratio_coeffs(order);
  const PolySeries F = expand_F(order);

  std::vector<Rational> q_fact(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    q_fact[static_cast<size_t>(k)] =
        integrate_ck(F.coeff(k)) * Rational(factorial(static_cast<unsigned long>(k)));
  }

  std::vector<Rational> g2(static_cast<size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      g2[static_cast<size_t>(i + j)] +=
          gamma.coefficients[static_cast<size_t>(i)] * gamma.coefficients[static_cast<size_t>(j)];
    }
  }

  AsymptoticExpansion e;
  e.scale = Rational(2);
  e.coefficients.assign(static_cast<size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      e.coefficients[static_cast<size_t>(i + j)] +=
          g2[static_cast<size_t>(i)] * q_fact[static_cast<size_t>(j)];
    }
  }
  for (auto& c : e.coefficients) c *= Rational(2);
  if (e.coefficients[0] != Rational(1)) {
    throw IdentityError("leading expansion coefficient e_0 != 1", 0);
  }
  return e;
}

// 2 sum_{k<=order} e_k n^{-k}, exact.
inline Rational evaluate_expansion(const AsymptoticExpansion& exp, unsigned long n, int order) {
  if (order < 0 || order > exp.order()) {
    throw OrderError("evaluate_expansion: order exceeds expansion order");
  }
  if (n < 1) throw std::invalid_argument("evaluate_expansion: n must be >= 1");
  const Rational inv_n(1L, static_cast<long>(n));
  Rational acc = exp.coefficients[static_cast<size_t>(order)];
  for (int k = order - 1; k >= 0; --k) {
    acc = acc * inv_n + exp.coefficients[static_cast<size_t>(k)];
  }
  return exp.scale * acc;
}

struct RemainderRow {
  unsigned long n;
  double remainder;       // f(n) - 2 sum_{k<=order} e_k n^{-k}
  double order_estimate;  // log2(remainder(n) / remainder(2n))
};

// Empirical order check: the order-K truncation error should scale like
// n^{-(K+1)}, so the dyadic ratio estimate approaches K+1.
inline std::vector<RemainderRow> remainder_study(int order, const std::vector<unsigned long>& ns) {
  const AsymptoticExpansion exp = compose_expansion(order);
  std::vector<RemainderRow> rows;
  rows.reserve(ns.size());
  for (unsigned long n : ns) {
    if (n < 2) throw std::invalid_argument("remainder_study: n must be >= 2");
    const Rational rem_n = f_via_3f2(n) - evaluate_expansion(exp, n, order);
    const Rational rem_2n = f_via_3f2(2 * n) - evaluate_expansion(exp, 2 * n, order);
    const double estimate = std::log2(rem_n.to_double() / rem_2n.to_double());
    rows.push_back(RemainderRow{n, rem_n.to_double(), estimate});
  }
  return rows;
}

}  // namespace clf
