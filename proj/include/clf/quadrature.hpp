#pragma once

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "clf/errors.hpp"
#include "clf/exact.hpp"
#include "clf/gauss_legendre.hpp"
#include "clf/saddle.hpp"
#include "clf/watson.hpp"

// Floating-point evaluation of the integral representations of f(n) by
// tensor-product Gauss-Legendre quadrature, refined until two successive
// node counts agree, plus the cross-method validation report.

namespace clf {

struct QuadratureSpec {
  int nodes_per_axis = 64;
  int refinement_factor = 2;
  double target_rel_tol = 1e-10;
};

// Starting resolution scaled to the integrand's peak width ~ n^{-1/2}.
inline QuadratureSpec spec_for(unsigned long n) {
  QuadratureSpec spec;
  const int scaled = 8 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  spec.nodes_per_axis = std::max(64, scaled);
  return spec;
}

namespace detail {

inline void check_spec(const QuadratureSpec& spec) {
  if (spec.nodes_per_axis < 8) throw std::invalid_argument("QuadratureSpec: nodes_per_axis must be >= 8");
  if (spec.refinement_factor < 2) throw std::invalid_argument("QuadratureSpec: refinement_factor must be >= 2");
  if (spec.target_rel_tol < 10 * DBL_EPSILON) throw std::invalid_argument("QuadratureSpec: target_rel_tol below 10 eps");
}

constexpr int kMaxRefinements = 6;

// Run `eval` at increasing node counts until two successive estimates
// agree to the requested relative tolerance.
template <typename Eval>
double refine(const QuadratureSpec& spec, const char* what, Eval&& eval) {
  check_spec(spec);
  int nodes = spec.nodes_per_axis;
  double prev = eval(nodes);
  for (int pass = 0; pass < kMaxRefinements; ++pass) {
    nodes *= spec.refinement_factor;
    const double cur = eval(nodes);
    if (std::abs(cur - prev) <= spec.target_rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  throw ConvergenceError(std::string(what) + ": tolerance not met after refinement");
}

// n!/(1/2)_n, exact then rounded once.
inline double factorial_poch_ratio(unsigned long n) {
  return (Rational(factorial(n)) / pochhammer_half(n)).to_double();
}

}  // namespace detail

// f(n) = n!^2/(pi^2 (1/2)_n^2) int_0^pi int_0^pi ((1+cos a cos b)/2)^n da db
// over the full square (no symmetry reduction).
inline double f_double_integral(unsigned long n, const QuadratureSpec& spec) {
  const double ratio = detail::factorial_poch_ratio(n);
  return detail::refine(spec, "f_double_integral", [&](int nodes) {
    const GaussLegendreRule& rule = gauss_legendre(nodes);
    std::vector<double> c(static_cast<size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
      const double theta = std::numbers::pi * (rule.node[static_cast<size_t>(i)] + 1.0) / 2.0;
      c[static_cast<size_t>(i)] = std::cos(theta);
    }
    const double p = static_cast<double>(n);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
      double row = 0.0;
      for (int j = 0; j < nodes; ++j) {
        row += rule.weight[static_cast<size_t>(j)] *
               std::pow(0.5 * (1.0 + c[static_cast<size_t>(i)] * c[static_cast<size_t>(j)]), p);
      }
      sum += rule.weight[static_cast<size_t>(i)] * row;
    }
    // jacobian (pi/2)^2 cancels against 1/pi^2 up to 1/4
    return ratio * ratio * sum / 4.0;
  });
}

// f(n) = 2^{-n} n!^2/(pi (1/2)_n^2) int_0^pi sin^n t P_n(1/sin t) dt.
// The integrand is evaluated through the rescaled recurrence
// R_k = sin^k t P_k(1/sin t), which stays O(1) and extends continuously
// to the endpoints; Gauss nodes are interior so the endpoints are never
// touched.
inline double f_single_integral_legendre(unsigned long n, const QuadratureSpec& spec) {
  const double ratio = detail::factorial_poch_ratio(n);
  const double scale = ratio * ratio * std::pow(2.0, -static_cast<double>(n)) / 2.0;
  return detail::refine(spec, "f_single_integral_legendre", [&](int nodes) {
    const GaussLegendreRule& rule = gauss_legendre(nodes);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double theta = std::numbers::pi * (rule.node[static_cast<size_t>(i)] + 1.0) / 2.0;
      const double s2 = std::sin(theta) * std::sin(theta);
      double rkm1 = 1.0, rk = 1.0;  // R_0, R_1
      for (unsigned long k = 1; k < n; ++k) {
        const double rkp1 = ((2 * k + 1) * rk - k * s2 * rkm1) / (k + 1);
        rkm1 = rk;
        rk = rkp1;
      }
      sum += rule.weight[static_cast<size_t>(i)] * (n == 0 ? 1.0 : rk);
    }
    return scale * sum;
  });
}

// f(n) = n!/(pi (1/2)_n) int_0^pi p_n(sin^2 t) dt with the terminating
// polynomial p_n(z) = sum_k (-n/2)_k ((1-n)/2)_k / ((1/2-n)_k k!) z^k.
inline double f_single_integral_2f1(unsigned long n, const QuadratureSpec& spec) {
  const double ratio = detail::factorial_poch_ratio(n);
  // exact rational coefficients, rounded once; the polynomial has
  // degree ceil(n/2) and every later ratio hits an exact zero
  std::vector<double> coeff;
  {
    Rational d(1);
    coeff.push_back(1.0);
    for (unsigned long k = 0; 2 * k < n; ++k) {
      const long kl = static_cast<long>(k), nl = static_cast<long>(n);
      d *= Rational(BigInt(2 * kl - nl) * (2 * kl + 1 - nl),
                    BigInt(2 * (kl + 1)) * (2 * kl + 1 - 2 * nl));
      coeff.push_back(d.to_double());
    }
  }
  return detail::refine(spec, "f_single_integral_2f1", [&](int nodes) {
    const GaussLegendreRule& rule = gauss_legendre(nodes);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double theta = std::numbers::pi * (rule.node[static_cast<size_t>(i)] + 1.0) / 2.0;
      const double z = std::sin(theta) * std::sin(theta);
      double p = 0.0;
      for (size_t k = coeff.size(); k-- > 0;) p = p * z + coeff[k];
      sum += rule.weight[static_cast<size_t>(i)] * p;
    }
    return ratio * sum / 2.0;
  });
}

// Method names shared by cross_validate, the validation report, and the CLI.
inline constexpr const char* kMethodQuad2d = "quad2d";
inline constexpr const char* kMethodQuad1dLegendre = "quad1d-legendre";
inline constexpr const char* kMethodQuad1d2f1 = "quad1d-2f1";
inline constexpr const char* kMethodExpansion = "expansion";
inline constexpr const char* kMethodSaddle = "saddle";

// Per-n record of every computation route against the exact value.
// Estimates and discrepancies are kept in a fixed method order so reports
// are deterministic.
struct MethodReport {
  unsigned long n = 0;
  Rational exact;
  std::vector<std::pair<std::string, double>> estimates;
  std::vector<std::pair<std::string, double>> discrepancies;  // |est-exact|/exact
  std::vector<std::pair<std::string, std::string>> errors;

  const double* estimate(const std::string& method) const {
    for (const auto& [name, v] : estimates) {
      if (name == method) return &v;
    }
    return nullptr;
  }
  const double* discrepancy(const std::string& method) const {
    for (const auto& [name, v] : discrepancies) {
      if (name == method) return &v;
    }
    return nullptr;
  }
};

// Whether a method carries an accuracy guarantee at this n (binary64
// quadrature and the saddle sum are vouched for up to n = 40; the
// truncated asymptotic expansion never is).
inline bool method_guaranteed(const std::string& method, unsigned long n) {
  if (method == kMethodExpansion) return false;
  if (method == kMethodSaddle) return n >= 1 && n <= 40;
  return n <= 40;
}

// Runs every route, aggregating per-method failures instead of aborting.
inline MethodReport cross_validate(unsigned long n, const QuadratureSpec& spec) {
  MethodReport report;
  report.n = n;
  report.exact = f_via_3f2(n);
  const double exact = report.exact.to_double();

  auto run = [&](const char* name, auto&& compute) {
    try {
      const double est = compute();
      report.estimates.emplace_back(name, est);
      report.discrepancies.emplace_back(name, std::abs(est - exact) / exact);
    } catch (const std::exception& e) {
      report.errors.emplace_back(name, e.what());
    }
  };

  run(kMethodQuad2d, [&] { return f_double_integral(n, spec); });
  run(kMethodQuad1dLegendre, [&] { return f_single_integral_legendre(n, spec); });
  run(kMethodQuad1d2f1, [&] { return f_single_integral_2f1(n, spec); });
  if (n >= 1) {
    run(kMethodExpansion, [&] {
      return evaluate_expansion(compose_expansion(5), n, 5).to_double();
    });
    run(kMethodSaddle, [&] {
      const double F = F_via_saddle(n, default_saddle_terms(n));
      const Rational h = pochhammer_half(n);
      const Rational to_f = Rational(factorial(n)) * Rational(factorial(n)) *
                            Rational(factorial(n)) / (Rational(pow2(n)) * h * h);
      return to_f.to_double() * F;
    });
  }
  return report;
}

}  // namespace clf
