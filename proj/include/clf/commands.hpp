#pragma once

#include <string>
#include <vector>

#include "clf/envelope.hpp"
#include "clf/quadrature.hpp"

// CLI command bodies. These build OutputEnvelope values so the command
// surface is testable without spawning the binary; tools/clf.cpp is a thin
// argv wrapper around them.

namespace clf {

struct CommandResult {
  OutputEnvelope envelope;
  int exit_code = 0;
};

namespace detail {

inline OutputEnvelope::ExponentMap poly_cells(const EvenSinPoly& p) {
  OutputEnvelope::ExponentMap cells;
  for (int m = 0; m <= p.max_exponent_index(); ++m) {
    if (!p.coeff(m).is_zero()) cells.emplace_back(2 * m, p.coeff(m).str());
  }
  if (cells.empty()) cells.emplace_back(0, "0");
  return cells;
}

}  // namespace detail

// Rows (n, P_n, f_n, f_n decimal, F_n), every row identity-verified.
inline CommandResult cmd_seq(unsigned long n_max, Format format) {
  CommandResult result;
  OutputEnvelope& env = result.envelope;
  env.command = "seq";
  env.format = format;
  env.parameters = {{"n_max", std::to_string(n_max)}};
  env.columns = {"n", "P", "f", "f_dec15", "F"};
  for (unsigned long n = 0; n <= n_max; ++n) {
    const ClfValue v = verify_identities(n);
    env.rows.push_back({static_cast<long long>(n), v.p_n.get_str(), v.f_n.str(),
                        v.f_n.decimal(15), v.F_n.str()});
  }
  return result;
}

// f(n) for n = 0..n_max through one selected route. Exact routes also emit
// the rational; the expansion route needs n >= 1 and the saddle route
// needs n >= 1, so those start at 1.
inline CommandResult cmd_f(unsigned long n_max, const std::string& method, int order,
                           Format format) {
  CommandResult result;
  OutputEnvelope& env = result.envelope;
  env.command = "f";
  env.format = format;
  env.parameters = {{"n_max", std::to_string(n_max)},
                    {"method", method},
                    {"order", std::to_string(order)}};
  env.columns = {"n", "method", "f", "f_dec15"};

  auto exact_row = [&](unsigned long n, const Rational& v) {
    env.rows.push_back({static_cast<long long>(n), method, v.str(), v.decimal(15)});
  };
  auto float_row = [&](unsigned long n, double v) {
    env.rows.push_back({static_cast<long long>(n), method, std::string(), format_double(v)});
  };

  if (method == "exact") {
    for (unsigned long n = 0; n <= n_max; ++n) exact_row(n, f_via_3f2(n));
  } else if (method == "p2") {
    for (unsigned long n = 0; n <= n_max; ++n) exact_row(n, f_via_quadratic(n));
  } else if (method == "p4") {
    for (unsigned long n = 0; n <= n_max; ++n) exact_row(n, f_via_p4(n));
  } else if (method == "expansion") {
    const AsymptoticExpansion exp = compose_expansion(order);
    for (unsigned long n = 1; n <= n_max; ++n) exact_row(n, evaluate_expansion(exp, n, order));
  } else if (method == "quad2d") {
    for (unsigned long n = 0; n <= n_max; ++n) float_row(n, f_double_integral(n, spec_for(n)));
  } else if (method == "quad1d-legendre") {
    for (unsigned long n = 0; n <= n_max; ++n) {
      float_row(n, f_single_integral_legendre(n, spec_for(n)));
    }
  } else if (method == "quad1d-2f1") {
    for (unsigned long n = 0; n <= n_max; ++n) float_row(n, f_single_integral_2f1(n, spec_for(n)));
  } else if (method == "saddle") {
    for (unsigned long n = 1; n <= n_max; ++n) {
      const double F = F_via_saddle(n, default_saddle_terms(n));
      const Rational h = pochhammer_half(n);
      const Rational to_f = Rational(factorial(n)) * Rational(factorial(n)) *
                            Rational(factorial(n)) / (Rational(pow2(n)) * h * h);
      float_row(n, to_f.to_double() * F);
    }
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }
  return result;
}

// Coefficient tables: c_k polynomials, C_k/pi, gamma_k, final e_k, or all
// of them side by side.
inline CommandResult cmd_coeffs(int order, const std::string& which, Format format) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  CommandResult result;
  OutputEnvelope& env = result.envelope;
  env.command = "coeffs";
  env.format = format;
  env.parameters = {{"order", std::to_string(order)}, {"which", which}};

  if (which == "ck") {
    const PolySeries F = expand_F(order);
    env.columns = {"k", "c_k"};
    for (int k = 0; k <= order; ++k) {
      env.rows.push_back({static_cast<long long>(k), detail::poly_cells(F.coeff(k))});
    }
  } else if (which == "Ck") {
    const PolySeries F = expand_F(order);
    env.columns = {"k", "Ck_over_pi"};
    for (int k = 0; k <= order; ++k) {
      env.rows.push_back({static_cast<long long>(k), integrate_ck(F.coeff(k)).str()});
    }
  } else if (which == "gamma") {
    const GammaRatioSeries g = gamma_ratio_coeffs(order);
    env.columns = {"k", "gamma_k"};
    for (int k = 0; k <= order; ++k) {
      env.rows.push_back({static_cast<long long>(k),
                          g.coefficients[static_cast<size_t>(k)].str()});
    }
  } else if (which == "final") {
    const AsymptoticExpansion e = compose_expansion(order);
    env.parameters.emplace_back("scale", e.scale.str());
    env.columns = {"k", "e_k"};
    for (int k = 0; k <= order; ++k) {
      env.rows.push_back({static_cast<long long>(k),
                          e.coefficients[static_cast<size_t>(k)].str()});
    }
  } else if (which == "all") {
    const PolySeries F = expand_F(order);
    const GammaRatioSeries g = gamma_ratio_coeffs(order);
    const AsymptoticExpansion e = compose_expansion(order);
    env.parameters.emplace_back("scale", e.scale.str());
    env.columns = {"k", "c_k", "Ck_over_pi", "gamma_k", "e_k"};
    for (int k = 0; k <= order; ++k) {
      env.rows.push_back({static_cast<long long>(k), detail::poly_cells(F.coeff(k)),
                          integrate_ck(F.coeff(k)).str(),
                          g.coefficients[static_cast<size_t>(k)].str(),
                          e.coefficients[static_cast<size_t>(k)].str()});
    }
  } else {
    throw std::invalid_argument("unknown coefficient table: " + which);
  }
  return result;
}

// One row per (n, method) from cross_validate. Exit code 1 when a method
// with a guaranteed tolerance at that n misses `tol`.
inline CommandResult cmd_validate(unsigned long n_max, double tol, Format format) {
  CommandResult result;
  OutputEnvelope& env = result.envelope;
  env.command = "validate";
  env.format = format;
  env.parameters = {{"n_max", std::to_string(n_max)}, {"tol", format_double(tol)}};
  env.columns = {"n", "method", "estimate_dec15", "exact_dec17", "rel_discrepancy_dec3",
                 "guaranteed", "note"};
  for (unsigned long n = 0; n <= n_max; ++n) {
    const MethodReport report = cross_validate(n, spec_for(n));
    const std::string exact_dec = report.exact.decimal(17);
    for (const auto& [method, est] : report.estimates) {
      const double disc = *report.discrepancy(method);
      const bool guaranteed = method_guaranteed(method, n);
      std::string note;
      if (guaranteed && disc > tol) {
        note = "exceeds tolerance";
        result.exit_code = 1;
      }
      char disc_text[32];
      std::snprintf(disc_text, sizeof(disc_text), "%.2e", disc);
      env.rows.push_back({static_cast<long long>(n), method, format_double(est), exact_dec,
                          std::string(disc_text), std::string(guaranteed ? "yes" : "no"),
                          note});
    }
    for (const auto& [method, what] : report.errors) {
      env.rows.push_back({static_cast<long long>(n), method, std::string(), exact_dec,
                          std::string(), std::string(method_guaranteed(method, n) ? "yes" : "no"),
                          "error: " + what});
      if (method_guaranteed(method, n)) result.exit_code = 1;
    }
  }
  return result;
}

// Truncation-remainder table (n, remainder, empirical order estimate).
inline CommandResult cmd_remainder(int order, const std::vector<unsigned long>& ns,
                                   Format format) {
  CommandResult result;
  OutputEnvelope& env = result.envelope;
  env.command = "remainder";
  env.format = format;
  std::string n_list;
  for (unsigned long n : ns) {
    if (!n_list.empty()) n_list += ' ';
    n_list += std::to_string(n);
  }
  env.parameters = {{"order", std::to_string(order)}, {"n_list", n_list}};
  env.columns = {"n", "remainder_dec15", "order_estimate_fixed4"};
  for (const RemainderRow& row : remainder_study(order, ns)) {
    env.rows.push_back({static_cast<long long>(row.n), format_double(row.remainder),
                        format_fixed(row.order_estimate, 4)});
  }
  return result;
}

}  // namespace clf
