#include <catch2/catch.hpp>

#include <cmath>
#include <vector>

#include "clf/saddle.hpp"
#include "clf/watson.hpp"

using clf::BigInt;
using clf::Rational;

namespace {

// Independent I_0 oracle, written out here rather than shared with the
// library path it checks.
double i0_series(double x) {
  double sum = 1.0, term = 1.0;
  for (int m = 1; m < 500; ++m) {
    term *= (x / 2) * (x / 2) / (static_cast<double>(m) * m);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("kummer_m basics", "[saddle]") {
  REQUIRE(clf::kummer_m(0.5, 1.0, 0.0) == 1.0);
  REQUIRE_THROWS_AS(clf::kummer_m(0.5, 0.0, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(clf::kummer_m(0.5, -3.0, 1.0), std::domain_error);

  // M(1/2, 1, -1) = e^{-1/2} I_0(1/2)
  REQUIRE(clf::kummer_m(0.5, 1.0, -1.0) ==
          Approx(std::exp(-0.5) * i0_series(0.5)).epsilon(1e-13));
}

TEST_CASE("kummer_m satisfies e^z I0(z) = M(1/2,1,2z)", "[saddle]") {
  for (double z = -10.0; z <= 10.0; z += 1.25) {
    REQUIRE(clf::kummer_m(0.5, 1.0, 2 * z) ==
            Approx(std::exp(z) * i0_series(z)).epsilon(1e-12));
  }
  // edge of the stated accuracy range, both signs
  REQUIRE(clf::kummer_m(0.5, 1.0, 500.0) ==
          Approx(std::exp(250.0) * i0_series(250.0)).epsilon(1e-12));
  REQUIRE(clf::kummer_m(0.5, 1.0, -500.0) ==
          Approx(std::exp(-250.0) * i0_series(250.0)).epsilon(1e-12));
}

TEST_CASE("squared Kummer value matches the generating series", "[saddle]") {
  // [M(1/2,1,-w)]^2 = sum_n F_n (-w)^n at w = 0.3
  const double w = 0.3;
  const double m = clf::kummer_m(0.5, 1.0, -w);
  double rhs = 0.0, wpow = 1.0;
  for (unsigned long n = 0; n < 40; ++n) {
    rhs += clf::generating_coefficient(n).to_double() * wpow;
    wpow *= -w;
  }
  REQUIRE(m * m == Approx(rhs).epsilon(1e-12));
}

TEST_CASE("saddle Taylor coefficients against finite differences", "[saddle]") {
  const unsigned long n = 10;
  const double w0 = n / 2.0;
  auto a = clf::taylor_a_coeffs(n, 3);

  // a_0 is the function value itself
  REQUIRE(a[0] == Approx(clf::kummer_m(0.5, 1.0, -w0)).epsilon(1e-8));

  // a_1 = d/dw M(1/2,1,-w) at w0, central difference oracle
  const double h = 1e-5;
  const double d1 = (clf::kummer_m(0.5, 1.0, -(w0 + h)) - clf::kummer_m(0.5, 1.0, -(w0 - h))) / (2 * h);
  REQUIRE(a[1] == Approx(d1).epsilon(1e-6));

  REQUIRE_THROWS_AS(clf::taylor_a_coeffs(0, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(clf::taylor_a_coeffs(3, 0), std::invalid_argument);
}

TEST_CASE("square_series", "[saddle]") {
  REQUIRE(clf::square_series({1.0}) == std::vector<double>{1.0});
  REQUIRE(clf::square_series({1.0, 2.0}) == std::vector<double>{1.0, 4.0});
  auto a = clf::taylor_a_coeffs(10, 5);
  auto sq = clf::square_series(a);
  REQUIRE(sq[0] == Approx(a[0] * a[0]).epsilon(1e-15));
  REQUIRE_THROWS_AS(clf::square_series({}), std::invalid_argument);
}

TEST_CASE("phi recursion initial values and one step", "[saddle]") {
  for (unsigned long n : {0ul, 1ul, 4ul, 9ul}) {
    auto phi = clf::phi_sequence(n, 3);
    REQUIRE(phi[0] == Rational(clf::pow2(n), clf::factorial(n)));
    REQUIRE(phi[1] == Rational(0));
    REQUIRE(phi[2] == Rational(-static_cast<long>(n), 4L) * Rational(clf::pow2(n), clf::factorial(n)));
  }
  REQUIRE_THROWS_AS(clf::phi_sequence(4, 1), std::invalid_argument);
}

TEST_CASE("phi recursion equals the binomial contour moments exactly", "[saddle]") {
  // Phi_k = sum_{j<=min(k,n)} C(k,j) (-w0)^{k-j} 2^{n-j}/(n-j)!
  for (unsigned long n = 0; n <= 20; n += 4) {
    auto phi = clf::phi_sequence(n, 16);
    for (unsigned long k = 0; k <= 15; ++k) {
      Rational oracle(0);
      const Rational w0(static_cast<long>(n), 2L);
      for (unsigned long j = 0; j <= std::min(k, n); ++j) {
        Rational term = Rational(clf::binomial(k, j)) *
                        clf::pow(-w0, k - j) *
                        Rational(clf::pow2(n - j), clf::factorial(n - j));
        oracle += term;
      }
      REQUIRE(phi[k] == oracle);
    }
  }
}

TEST_CASE("saddle route reconstructs the generating coefficients", "[saddle]") {
  REQUIRE(clf::F_via_saddle(1, 50) == Approx(1.0).epsilon(1e-8));  // F_1 = 1

  const double f10 = clf::generating_coefficient(10).to_double();
  REQUIRE(clf::F_via_saddle(10, 40) == Approx(f10).epsilon(1e-8));

  // f(30) back through f = n!^3/(2^n (1/2)_n^2) F
  const unsigned long n = 30;
  const double F = clf::F_via_saddle(n, clf::default_saddle_terms(n));
  const Rational h = clf::pochhammer_half(n);
  const Rational to_f = Rational(clf::factorial(n)) * Rational(clf::factorial(n)) *
                        Rational(clf::factorial(n)) / (Rational(clf::pow2(n)) * h * h);
  REQUIRE(to_f.to_double() * F == Approx(clf::f_via_3f2(n).to_double()).epsilon(1e-8));

  REQUIRE_THROWS_AS(clf::F_via_saddle(0, 20), std::invalid_argument);
}

TEST_CASE("saddle convergence improves with more terms", "[saddle]") {
  for (unsigned long n : {5ul, 15ul, 30ul}) {
    const double exact = clf::generating_coefficient(n).to_double();
    double prev_err = -1.0;
    for (int count = static_cast<int>(n) + 10; count <= static_cast<int>(n) + 50; count += 10) {
      const double err = std::abs(clf::F_via_saddle(n, count) - exact) / exact;
      if (prev_err >= 0.0) REQUIRE(err <= prev_err + 1e-13);
      prev_err = err;
    }
  }
}

TEST_CASE("saddle route and truncated expansion agree at the n^-6 scale", "[saddle]") {
  // both approximate f(n); their gap is dominated by the expansion's
  // order-5 truncation error, about 734 n^{-6} (measured at n = 64)
  const auto exp5 = clf::compose_expansion(5);
  for (unsigned long n : {30ul, 40ul, 60ul}) {
    const double F = clf::F_via_saddle(n, clf::default_saddle_terms(n));
    const Rational h = clf::pochhammer_half(n);
    const Rational to_f = Rational(clf::factorial(n)) * Rational(clf::factorial(n)) *
                          Rational(clf::factorial(n)) / (Rational(clf::pow2(n)) * h * h);
    const double f_saddle = to_f.to_double() * F;
    const double f_exp = clf::evaluate_expansion(exp5, n, 5).to_double();
    const double scale = std::pow(static_cast<double>(n), -6.0);
    REQUIRE(std::abs(f_saddle - f_exp) < 2000.0 * scale);
    REQUIRE(std::abs(f_saddle - f_exp) > 100.0 * scale);  // gap really is order n^-6
  }
}

TEST_CASE("generating function check", "[saddle]") {
  REQUIRE(clf::generating_function_check(0.0, 20) == 0.0);
  REQUIRE(clf::generating_function_check(0.1, 30) < 1e-12);
  REQUIRE(clf::generating_function_check(0.2, 40) < 1e-12);
  REQUIRE_THROWS_AS(clf::generating_function_check(0.3, 30), std::domain_error);
  REQUIRE_THROWS_AS(clf::generating_function_check(0.1, 5), std::invalid_argument);
}

TEST_CASE("kummer large-argument expansion", "[saddle]") {
  // leading term of M(1/2,1,-x): 1/sqrt(pi x)
  const double x = 7.0;
  auto lead = clf::kummer_asymptotic(0.5, 1.0, x, 1);
  REQUIRE(lead.value == Approx(1.0 / std::sqrt(3.14159265358979323846 * x)).epsilon(1e-14));

  auto a50 = clf::kummer_asymptotic(0.5, 1.0, 50.0, 4);
  REQUIRE(a50.value == Approx(clf::kummer_m(0.5, 1.0, -50.0)).epsilon(1e-5));
  REQUIRE_FALSE(a50.past_optimal_truncation);

  auto a200 = clf::kummer_asymptotic(0.5, 1.0, 200.0, 6);
  REQUIRE(a200.value == Approx(clf::kummer_m(0.5, 1.0, -200.0)).epsilon(1e-8));
  REQUIRE_FALSE(a200.past_optimal_truncation);

  // requesting far more terms than the optimal truncation sets the flag
  auto past = clf::kummer_asymptotic(0.5, 1.0, 2.0, 20);
  REQUIRE(past.past_optimal_truncation);

  REQUIRE_THROWS_AS(clf::kummer_asymptotic(0.5, 1.0, -1.0, 3), std::domain_error);
}
