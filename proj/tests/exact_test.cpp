#include <catch2/catch.hpp>

#include <thread>
#include <vector>

#include "clf/exact.hpp"

using clf::BigInt;
using clf::Rational;

TEST_CASE("Rational canonical form", "[rational]") {
  Rational q(6L, -4L);
  REQUIRE(q.numerator() == BigInt(-3));
  REQUIRE(q.denominator() == BigInt(2));
  REQUIRE(q.str() == "-3/2");
  REQUIRE(Rational(10L, 5L).str() == "2");
  REQUIRE_THROWS_AS(Rational(1L, 0L), std::domain_error);
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  // arithmetic stays reduced with positive denominator
  Rational a(1L, 6L), b(1L, 3L);
  REQUIRE((a + b).str() == "1/2");
  REQUIRE((a - b).str() == "-1/6");
  REQUIRE((a * b).str() == "1/18");
  REQUIRE((a / b).str() == "1/2");
  REQUIRE((a + b).denominator() > 0);
}

TEST_CASE("Rational decimal rendering", "[rational]") {
  REQUIRE(Rational(1L, 2L).decimal(3) == "5.00e-01");
  REQUIRE(Rational(20L, 9L).decimal(10) == "2.222222222e+00");
}

TEST_CASE("pochhammer_half", "[exact]") {
  REQUIRE(clf::pochhammer_half(0) == Rational(1));
  // (1/2)(3/2) and the product of (2k-1)/2 for k=1..5 = 945/2^5
  REQUIRE(clf::pochhammer_half(2) == Rational(3L, 4L));
  REQUIRE(clf::pochhammer_half(5) == Rational(945L, 32L));

  // (2n)! = 4^n n! (1/2)_n for a range of n
  for (unsigned long n = 0; n <= 30; ++n) {
    Rational lhs(clf::factorial(2 * n));
    Rational rhs = Rational(BigInt(clf::pow2(2 * n) * clf::factorial(n))) * clf::pochhammer_half(n);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("pochhammer reflection identity", "[exact]") {
  // (a)_{n-k} = (-1)^k (a)_n / (1-a-n)_k for a = 1/2
  const Rational a(1L, 2L);
  for (unsigned long n = 0; n <= 50; n += 7) {
    for (unsigned long k = 0; k <= n; ++k) {
      Rational lhs = clf::pochhammer(a, n - k);
      Rational denom = clf::pochhammer(Rational(1) - a - Rational(static_cast<long>(n)), k);
      Rational rhs = clf::pochhammer(a, n) / denom;
      if (k % 2 == 1) rhs = -rhs;
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("sequence values", "[exact]") {
  const long expected[] = {1, 8, 80, 896, 10816};
  for (unsigned long n = 0; n < 5; ++n) {
    REQUIRE(clf::clf_number(n) == BigInt(expected[n]));
  }
}

TEST_CASE("f routes at small n", "[exact]") {
  REQUIRE(clf::f_via_3f2(0) == Rational(1));
  REQUIRE(clf::f_via_quadratic(0) == Rational(1));
  REQUIRE(clf::f_via_p4(0) == Rational(1));

  // oracle: f(n) = P_n / C(2n,n)^2 with the published P values
  REQUIRE(clf::f_via_3f2(1) == Rational(8L, 4L));
  REQUIRE(clf::f_via_quadratic(1) == Rational(8L, 4L));
  REQUIRE(clf::f_via_3f2(2) == Rational(80L, 36L));
  REQUIRE(clf::f_via_p4(2) == Rational(80L, 36L));
  REQUIRE(clf::f_via_quadratic(3) == Rational(896L, 400L));
  REQUIRE(clf::f_via_3f2(3) == Rational(56L, 25L));
  REQUIRE(clf::f_via_p4(4) == Rational(10816L, 4900L));
  REQUIRE(clf::f_via_p4(4) == Rational(2704L, 1225L));
}

TEST_CASE("generating coefficients", "[exact]") {
  REQUIRE(clf::generating_coefficient(0) == Rational(1));
  REQUIRE(clf::generating_coefficient(1) == Rational(1));          // 1/2 + 1/2
  REQUIRE(clf::generating_coefficient(2) == Rational(5L, 8L));     // 3/16 + 1/4 + 3/16

  // cross-check against f(2) = 20/9: f = n!^3/(2^n (1/2)_n^2) F
  Rational h = clf::pochhammer_half(2);
  Rational f2 = Rational(8L) / (Rational(4L) * h * h) * clf::generating_coefficient(2);
  REQUIRE(f2 == Rational(20L, 9L));
}

TEST_CASE("verify_identities assembles consistent values", "[exact]") {
  auto v0 = clf::verify_identities(0);
  REQUIRE(v0.p_n == BigInt(1));
  REQUIRE(v0.f_n == Rational(1));
  REQUIRE(v0.F_n == Rational(1));

  auto v1 = clf::verify_identities(1);
  REQUIRE(v1.p_n == BigInt(8));
  REQUIRE(v1.f_n == Rational(2));
  REQUIRE(v1.F_n == Rational(1));

  auto v2 = clf::verify_identities(2);
  REQUIRE(v2.p_n == BigInt(80));
  REQUIRE(v2.f_n == Rational(20L, 9L));
  REQUIRE(v2.F_n == Rational(5L, 8L));
}

TEST_CASE("route agreement and product identities, moderate range", "[exact]") {
  for (unsigned long n = 0; n <= 60; ++n) {
    REQUIRE_NOTHROW(clf::verify_identities(n));
  }
}

TEST_CASE("f(n) exceeds 2 and decays monotonically", "[exact]") {
  Rational prev;
  for (unsigned long n = 2; n <= 200; ++n) {
    Rational f = clf::f_via_3f2(n);
    REQUIRE(f > Rational(2));
    if (n > 4) REQUIRE(f < prev);
    prev = f;
  }
}

TEST_CASE("concurrent callers see a consistent factorial table", "[exact]") {
  const auto reference = clf::verify_identities(35);
  std::vector<std::thread> workers;
  std::vector<bool> ok(4, false);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([t, &ok, &reference] {
      bool good = true;
      for (unsigned long n = static_cast<unsigned long>(t); n <= 40; n += 4) {
        auto v = clf::verify_identities(n);
        if (n == 35 && (v.p_n != reference.p_n || v.f_n != reference.f_n)) good = false;
      }
      ok[static_cast<size_t>(t)] = good;
    });
  }
  for (auto& w : workers) w.join();
  for (bool good : ok) REQUIRE(good);
}
