#pragma once

#include <vector>

#include "clf/errors.hpp"
#include "clf/rational.hpp"

// Exact arbitrary-precision computation of the Catalan-Larcombe-French
// numbers P_n, the hypergeometric ratio f(n) = P_n / C(2n,n)^2 by three
// independent terminating sums, and the generating-function coefficients
// F_n of [e^{w/2} I_0(w/2)]^2, together with the identities tying them
// together. Everything here is a pure function of its arguments.

namespace clf {

struct ClfValue {
  unsigned long n;
  BigInt p_n;     // integer sequence value P_n
  Rational f_n;   // P_n / C(2n,n)^2
  Rational F_n;   // generating-function coefficient
};

// (1/2)_n = (2n)! / (4^n n!)
inline Rational pochhammer_half(unsigned long n) {
  return Rational(factorial(2 * n), BigInt(pow2(2 * n) * factorial(n)));
}

// P_n = (1/n!) sum_{p+q=n} C(2p,p) C(2q,q) (2p)!(2q)!/(p! q!).
// The sum is always divisible by n!; a failed division means the
// arithmetic substrate is broken, not bad input.
inline BigInt clf_number(unsigned long n) {
  BigInt sum(0);
  for (unsigned long p = 0; p <= n; ++p) {
    const unsigned long q = n - p;
    BigInt t(binomial(2 * p, p) * binomial(2 * q, q));
    BigInt fp = factorial(p), fq = factorial(q);
    BigInt rp = factorial(2 * p), rq = factorial(2 * q);
    mpz_divexact(rp.get_mpz_t(), rp.get_mpz_t(), fp.get_mpz_t());
    mpz_divexact(rq.get_mpz_t(), rq.get_mpz_t(), fq.get_mpz_t());
    t *= rp;
    t *= rq;
    sum += t;
  }
  BigInt nf = factorial(n);
  if (mpz_divisible_p(sum.get_mpz_t(), nf.get_mpz_t()) == 0) {
    throw IdentityError("binomial sum for P_n is not divisible by n!", n);
  }
  BigInt p;
  mpz_divexact(p.get_mpz_t(), sum.get_mpz_t(), nf.get_mpz_t());
  return p;
}

// f(n) = sum_{k=0}^{n} (-1)^k (-n)_k (1/2)_k^2 / (k! ((1/2-n)_k)^2),
// via the exact term ratio
//   t_{k+1}/t_k = (n-k)(2k+1)^2 / ((k+1)(2k+1-2n)^2).
inline Rational f_via_3f2(unsigned long n) {
  Rational sum(1), term(1);
  for (unsigned long k = 0; k < n; ++k) {
    const long d = 2 * static_cast<long>(k) + 1 - 2 * static_cast<long>(n);
    BigInt num(BigInt(static_cast<long>(n - k)) * static_cast<long>(2 * k + 1) * static_cast<long>(2 * k + 1));
    BigInt den(BigInt(static_cast<long>(k + 1)) * d * d);
    term *= Rational(num, den);
    sum += term;
  }
  return sum;
}

// f(n) = 2^n sum_{k=0}^{n} (-n)_k (-n/2)_k ((1-n)/2)_k / (k! ((1/2-n)_k)^2)
// at unit argument. The loop runs to n; one of the two numerator factors
// hits an exact zero near k = n/2 and every later term is exactly zero.
inline Rational f_via_quadratic(unsigned long n) {
  Rational sum(1), term(1);
  for (unsigned long k = 0; k < n; ++k) {
    const long kl = static_cast<long>(k), nl = static_cast<long>(n);
    const long d = 2 * kl + 1 - 2 * nl;
    BigInt num(BigInt(kl - nl) * (2 * kl - nl) * (2 * kl + 1 - nl));
    BigInt den(BigInt(kl + 1) * d * d);
    term *= Rational(num, den);
    sum += term;
  }
  return Rational(pow2(n)) * sum;
}

// f(n) = n!/(2^n (1/2)_n) sum_{k=0}^{n} (-1)^k (-n)_k^2 (1/2)_k /
//        (k! (1)_k (1/2-n)_k).
inline Rational f_via_p4(unsigned long n) {
  Rational sum(1), term(1);
  for (unsigned long k = 0; k < n; ++k) {
    const long kl = static_cast<long>(k), nl = static_cast<long>(n);
    BigInt num(BigInt(-(kl - nl)) * (kl - nl) * (2 * kl + 1));
    BigInt den(BigInt(kl + 1) * (kl + 1) * (2 * kl + 1 - 2 * nl));
    term *= Rational(num, den);
    sum += term;
  }
  Rational prefactor = Rational(factorial(n)) / (Rational(pow2(n)) * pochhammer_half(n));
  return prefactor * sum;
}

// F_n = sum_{k=0}^{n} g_k g_{n-k} with g_j = (1/2)_j / (j!)^2.
inline Rational generating_coefficient(unsigned long n) {
  std::vector<Rational> g(n + 1);
  g[0] = Rational(1);
  for (unsigned long j = 0; j < n; ++j) {
    g[j + 1] = g[j] * Rational(static_cast<long>(2 * j + 1),
                               static_cast<long>(2 * (j + 1) * (j + 1)));
  }
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) sum += g[k] * g[n - k];
  return sum;
}

// Computes every route and asserts the exact cross-identities:
//   all three f sums agree,
//   P_n = C(2n,n)^2 f(n),
//   f(n) = n!^3 / (2^n (1/2)_n^2) F_n.
inline ClfValue verify_identities(unsigned long n) {
  BigInt p = clf_number(n);
  Rational f = f_via_3f2(n);
  if (f != f_via_quadratic(n)) {
    throw IdentityError("alternating-sum and unit-argument f routes disagree", n);
  }
  if (f != f_via_p4(n)) {
    throw IdentityError("alternating-sum and prefactored f routes disagree", n);
  }
  BigInt b = binomial(2 * n, n);
  if (Rational(p) != Rational(BigInt(b * b)) * f) {
    throw IdentityError("P_n != C(2n,n)^2 f(n)", n);
  }
  Rational F = generating_coefficient(n);
  Rational nf(factorial(n));
  Rational h = pochhammer_half(n);
  if (f != nf * nf * nf / (Rational(pow2(n)) * h * h) * F) {
    throw IdentityError("f(n) != n!^3/(2^n (1/2)_n^2) F_n", n);
  }
  return ClfValue{n, p, f, F};
}

}  // namespace clf
