#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace clf {

using BigInt = mpz_class;

// Exact rational scalar. Always in lowest terms with positive denominator;
// every operation re-canonicalizes, so equality is plain value comparison.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) { normalize(); }
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) { normalize(); }

  BigInt numerator() const { return BigInt(v_.get_num()); }
  BigInt denominator() const { return BigInt(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }

  // "p/q" in lowest terms, or just "p" when q == 1.
  std::string str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  // Decimal scientific form with `digits` significant digits, rounded from
  // the exact value (not through binary64).
  std::string decimal(int digits = 17) const {
    if (digits < 1) digits = 1;
    mpf_class f(v_, static_cast<mp_bitcnt_t>(64 + 4 * digits));
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fe", digits - 1, f.get_mpf_t());
    return std::string(buf.data());
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  explicit Rational(const mpq_class& q) : v_(q) {}

  void normalize() {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return Rational(num, den);  // gcd(n,d)=1 implies gcd(n^e,d^e)=1
}

namespace detail {

// Shared factorial table; guarded so concurrent callers see a consistent
// state. Values are returned by copy.
inline BigInt factorial_cached(unsigned long n) {
  static std::mutex mutex;
  static std::vector<BigInt> cache{BigInt(1)};
  std::scoped_lock lock(mutex);
  while (cache.size() <= n) {
    cache.push_back(BigInt(cache.back() * static_cast<unsigned long>(cache.size())));
  }
  return cache[n];
}

}  // namespace detail

inline BigInt factorial(unsigned long n) { return detail::factorial_cached(n); }

inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt r = factorial(n);
  BigInt d1 = factorial(k), d2 = factorial(n - k);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d1.get_mpz_t());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d2.get_mpz_t());
  return r;
}

inline BigInt pow2(unsigned long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1), exact.
inline Rational pochhammer(const Rational& a, unsigned long k) {
  Rational r(1);
  Rational f = a;
  for (unsigned long j = 0; j < k; ++j) {
    r *= f;
    f += Rational(1);
  }
  return r;
}

}  // namespace clf
