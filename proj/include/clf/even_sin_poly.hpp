#pragma once

#include <vector>

#include "clf/rational.hpp"

namespace clf {

// Polynomial in s = sin t holding even powers only: sum_m q_m s^{2m} with
// exact rational q_m. Index m addresses the s^{2m} coefficient; trailing
// zeros are trimmed so equality is coefficient-wise.
class EvenSinPoly {
public:
  EvenSinPoly() = default;
  explicit EvenSinPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }

  // coeff * s^{2m}
  static EvenSinPoly monomial(int m, const Rational& coeff) {
    EvenSinPoly p;
    if (!coeff.is_zero()) {
      p.c_.assign(static_cast<size_t>(m) + 1, Rational(0));
      p.c_[static_cast<size_t>(m)] = coeff;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  // Highest m with a nonzero s^{2m} coefficient; -1 for the zero polynomial.
  int max_exponent_index() const { return static_cast<int>(c_.size()) - 1; }

  // Degree in s itself (2 * max index); -1 for the zero polynomial.
  int degree() const { return c_.empty() ? -1 : 2 * max_exponent_index(); }

  Rational coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(m)];
  }

  void set_coeff(int m, const Rational& v) {
    if (m >= static_cast<int>(c_.size())) {
      if (v.is_zero()) return;
      c_.resize(static_cast<size_t>(m) + 1, Rational(0));
    }
    c_[static_cast<size_t>(m)] = v;
    trim();
  }

  EvenSinPoly& operator+=(const EvenSinPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  EvenSinPoly& operator-=(const EvenSinPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend EvenSinPoly operator+(EvenSinPoly a, const EvenSinPoly& b) { a += b; return a; }
  friend EvenSinPoly operator-(EvenSinPoly a, const EvenSinPoly& b) { a -= b; return a; }

  friend EvenSinPoly operator*(const EvenSinPoly& a, const EvenSinPoly& b) {
    EvenSinPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }

  friend EvenSinPoly operator*(const EvenSinPoly& a, const Rational& k) {
    EvenSinPoly r;
    if (k.is_zero()) return r;
    r.c_ = a.c_;
    for (auto& v : r.c_) v *= k;
    return r;
  }

  friend bool operator==(const EvenSinPoly& a, const EvenSinPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const EvenSinPoly& a, const EvenSinPoly& b) { return !(a == b); }

  // Value at a given s^2.
  Rational at_s2(const Rational& s2) const {
    Rational v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * s2 + c_[i];
    return v;
  }

  double at_s2(double s2) const {
    double v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * s2 + c_[i].to_double();
    return v;
  }

  // The polynomial with s^2 replaced by 1 - s^2 (i.e. t -> pi/2 - t).
  EvenSinPoly reflected() const {
    EvenSinPoly r;
    for (size_t m = 0; m < c_.size(); ++m) {
      if (c_[m].is_zero()) continue;
      // (1 - x)^m = sum_j C(m,j) (-x)^j
      for (size_t j = 0; j <= m; ++j) {
        Rational term = c_[m] * Rational(binomial(m, j));
        if (j % 2 == 1) term = -term;
        r.set_coeff(static_cast<int>(j), r.coeff(static_cast<int>(j)) + term);
      }
    }
    return r;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace clf
