#pragma once

#include <stdexcept>
#include <vector>

#include "clf/even_sin_poly.hpp"

namespace clf {

// Truncated formal power series in w whose coefficients are EvenSinPoly.
// All arithmetic is closed at the truncation order: products drop powers
// beyond it, so every coefficient up to the order is exact.
class PolySeries {
public:
  explicit PolySeries(int order) : t_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("PolySeries: negative order");
  }

  int order() const { return static_cast<int>(t_.size()) - 1; }

  const EvenSinPoly& coeff(int k) const { return t_.at(static_cast<size_t>(k)); }
  EvenSinPoly& coeff(int k) { return t_.at(static_cast<size_t>(k)); }

  PolySeries truncated(int new_order) const {
    PolySeries r(new_order);
    const int m = std::min(new_order, order());
    for (int k = 0; k <= m; ++k) r.t_[static_cast<size_t>(k)] = t_[static_cast<size_t>(k)];
    return r;
  }

  PolySeries& operator+=(const PolySeries& o) {
    require_same_order(o);
    for (size_t k = 0; k < t_.size(); ++k) t_[k] += o.t_[k];
    return *this;
  }

  PolySeries& operator-=(const PolySeries& o) {
    require_same_order(o);
    for (size_t k = 0; k < t_.size(); ++k) t_[k] -= o.t_[k];
    return *this;
  }

  friend PolySeries operator+(PolySeries a, const PolySeries& b) { a += b; return a; }
  friend PolySeries operator-(PolySeries a, const PolySeries& b) { a -= b; return a; }

  friend PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    a.require_same_order(b);
    PolySeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.coeff(i).is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (b.coeff(j).is_zero()) continue;
        r.coeff(i + j) += a.coeff(i) * b.coeff(j);
      }
    }
    return r;
  }

  PolySeries scaled(const EvenSinPoly& p) const {
    PolySeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeff(k) = t_[static_cast<size_t>(k)] * p;
    return r;
  }

  PolySeries scaled(const Rational& q) const {
    PolySeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeff(k) = t_[static_cast<size_t>(k)] * q;
    return r;
  }

  // d/dw, one order lower.
  PolySeries derivative() const {
    if (order() == 0) return PolySeries(0);
    PolySeries r(order() - 1);
    for (int k = 0; k < order(); ++k) {
      r.coeff(k) = t_[static_cast<size_t>(k) + 1] * Rational(k + 1);
    }
    return r;
  }

  bool has_zero_constant_term() const { return t_[0].is_zero(); }

private:
  void require_same_order(const PolySeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("PolySeries: order mismatch");
  }

  std::vector<EvenSinPoly> t_;
};

}  // namespace clf
