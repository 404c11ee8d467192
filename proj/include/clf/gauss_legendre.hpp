#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace clf {

// Legendre polynomial P_n(x) by the three-term recurrence
// (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
inline double legendre_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("legendre_eval: negative degree");
  if (n == 0) return 1.0;
  double pkm1 = 1.0, pk = x;
  for (int k = 1; k < n; ++k) {
    const double pkp1 = ((2 * k + 1) * x * pk - k * pkm1) / (k + 1);
    pkm1 = pk;
    pk = pkp1;
  }
  return pk;
}

struct GaussLegendreRule {
  std::vector<double> node;    // ascending on (-1, 1)
  std::vector<double> weight;
};

namespace detail {

inline GaussLegendreRule make_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.node.resize(static_cast<size_t>(n));
  rule.weight.resize(static_cast<size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double pkm1 = 1.0, pk = x;
      for (int k = 1; k < n; ++k) {
        const double pkp1 = ((2 * k + 1) * x * pk - k * pkm1) / (k + 1);
        pkm1 = pk;
        pk = pkp1;
      }
      dp = n * (x * pk - pkm1) / (x * x - 1.0);
      const double dx = pk / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.node[static_cast<size_t>(i)] = -x;
    rule.node[static_cast<size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weight[static_cast<size_t>(i)] = w;
    rule.weight[static_cast<size_t>(n - 1 - i)] = w;
  }
  return rule;
}

}  // namespace detail

// Cached nodes/weights on [-1, 1]; the cache is guarded and entries are
// immutable once built.
inline const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::make_gauss_legendre(n)).first;
  return it->second;
}

}  // namespace clf
