#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's numeric paths.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

/// Phi(x) in extended precision.
inline long double normal_cdf(long double x) {
  return 0.5L * std::erfc(-x / std::sqrt(2.0L));
}

/// Solves Phi(x) = p by bisection in long double. For p > 1/2 the upper tail
/// 1 - p is formed exactly and the lower-tail root is negated.
inline double inv_normal(double p) {
  if (p > 0.5) return -inv_normal(static_cast<double>(1.0L - static_cast<long double>(p)));
  if (p == 0.5) return 0.0;
  const long double target = p;
  long double lo = -40.0L, hi = 0.0L;
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (normal_cdf(mid) < target) lo = mid;
    else hi = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

/// q_i = 100 (L_i + E_i/2) / N by counting every pair.
inline std::vector<double> quantiles(const std::vector<std::int64_t>& c) {
  const std::size_t n = c.size();
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t less = 0, equal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      less += c[j] < c[i];
      equal += c[j] == c[i];
    }
    q[i] = 100.0 * (static_cast<double>(less) + 0.5 * static_cast<double>(equal)) /
           static_cast<double>(n);
  }
  return q;
}

/// 1-based class index under lower-inclusive / upper-exclusive bounds.
inline int pr6_class(double q) {
  const double upper[] = {50.0, 75.0, 90.0, 95.0, 99.0, 100.0};
  for (int k = 0; k < 6; ++k) {
    if (q < upper[k]) return k + 1;
  }
  return 6;
}

struct Tau {
  double tau;
  std::int64_t c, d, tx, ty;
};

/// Definitional tau-b on raw values.
inline Tau tau_b(const std::vector<double>& x, const std::vector<double>& y) {
  Tau t{0, 0, 0, 0, 0};
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j], dy = y[i] - y[j];
      if (dx == 0) ++t.tx;
      if (dy == 0) ++t.ty;
      if (dx * dy > 0) ++t.c;
      if (dx * dy < 0) ++t.d;
    }
  }
  const double total = static_cast<double>(n * (n - 1) / 2);
  t.tau = static_cast<double>(t.c - t.d) /
          std::sqrt((total - static_cast<double>(t.tx)) * (total - static_cast<double>(t.ty)));
  return t;
}

/// Exact two-sided permutation p for tau at n distinct values, from the
/// Mahonian (inversion count) distribution.
inline double exact_null_p(int n, std::int64_t abs_s) {
  std::vector<long double> dist{1.0L};
  for (int k = 2; k <= n; ++k) {
    std::vector<long double> next(dist.size() + static_cast<std::size_t>(k - 1), 0.0L);
    for (std::size_t s = 0; s < dist.size(); ++s) {
      for (int j = 0; j < k; ++j) next[s + static_cast<std::size_t>(j)] += dist[s];
    }
    dist = std::move(next);
  }
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  long double total = 0, hit = 0;
  for (std::size_t inv = 0; inv < dist.size(); ++inv) {
    const std::int64_t s = pairs - 2 * static_cast<std::int64_t>(inv);
    total += dist[inv];
    if ((s < 0 ? -s : s) >= abs_s) hit += dist[inv];
  }
  return static_cast<double>(hit / total);
}

}  // namespace oracle
