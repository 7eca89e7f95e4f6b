#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

// Shared generators and metrics for the test suites. Seeds are fixed by the
// callers so every run sees the same instances.

namespace testutil {

inline std::vector<double> random_potential_values(std::mt19937& rng, int m,
                                                   double lo, double hi,
                                                   double min_range = 0.0) {
  std::uniform_real_distribution<double> pick(lo, hi);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (;;) {
    for (double& x : v) x = pick(rng);
    const auto [a, b] = std::minmax_element(v.begin(), v.end());
    if (*b - *a >= min_range) return v;
  }
}

// Flat Dirichlet draw; entries below `floor` are rejected so callers can ask
// for interior points.
inline std::vector<double> random_dirichlet(std::mt19937& rng, int m,
                                            double floor = 0.0) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<double> r(static_cast<std::size_t>(m));
  for (;;) {
    double sum = 0.0;
    for (double& x : r) {
      x = -std::log(1.0 - u01(rng));
      sum += x;
    }
    if (sum <= 0.0) continue;
    for (double& x : r) x /= sum;
    bool ok = true;
    for (double x : r) ok = ok && x >= floor && x > 0.0;
    if (ok) return r;
  }
}

inline double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double l1(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

}  // namespace testutil
