#include "maxent/oracle.hpp"

#include <cmath>

#include "detail.hpp"
#include "maxent/core.hpp"

namespace maxent::oracle {

SimplexGrid::SimplexGrid(int m_, double step_) : m(m_), step(step_) {
  if (m != 2 && m != 3)
    throw InvalidInput("simplex grid supports m = 2 or m = 3");
  if (!std::isfinite(step) || step <= 0.0 || step > 1.0)
    throw InvalidInput("grid step must lie in (0, 1]");
}

void for_each_grid_point(
    const SimplexGrid& grid,
    const std::function<void(const std::vector<double>&)>& fn) {
  const long k = std::lround(std::floor(1.0 / grid.step + 1e-9));
  std::vector<double> p(static_cast<std::size_t>(grid.m));
  if (grid.m == 2) {
    for (long i = 0; i <= k; ++i) {
      p[0] = static_cast<double>(i) * grid.step;
      p[1] = 1.0 - p[0];
      if (p[1] < 0.0) p[1] = 0.0;
      fn(p);
    }
  } else {
    for (long i = 0; i <= k; ++i) {
      p[0] = static_cast<double>(i) * grid.step;
      for (long j = 0; i + j <= k; ++j) {
        p[1] = static_cast<double>(j) * grid.step;
        p[2] = 1.0 - p[0] - p[1];
        if (p[2] < 0.0) p[2] = 0.0;
        fn(p);
      }
    }
  }
}

Pmf grid_maxent(const Potential& u, double c, const SimplexGrid& grid) {
  if (static_cast<int>(u.size()) != grid.m)
    throw DimensionMismatch("potential length must match the grid dimension");
  if (!std::isfinite(c)) throw InvalidInput("target mean must be finite");

  const double window = (u.max() - u.min()) * grid.step;
  const std::vector<double>& uv = u.values();

  bool found = false;
  double best_entropy = 0.0;
  std::vector<double> best;
  for_each_grid_point(grid, [&](const std::vector<double>& p) {
    if (std::abs(detail::dot(uv, p) - c) > window) return;
    double h = 0.0;
    for (double v : p) {
      if (v > 0.0) h -= v * std::log(v);
    }
    if (!found || h > best_entropy) {
      found = true;
      best_entropy = h;
      best = p;
    }
  });
  if (!found)
    throw NoFeasiblePoint("no grid point satisfies the coherence window");
  return Pmf(best);
}

double grid_ml(const Potential& u, const Pmf& r, double lo, double hi,
               double step) {
  if (u.size() != r.size())
    throw DimensionMismatch("potential and frequency vectors must have equal length");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo >= hi)
    throw InvalidRange("scan interval requires lo < hi");
  if (!std::isfinite(step) || step <= 0.0)
    throw InvalidRange("scan step must be positive");

  bool found = false;
  double best_lambda = lo;
  double best_ll = 0.0;
  const double limit = hi + step * 1e-9;
  for (long k = 0;; ++k) {
    const double lambda = lo + static_cast<double>(k) * step;
    if (lambda > limit) break;
    const double ll = log_likelihood(r, dist(scale(u, lambda)));
    if (!found || ll > best_ll) {
      found = true;
      best_ll = ll;
      best_lambda = lambda;
    }
  }
  return best_lambda;
}

}  // namespace maxent::oracle
