#pragma once

#include <functional>
#include <vector>

#include "maxent/types.hpp"

// Brute-force references, deliberately algorithm-disjoint from the Newton
// solvers: exhaustive grid scans whose only sophistication is patience.
// Restricted to m <= 3 and a scalar multiplier, where exhaustive search is
// affordable; higher dimensions are certified transitively against these.

namespace maxent::oracle {

// Regular lattice on the closed m-simplex, m = 2 or 3.
struct SimplexGrid {
  int m = 3;
  double step = 0.002;

  SimplexGrid(int m, double step);
};

// Visits every grid point once, in lexicographically increasing order of
// (p_1, p_2, ...). Each point sums to 1 within 1e-12.
void for_each_grid_point(const SimplexGrid& grid,
                         const std::function<void(const std::vector<double>&)>& fn);

// Grid point of maximal Shannon entropy subject to
// |u.p - c| <= (max u - min u) * step. First-encountered wins on exact
// entropy ties, which is the lexicographically smallest point.
Pmf grid_maxent(const Potential& u, double c, const SimplexGrid& grid);

// Exhaustive multiplier scan: the lambda in {lo, lo + step, ...} <= hi
// maximizing log_likelihood(r, dist(lambda u)). First-encountered wins on
// ties, so a constant u returns lo.
double grid_ml(const Potential& u, const Pmf& r, double lo, double hi,
               double step);

}  // namespace maxent::oracle
