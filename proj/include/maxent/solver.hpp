#pragma once

#include <string>
#include <vector>

#include "maxent/types.hpp"

namespace maxent {

struct SolverConfig {
  // Max-norm tolerance on the constraint residual X.p - y. Convergence is
  // declared on the residual, never on multiplier movement.
  double tol_residual = 1e-10;
  int max_iter = 200;
  // Divergence threshold on the max-norm of lambda; crossing it while the
  // residual is still above tolerance signals an infeasible target.
  double lambda_blowup = 1e8;
  // Backtracking factor of the line search.
  double damping = 0.5;
};

enum class SolveStatus {
  converged,
  max_iter_exceeded,
  infeasible_target,
};

std::string to_string(SolveStatus status);

// Result of a dual solve. pmf is always dist(lambda^T X) of the returned
// multipliers (recomputing it reproduces pmf bitwise), and residual_inf is
// the max-norm of X.pmf - y for that stored pmf. On failure the fields hold
// the best iterate found.
struct DualSolution {
  std::vector<double> lambda;
  Pmf pmf;
  double residual_inf = 0.0;
  int iterations = 0;
  SolveStatus status = SolveStatus::converged;
  // Set when every constraint row is constant: all multipliers are
  // equivalent and 0 is returned as the canonical representative.
  bool degenerate = false;

  bool converged() const noexcept { return status == SolveStatus::converged; }
};

// ML fit within the one-parameter family dist(lambda * u): finds lambda_0
// with u . dist(lambda_0 u) = u . r, the stationarity condition of the
// multinomial log-likelihood. g(lambda) = u . dist(lambda u) is strictly
// decreasing for non-constant u (g' = -Var(u) < 0), so the root is unique;
// it is found by bracketing plus safeguarded Newton with bisection fallback.
// Infeasible when u . r lies on or outside [min(u), max(u)] for
// non-constant u.
DualSolution solve_ml_scalar(const Potential& u, const Pmf& r,
                             const SolverConfig& cfg = {});

// MaxEnt solution of y = Xp: minimizes the convex dual
//   psi(lambda) = ln sum_i exp(-(lambda^T X)_i) + lambda^T y,
// whose gradient is y - X . dist(lambda^T X). Newton direction from the
// Hessian Cov_p(rows of X) with a small diagonal regularizer, Armijo
// backtracking on psi, gradient-descent fallback when the factorization
// fails. The minimizer induces the maximum-entropy pmf dist(lambda^T X)
// among all pmfs satisfying Xp = y.
DualSolution solve_inverse(const ConstraintSystem& sys,
                           const SolverConfig& cfg = {});

// MaxEnt distribution coherent with r on u: delegates to solve_inverse with
// X = [u], y = [u . r]. Agrees with solve_ml_scalar by complementarity; the
// two take independent algorithmic routes, so the agreement is a check, not
// a tautology.
DualSolution solve_maxent_coherent(const Potential& u, const Pmf& r,
                                   const SolverConfig& cfg = {});

// u . (r - sol.pmf): the residual vector r - q is orthogonal to u at a
// converged scalar solution q = dist(lambda_0 u). For the J = 1 case its
// magnitude equals sol.residual_inf.
double orthogonality_check(const Potential& u, const Pmf& r,
                           const DualSolution& sol);

// The dual objective psi(lambda) and its closed-form gradient
// y - X . dist(lambda^T X); exposed for finite-difference verification.
double dual_objective(const ConstraintSystem& sys,
                      const std::vector<double>& lambda);
std::vector<double> dual_gradient(const ConstraintSystem& sys,
                                  const std::vector<double>& lambda);

}  // namespace maxent
