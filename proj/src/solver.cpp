#include "maxent/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"
#include "maxent/core.hpp"

namespace maxent {

namespace {

constexpr double kArmijoSlope = 1e-4;
constexpr double kMinLineStep = 1e-16;

void validate_config(const SolverConfig& cfg) {
  if (!std::isfinite(cfg.tol_residual) || cfg.tol_residual <= 0.0)
    throw InvalidInput("tol_residual must be positive and finite");
  if (cfg.max_iter < 1) throw InvalidInput("max_iter must be >= 1");
  if (!std::isfinite(cfg.lambda_blowup) || cfg.lambda_blowup <= 1.0)
    throw InvalidInput("lambda_blowup must be > 1");
  if (!(cfg.damping > 0.0) || !(cfg.damping < 1.0))
    throw InvalidInput("damping must lie in (0, 1)");
}

double max_abs(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

// Residual floor reachable in double arithmetic for values of this size.
double residual_floor(double scale) {
  return 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);
}

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::converged:
      return "converged";
    case SolveStatus::max_iter_exceeded:
      return "max_iter_exceeded";
    case SolveStatus::infeasible_target:
      return "infeasible_target";
  }
  return "unknown";
}

DualSolution solve_ml_scalar(const Potential& u, const Pmf& r,
                             const SolverConfig& cfg) {
  validate_config(cfg);
  if (u.size() != r.size())
    throw DimensionMismatch("potential and frequency vectors must have equal length");

  const std::vector<double>& uv = u.values();
  const std::size_t m = uv.size();
  const double c = mean_value(u, r);
  const double umin = u.min();
  const double umax = u.max();

  // Reported residual is recomputed through the stored (renormalized) pmf so
  // it matches orthogonality_check bitwise.
  auto finish = [&](double lambda, const std::vector<double>& p, int iterations,
                    SolveStatus tentative, bool degenerate) {
    Pmf pmf(p);
    const double res = std::abs(mean_value(u, r) - mean_value(u, pmf));
    SolveStatus status = tentative;
    if (tentative != SolveStatus::infeasible_target && res <= cfg.tol_residual)
      status = SolveStatus::converged;
    return DualSolution{{lambda}, std::move(pmf),    res,
                        iterations, status, degenerate};
  };

  const std::vector<double> uniform =
      detail::dist_from_scores(std::vector<double>(m, 0.0));

  // Constant potential: u . dist(lambda u) = u_1 = u . r for every lambda,
  // so 0 is returned as the canonical multiplier.
  if (umin == umax)
    return finish(0.0, uniform, 0, SolveStatus::max_iter_exceeded, true);

  // g(lambda) = u . dist(lambda u) has range (umin, umax), so a target on or
  // outside that interval is unreachable.
  if (c <= umin || c >= umax)
    return finish(0.0, uniform, 0, SolveStatus::infeasible_target, false);

  std::vector<double> scores(m);
  std::vector<double> p;
  double g = 0.0;
  double var = 0.0;
  auto eval = [&](double lambda) {
    for (std::size_t i = 0; i < m; ++i) scores[i] = lambda * uv[i];
    p = detail::dist_from_scores(scores);
    g = detail::dot(uv, p);
    var = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double d = uv[i] - g;
      var += p[i] * d * d;
    }
  };

  const double floor =
      residual_floor(std::max(std::abs(umin), std::abs(umax)));

  double lambda = 0.0;
  eval(lambda);

  double best_lambda = lambda;
  std::vector<double> best_p = p;
  double best_res = std::abs(g - c);
  double prev_res = std::numeric_limits<double>::infinity();

  // g is strictly decreasing, so g(lambda) > c puts the root to the right.
  double lo = 0.0, hi = 0.0;
  bool have_lo = false, have_hi = false;
  if (g > c) {
    lo = lambda;
    have_lo = true;
  } else {
    hi = lambda;
    have_hi = true;
  }

  int iterations = 0;
  SolveStatus tentative = SolveStatus::max_iter_exceeded;

  while (true) {
    const double res = std::abs(g - c);
    if (res < best_res) {
      best_res = res;
      best_lambda = lambda;
      best_p = p;
    }
    if (res <= floor) break;
    if (res <= cfg.tol_residual && res >= prev_res) break;  // polished out
    prev_res = res;
    if (iterations >= cfg.max_iter) break;

    double next;
    if (have_lo && have_hi) {
      // safeguarded Newton: fall back to bisection when the step leaves the
      // bracket (g' = -var)
      next = lambda + (g - c) / var;
      if (!std::isfinite(next) || next <= lo || next >= hi)
        next = 0.5 * (lo + hi);
    } else if (have_lo) {
      next = (lambda <= 0.0) ? 1.0 : 2.0 * lambda;
      if (next > cfg.lambda_blowup) {
        tentative = SolveStatus::infeasible_target;
        break;
      }
    } else {
      next = (lambda >= 0.0) ? -1.0 : 2.0 * lambda;
      if (next < -cfg.lambda_blowup) {
        tentative = SolveStatus::infeasible_target;
        break;
      }
    }

    lambda = next;
    eval(lambda);
    ++iterations;
    if (g > c) {
      lo = lambda;
      have_lo = true;
    } else {
      hi = lambda;
      have_hi = true;
    }
  }

  return finish(best_lambda, best_p, iterations, tentative, false);
}

DualSolution solve_inverse(const ConstraintSystem& sys,
                           const SolverConfig& cfg) {
  validate_config(cfg);
  const std::size_t J = sys.num_constraints();
  const std::size_t m = sys.num_outcomes();
  const auto& rows = sys.rows();
  const auto& y = sys.target();

  auto finish = [&](std::vector<double> lambda, const std::vector<double>& p,
                    int iterations, SolveStatus tentative, bool degenerate) {
    Pmf pmf(p);
    double res = 0.0;
    for (std::size_t j = 0; j < J; ++j)
      res = std::max(res, std::abs(detail::dot(rows[j], pmf.probs()) - y[j]));
    SolveStatus status = tentative;
    if (tentative != SolveStatus::infeasible_target && res <= cfg.tol_residual)
      status = SolveStatus::converged;
    return DualSolution{std::move(lambda), std::move(pmf), res,
                        iterations,        status,         degenerate};
  };

  const std::vector<double> lambda_zero(J, 0.0);
  const std::vector<double> uniform =
      detail::dist_from_scores(std::vector<double>(m, 0.0));

  // Exact screens. On the simplex (Xp)_j ranges over the closed interval
  // [min row_j, max row_j]; for J = 1 the image of dist is its open
  // interior, so boundary targets have no finite minimizer.
  std::vector<double> row_min(J), row_max(J);
  bool all_rows_constant = true;
  double value_scale = 0.0;
  for (std::size_t j = 0; j < J; ++j) {
    auto [lo_it, hi_it] = std::minmax_element(rows[j].begin(), rows[j].end());
    row_min[j] = *lo_it;
    row_max[j] = *hi_it;
    if (row_min[j] < row_max[j]) all_rows_constant = false;
    value_scale = std::max({value_scale, std::abs(row_min[j]),
                            std::abs(row_max[j]), std::abs(y[j])});
  }
  for (std::size_t j = 0; j < J; ++j) {
    if (row_min[j] == row_max[j]) {
      if (std::abs(y[j] - row_min[j]) > cfg.tol_residual)
        return finish(lambda_zero, uniform, 0, SolveStatus::infeasible_target,
                      all_rows_constant);
    } else if (y[j] < row_min[j] || y[j] > row_max[j] ||
               (J == 1 && (y[j] <= row_min[j] || y[j] >= row_max[j]))) {
      return finish(lambda_zero, uniform, 0, SolveStatus::infeasible_target,
                    false);
    }
  }
  if (all_rows_constant)
    return finish(lambda_zero, uniform, 0, SolveStatus::max_iter_exceeded,
                  true);

  auto scores_of = [&](const std::vector<double>& lambda) {
    std::vector<double> s(m, 0.0);
    for (std::size_t j = 0; j < J; ++j) {
      const double lj = lambda[j];
      if (lj == 0.0) continue;
      for (std::size_t i = 0; i < m; ++i) s[i] += lj * rows[j][i];
    }
    return s;
  };
  auto objective = [&](const std::vector<double>& s,
                       const std::vector<double>& lambda) {
    return detail::log_sum_exp_neg(s) + detail::dot(lambda, y);
  };

  const double floor = residual_floor(value_scale);

  std::vector<double> lambda = lambda_zero;
  std::vector<double> s = scores_of(lambda);
  std::vector<double> p = detail::dist_from_scores(s);

  std::vector<double> best_lambda = lambda;
  std::vector<double> best_p = p;
  double best_res = std::numeric_limits<double>::infinity();
  double prev_res = std::numeric_limits<double>::infinity();

  std::vector<double> xp(J), grad(J);
  int iterations = 0;
  SolveStatus tentative = SolveStatus::max_iter_exceeded;

  while (true) {
    double res = 0.0;
    for (std::size_t j = 0; j < J; ++j) {
      xp[j] = detail::dot(rows[j], p);
      grad[j] = y[j] - xp[j];  // gradient of psi
      res = std::max(res, std::abs(grad[j]));
    }
    if (res < best_res) {
      best_res = res;
      best_lambda = lambda;
      best_p = p;
    }
    if (res <= floor) break;
    if (res <= cfg.tol_residual && res >= prev_res) break;
    prev_res = res;
    if (max_abs(lambda) > cfg.lambda_blowup && res > cfg.tol_residual) {
      tentative = SolveStatus::infeasible_target;
      break;
    }
    if (iterations >= cfg.max_iter) break;

    // Newton system: H = Cov_p(rows of X), regularized on the diagonal.
    Eigen::MatrixXd hessian(J, J);
    for (std::size_t j = 0; j < J; ++j) {
      for (std::size_t k = j; k < J; ++k) {
        double h = 0.0;
        for (std::size_t i = 0; i < m; ++i) h += rows[j][i] * rows[k][i] * p[i];
        h -= xp[j] * xp[k];
        hessian(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = h;
        hessian(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = h;
      }
    }
    const double reg = 1e-12 * hessian.trace() / static_cast<double>(J);
    hessian.diagonal().array() += reg;

    Eigen::VectorXd gvec(J);
    for (std::size_t j = 0; j < J; ++j) gvec(static_cast<Eigen::Index>(j)) = grad[j];

    std::vector<double> dir(J);
    bool newton_ok = false;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hessian);
    if (ldlt.info() == Eigen::Success) {
      Eigen::VectorXd d = ldlt.solve(-gvec);
      newton_ok = d.allFinite() && gvec.dot(d) < 0.0;
      if (newton_ok)
        for (std::size_t j = 0; j < J; ++j) dir[j] = d(static_cast<Eigen::Index>(j));
    }
    if (!newton_ok) {
      // steepest descent on psi
      for (std::size_t j = 0; j < J; ++j) dir[j] = -grad[j];
    }

    const double psi0 = objective(s, lambda);
    double slope = 0.0;
    for (std::size_t j = 0; j < J; ++j) slope += grad[j] * dir[j];

    double step = 1.0;
    bool accepted = false;
    std::vector<double> lambda_trial(J), s_trial;
    while (step >= kMinLineStep) {
      for (std::size_t j = 0; j < J; ++j)
        lambda_trial[j] = lambda[j] + step * dir[j];
      s_trial = scores_of(lambda_trial);
      const double psi_trial = objective(s_trial, lambda_trial);
      if (std::isfinite(psi_trial) &&
          psi_trial <= psi0 + kArmijoSlope * step * slope) {
        accepted = true;
        break;
      }
      step *= cfg.damping;
    }
    if (!accepted) break;  // no further progress possible

    lambda = lambda_trial;
    s = std::move(s_trial);
    p = detail::dist_from_scores(s);
    ++iterations;
  }

  return finish(best_lambda, best_p, iterations, tentative, false);
}

DualSolution solve_maxent_coherent(const Potential& u, const Pmf& r,
                                   const SolverConfig& cfg) {
  if (u.size() != r.size())
    throw DimensionMismatch("potential and frequency vectors must have equal length");
  ConstraintSystem sys({u.values()}, {mean_value(u, r)});
  return solve_inverse(sys, cfg);
}

double orthogonality_check(const Potential& u, const Pmf& r,
                           const DualSolution& sol) {
  if (u.size() != r.size() || sol.pmf.size() != u.size())
    throw DimensionMismatch("potential, frequencies and solution pmf must agree in length");
  return mean_value(u, r) - mean_value(u, sol.pmf);
}

double dual_objective(const ConstraintSystem& sys,
                      const std::vector<double>& lambda) {
  if (lambda.size() != sys.num_constraints())
    throw DimensionMismatch("lambda must have one entry per constraint");
  for (double l : lambda) {
    if (!std::isfinite(l)) throw InvalidInput("lambda entries must be finite");
  }
  std::vector<double> s(sys.num_outcomes(), 0.0);
  for (std::size_t j = 0; j < lambda.size(); ++j)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += lambda[j] * sys.rows()[j][i];
  return detail::log_sum_exp_neg(s) + detail::dot(lambda, sys.target());
}

std::vector<double> dual_gradient(const ConstraintSystem& sys,
                                  const std::vector<double>& lambda) {
  if (lambda.size() != sys.num_constraints())
    throw DimensionMismatch("lambda must have one entry per constraint");
  for (double l : lambda) {
    if (!std::isfinite(l)) throw InvalidInput("lambda entries must be finite");
  }
  std::vector<double> s(sys.num_outcomes(), 0.0);
  for (std::size_t j = 0; j < lambda.size(); ++j)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += lambda[j] * sys.rows()[j][i];
  const std::vector<double> p = detail::dist_from_scores(s);
  std::vector<double> grad(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j)
    grad[j] = sys.target()[j] - detail::dot(sys.rows()[j], p);
  return grad;
}

}  // namespace maxent
