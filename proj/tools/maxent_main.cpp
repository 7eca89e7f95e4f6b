#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxent/core.hpp"
#include "maxent/maxprob.hpp"
#include "maxent/oracle.hpp"
#include "maxent/problem_io.hpp"
#include "maxent/solver.hpp"

namespace {

using nlohmann::json;

constexpr double kLn2 = 0.69314718055994530942;

struct OutputOptions {
  std::string format = "json";
  bool bits = false;
};

struct ConfigFlags {
  double tol = 0.0;
  int max_iter = 0;
  bool tol_set = false;
  bool max_iter_set = false;

  void apply(maxent::SolverConfig& cfg) const {
    if (tol_set) cfg.tol_residual = tol;
    if (max_iter_set) cfg.max_iter = max_iter;
  }
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_flag("--bits", out.bits,
                "Display entropies in bits instead of nats (display only)");
}

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--tol", flags.tol, "Residual tolerance (max-norm)")
      ->each([&](const std::string&) { flags.tol_set = true; });
  cmd->add_option("--max-iter", flags.max_iter, "Iteration limit")
      ->each([&](const std::string&) { flags.max_iter_set = true; });
}

json config_json(const maxent::SolverConfig& cfg) {
  return json{{"tol_residual", cfg.tol_residual},
              {"max_iter", cfg.max_iter},
              {"lambda_blowup", cfg.lambda_blowup},
              {"damping", cfg.damping}};
}

void put_entropy(json& report, const std::string& key, double nats,
                 const OutputOptions& out) {
  report[key] = out.bits ? nats / kLn2 : nats;
  report["entropy_units"] = out.bits ? "bits" : "nats";
}

void emit(const json& report, const OutputOptions& out) {
  std::cout << maxent::io::render_report(report,
                                         maxent::io::parse_format(out.format));
}

int exit_code_for(const maxent::DualSolution& sol) {
  switch (sol.status) {
    case maxent::SolveStatus::converged:
      return 0;
    case maxent::SolveStatus::infeasible_target:
      return 2;
    case maxent::SolveStatus::max_iter_exceeded:
      return 3;
  }
  return 3;
}

int cmd_solve_scalar(const std::string& path, const ConfigFlags& flags,
                     const OutputOptions& out, bool maxent_route) {
  maxent::io::ProblemFile file = maxent::io::load_problem(path);
  if (file.shape != maxent::io::ProblemFile::Shape::scalar)
    throw maxent::InvalidInput(
        "this command needs a scalar problem file: {potential, frequencies}");
  flags.apply(file.config);

  const maxent::Potential u = file.potential_obj();
  const maxent::Pmf r = file.frequencies_obj();
  const maxent::DualSolution sol =
      maxent_route ? maxent::solve_maxent_coherent(u, r, file.config)
                   : maxent::solve_ml_scalar(u, r, file.config);

  json report{{"task", maxent_route ? "solve-maxent" : "solve-ml"},
              {"potential", file.potential},
              {"frequencies", file.frequencies},
              {"config", config_json(file.config)},
              {"lambda", sol.lambda},
              {"pmf", sol.pmf.probs()},
              {"coherence_residual", sol.residual_inf},
              {"iterations", sol.iterations},
              {"converged", sol.converged()},
              {"status", maxent::to_string(sol.status)},
              {"degenerate", sol.degenerate}};
  if (maxent_route)
    put_entropy(report, "shannon_entropy", maxent::shannon_entropy(sol.pmf), out);
  else
    report["log_likelihood"] = maxent::log_likelihood(r, sol.pmf);
  emit(report, out);
  return exit_code_for(sol);
}

int cmd_solve_inverse(const std::string& path, const ConfigFlags& flags,
                      const OutputOptions& out) {
  maxent::io::ProblemFile file = maxent::io::load_problem(path);
  if (file.shape != maxent::io::ProblemFile::Shape::matrix)
    throw maxent::InvalidInput(
        "this command needs a matrix problem file: {X, y}");
  flags.apply(file.config);

  const maxent::ConstraintSystem sys = file.system();
  const maxent::DualSolution sol = maxent::solve_inverse(sys, file.config);

  json report{{"task", "solve-inverse"},
              {"X", file.matrix},
              {"y", file.target},
              {"config", config_json(file.config)},
              {"lambda", sol.lambda},
              {"pmf", sol.pmf.probs()},
              {"residual_inf", sol.residual_inf},
              {"iterations", sol.iterations},
              {"converged", sol.converged()},
              {"status", maxent::to_string(sol.status)},
              {"degenerate", sol.degenerate}};
  put_entropy(report, "shannon_entropy", maxent::shannon_entropy(sol.pmf), out);
  emit(report, out);
  return exit_code_for(sol);
}

int cmd_maxprob(std::int64_t n, const std::vector<double>& uv, double c,
                double delta, bool delta_set, std::int64_t cap,
                const ConfigFlags& flags, const OutputOptions& out) {
  const maxent::Potential u(uv);
  if (!delta_set) delta = maxent::default_coherence_window(u, n);
  const maxent::TypeClass type =
      maxent::most_probable_coherent_type(n, u, c, delta, cap);
  const maxent::Pmf type_pmf = type.frequencies();

  maxent::SolverConfig cfg;
  flags.apply(cfg);
  const maxent::DualSolution sol =
      maxent::solve_inverse(maxent::ConstraintSystem({uv}, {c}), cfg);

  json report{{"task", "maxprob"},
              {"N", n},
              {"u", uv},
              {"c", c},
              {"delta", delta},
              {"type_counts", type.counts},
              {"log_multiplicity", type.log_multiplicity},
              {"type_pmf", type_pmf.probs()},
              {"solver_status", maxent::to_string(sol.status)}};
  if (sol.converged()) {
    report["solver_pmf"] = sol.pmf.probs();
    double l1 = 0.0;
    for (std::size_t i = 0; i < type_pmf.size(); ++i)
      l1 += std::abs(type_pmf[i] - sol.pmf[i]);
    report["l1_distance"] = l1;
  }
  emit(report, out);
  return sol.converged() ? 0 : exit_code_for(sol);
}

json check_entry(const std::string& name, double value, double bound) {
  return json{{"name", name},
              {"value", value},
              {"bound", bound},
              {"pass", std::abs(value) <= bound}};
}

int cmd_check(const std::string& path, const ConfigFlags& flags,
              const OutputOptions& out) {
  maxent::io::ProblemFile file = maxent::io::load_problem(path);
  flags.apply(file.config);
  const maxent::SolverConfig cfg = file.config;

  json checks = json::array();
  int code = 0;

  if (file.shape == maxent::io::ProblemFile::Shape::scalar) {
    const maxent::Potential u = file.potential_obj();
    const maxent::Pmf r = file.frequencies_obj();
    const maxent::DualSolution ml = maxent::solve_ml_scalar(u, r, cfg);
    const maxent::DualSolution me = maxent::solve_maxent_coherent(u, r, cfg);
    if (!ml.converged() || !me.converged())
      return ml.status == maxent::SolveStatus::infeasible_target ||
                     me.status == maxent::SolveStatus::infeasible_target
                 ? 2
                 : 3;

    double pmf_gap = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
      pmf_gap = std::max(pmf_gap, std::abs(ml.pmf[i] - me.pmf[i]));
    checks.push_back(check_entry("complementarity_pmf_linf", pmf_gap, 1e-8));
    checks.push_back(check_entry("complementarity_lambda",
                                 ml.lambda[0] - me.lambda[0], 1e-8));
    checks.push_back(check_entry("orthogonality",
                                 maxent::orthogonality_check(u, r, ml),
                                 cfg.tol_residual));

    const double grid_lambda = maxent::oracle::grid_ml(
        u, r, ml.lambda[0] - 2.0, ml.lambda[0] + 2.0, 1e-3);
    checks.push_back(check_entry("ml_grid_scan_gap",
                                 grid_lambda - ml.lambda[0], 1e-3 + 1e-12));

    if (u.size() <= 3 && u.size() >= 2) {
      const maxent::oracle::SimplexGrid grid(static_cast<int>(u.size()), 0.002);
      const maxent::Pmf gp =
          maxent::oracle::grid_maxent(u, maxent::mean_value(u, r), grid);
      double l1 = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i)
        l1 += std::abs(gp[i] - me.pmf[i]);
      checks.push_back(check_entry("maxent_grid_l1", l1, 0.01));
    }

    const double identity_gap = maxent::shannon_entropy(maxent::dist(u)) -
                                maxent::entropy_of_potential(u) -
                                maxent::log_partition(u);
    checks.push_back(check_entry("entropy_identity", identity_gap, 1e-10));
  } else {
    const maxent::ConstraintSystem sys = file.system();
    const maxent::DualSolution sol = maxent::solve_inverse(sys, cfg);
    if (!sol.converged())
      return sol.status == maxent::SolveStatus::infeasible_target ? 2 : 3;
    checks.push_back(
        check_entry("residual_inf", sol.residual_inf, cfg.tol_residual));

    // finite-difference probe of the dual gradient at seeded points
    std::mt19937 rng(20240211);
    std::uniform_real_distribution<double> pick(-2.0, 2.0);
    const std::size_t J = sys.num_constraints();
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      std::vector<double> lambda(J);
      for (double& l : lambda) l = pick(rng);
      const std::vector<double> grad = maxent::dual_gradient(sys, lambda);
      double gnorm = 0.0;
      for (double g : grad) gnorm = std::max(gnorm, std::abs(g));
      for (std::size_t j = 0; j < J; ++j) {
        const double h = 1e-5 * std::max(1.0, std::abs(lambda[j]));
        std::vector<double> hi = lambda, lo = lambda;
        hi[j] += h;
        lo[j] -= h;
        const double fd = (maxent::dual_objective(sys, hi) -
                           maxent::dual_objective(sys, lo)) /
                          (2.0 * h);
        worst = std::max(worst, std::abs(fd - grad[j]) / std::max(gnorm, 1e-12));
      }
    }
    checks.push_back(check_entry("dual_gradient_fd_rel", worst, 1e-6));
  }

  bool ok = true;
  for (const auto& entry : checks) ok = ok && entry.at("pass").get<bool>();
  json report{{"task", "check"}, {"checks", checks}, {"ok", ok}};
  emit(report, out);
  if (!ok && code == 0) code = 3;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Maximum-entropy solutions of ill-posed linear inverse problems y = Xp "
      "on the probability simplex, via the exponential-family dual."};
  app.require_subcommand(1);

  std::string path;
  OutputOptions out;
  ConfigFlags flags;

  auto* solve_ml = app.add_subcommand(
      "solve-ml", "Most likely distribution within the family dist(lambda*u)");
  solve_ml->add_option("file", path, "Problem file path, or - for stdin")
      ->required();
  add_config_flags(solve_ml, flags);
  add_output_flags(solve_ml, out);

  auto* solve_maxent = app.add_subcommand(
      "solve-maxent",
      "Most entropic distribution coherent with the frequencies on u");
  solve_maxent->add_option("file", path, "Problem file path, or - for stdin")
      ->required();
  add_config_flags(solve_maxent, flags);
  add_output_flags(solve_maxent, out);

  auto* solve_inverse = app.add_subcommand(
      "solve-inverse", "Maximum-entropy solution of the inverse problem y = Xp");
  solve_inverse->add_option("file", path, "Problem file path, or - for stdin")
      ->required();
  add_config_flags(solve_inverse, flags);
  add_output_flags(solve_inverse, out);

  std::int64_t n = 0;
  std::vector<double> uv;
  double c = 0.0;
  double delta = 0.0;
  std::int64_t cap = maxent::kDefaultEnumerationCap;
  auto* maxprob = app.add_subcommand(
      "maxprob",
      "Most probable type class of size N coherent with mean c on u");
  maxprob->add_option("-N,--size", n, "Sample size N")->required();
  maxprob
      ->add_option("-u,--potential", uv,
                   "Potential entries, comma separated (e.g. 0,1,2)")
      ->required()
      ->delimiter(',');
  maxprob->add_option("-c,--mean", c, "Target mean value of u")->required();
  auto* delta_opt = maxprob->add_option(
      "-d,--delta", delta,
      "Coherence window half-width (default: (max u - min u)/(2N))");
  maxprob->add_option("--cap", cap, "Enumeration cap on the number of types");
  add_config_flags(maxprob, flags);
  add_output_flags(maxprob, out);

  auto* check = app.add_subcommand(
      "check", "Solver-vs-oracle agreement suite for a problem file");
  check->add_option("file", path, "Problem file path, or - for stdin")
      ->required();
  add_config_flags(check, flags);
  add_output_flags(check, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (solve_ml->parsed()) return cmd_solve_scalar(path, flags, out, false);
    if (solve_maxent->parsed()) return cmd_solve_scalar(path, flags, out, true);
    if (solve_inverse->parsed()) return cmd_solve_inverse(path, flags, out);
    if (maxprob->parsed())
      return cmd_maxprob(n, uv, c, delta, delta_opt->count() > 0, cap, flags,
                         out);
    if (check->parsed()) return cmd_check(path, flags, out);
  } catch (const maxent::NoCoherentType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const maxent::NoFeasiblePoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const maxent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
