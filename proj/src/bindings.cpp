#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "maxent/core.hpp"
#include "maxent/maxprob.hpp"
#include "maxent/oracle.hpp"
#include "maxent/solver.hpp"

namespace py = pybind11;

namespace {

std::string vector_repr(const std::vector<double>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Maximum-entropy solutions of ill-posed linear inverse problems y = Xp "
      "via the exponential-family dual, with brute-force oracles and a "
      "type-class concentration demo.";

  auto base = py::register_exception<maxent::Error>(m, "Error");
  py::register_exception<maxent::InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<maxent::DimensionMismatch>(m, "DimensionMismatch",
                                                    base.ptr());
  py::register_exception<maxent::SupportMismatch>(m, "SupportMismatch",
                                                  base.ptr());
  py::register_exception<maxent::InvalidRange>(m, "InvalidRange", base.ptr());
  py::register_exception<maxent::EnumerationTooLarge>(m, "EnumerationTooLarge",
                                                      base.ptr());
  py::register_exception<maxent::NoCoherentType>(m, "NoCoherentType",
                                                 base.ptr());
  py::register_exception<maxent::NoFeasiblePoint>(m, "NoFeasiblePoint",
                                                  base.ptr());

  py::class_<maxent::Potential>(m, "Potential")
      .def(py::init<std::vector<double>>(), py::arg("values"))
      .def_property_readonly("values", &maxent::Potential::values)
      .def("__len__", &maxent::Potential::size)
      .def("__getitem__",
           [](const maxent::Potential& u, std::size_t i) {
             if (i >= u.size()) throw py::index_error();
             return u[i];
           })
      .def("min", &maxent::Potential::min)
      .def("max", &maxent::Potential::max)
      .def("is_constant", &maxent::Potential::is_constant)
      .def("__repr__", [](const maxent::Potential& u) {
        return "Potential(" + vector_repr(u.values()) + ")";
      });
  py::implicitly_convertible<py::sequence, maxent::Potential>();

  py::class_<maxent::Pmf>(m, "Pmf")
      .def(py::init<std::vector<double>>(), py::arg("probs"))
      .def_property_readonly("probs", &maxent::Pmf::probs)
      .def("__len__", &maxent::Pmf::size)
      .def("__getitem__",
           [](const maxent::Pmf& p, std::size_t i) {
             if (i >= p.size()) throw py::index_error();
             return p[i];
           })
      .def("__repr__", [](const maxent::Pmf& p) {
        return "Pmf(" + vector_repr(p.probs()) + ")";
      });
  py::implicitly_convertible<py::sequence, maxent::Pmf>();

  py::class_<maxent::Sample>(m, "Sample")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("counts"))
      .def_property_readonly("counts", &maxent::Sample::counts)
      .def_property_readonly("total", &maxent::Sample::total)
      .def("frequencies", &maxent::Sample::frequencies)
      .def("__len__", &maxent::Sample::size);

  py::class_<maxent::ConstraintSystem>(m, "ConstraintSystem")
      .def(py::init<std::vector<std::vector<double>>, std::vector<double>>(),
           py::arg("rows"), py::arg("target"))
      .def_property_readonly("rows", &maxent::ConstraintSystem::rows)
      .def_property_readonly("target", &maxent::ConstraintSystem::target)
      .def_property_readonly("num_constraints",
                             &maxent::ConstraintSystem::num_constraints)
      .def_property_readonly("num_outcomes",
                             &maxent::ConstraintSystem::num_outcomes);

  py::class_<maxent::SolverConfig>(m, "SolverConfig")
      .def(py::init([](double tol_residual, int max_iter, double lambda_blowup,
                       double damping) {
             maxent::SolverConfig cfg;
             cfg.tol_residual = tol_residual;
             cfg.max_iter = max_iter;
             cfg.lambda_blowup = lambda_blowup;
             cfg.damping = damping;
             return cfg;
           }),
           py::arg("tol_residual") = 1e-10, py::arg("max_iter") = 200,
           py::arg("lambda_blowup") = 1e8, py::arg("damping") = 0.5)
      .def_readwrite("tol_residual", &maxent::SolverConfig::tol_residual)
      .def_readwrite("max_iter", &maxent::SolverConfig::max_iter)
      .def_readwrite("lambda_blowup", &maxent::SolverConfig::lambda_blowup)
      .def_readwrite("damping", &maxent::SolverConfig::damping);

  py::enum_<maxent::SolveStatus>(m, "SolveStatus")
      .value("converged", maxent::SolveStatus::converged)
      .value("max_iter_exceeded", maxent::SolveStatus::max_iter_exceeded)
      .value("infeasible_target", maxent::SolveStatus::infeasible_target);

  py::class_<maxent::DualSolution>(m, "DualSolution")
      .def_readonly("lambda_", &maxent::DualSolution::lambda)
      .def_readonly("pmf", &maxent::DualSolution::pmf)
      .def_readonly("residual_inf", &maxent::DualSolution::residual_inf)
      .def_readonly("iterations", &maxent::DualSolution::iterations)
      .def_readonly("status", &maxent::DualSolution::status)
      .def_readonly("degenerate", &maxent::DualSolution::degenerate)
      .def_property_readonly("converged", &maxent::DualSolution::converged)
      .def("__repr__", [](const maxent::DualSolution& sol) {
        return "DualSolution(status=" + maxent::to_string(sol.status) +
               ", lambda=" + vector_repr(sol.lambda) +
               ", pmf=" + vector_repr(sol.pmf.probs()) + ")";
      });

  py::class_<maxent::TypeClass>(m, "TypeClass")
      .def_readonly("counts", &maxent::TypeClass::counts)
      .def_readonly("log_multiplicity", &maxent::TypeClass::log_multiplicity)
      .def("total", &maxent::TypeClass::total)
      .def("frequencies", &maxent::TypeClass::frequencies)
      .def("__repr__", [](const maxent::TypeClass& t) {
        std::ostringstream os;
        os << "TypeClass(counts=[";
        for (std::size_t i = 0; i < t.counts.size(); ++i) {
          if (i) os << ", ";
          os << t.counts[i];
        }
        os << "], log_multiplicity=" << t.log_multiplicity << ")";
        return os.str();
      });

  py::class_<maxent::oracle::SimplexGrid>(m, "SimplexGrid")
      .def(py::init<int, double>(), py::arg("m"), py::arg("step") = 0.002)
      .def_readonly("m", &maxent::oracle::SimplexGrid::m)
      .def_readonly("step", &maxent::oracle::SimplexGrid::step);

  m.def("dist", &maxent::dist, py::arg("u"),
        "Distribution induced by a potential: p_i = exp(-u_i)/sum exp(-u_j).");
  m.def("shift", &maxent::shift, py::arg("u"), py::arg("c"),
        "u + C elementwise; dist is unchanged.");
  m.def("scale", &maxent::scale, py::arg("u"), py::arg("k"),
        "k * u elementwise (collinear potential).");
  m.def("mean_value", &maxent::mean_value, py::arg("u"), py::arg("p"));
  m.def("coherence", &maxent::coherence, py::arg("u"), py::arg("p"),
        py::arg("q"), "u.p - u.q; zero means p and q share the mean of u.");
  m.def("entropy_of_potential", &maxent::entropy_of_potential, py::arg("u"),
        "u . dist(u); gauge-dependent.");
  m.def("shannon_entropy", &maxent::shannon_entropy, py::arg("p"),
        "-sum p_i ln p_i in nats.");
  m.def("log_partition", &maxent::log_partition, py::arg("u"),
        "ln sum exp(-u_i).");
  m.def("log_likelihood", &maxent::log_likelihood, py::arg("r"), py::arg("p"),
        "sum_{r_i>0} r_i ln p_i.");

  m.def("solve_ml_scalar", &maxent::solve_ml_scalar, py::arg("u"),
        py::arg("r"), py::arg("cfg") = maxent::SolverConfig{},
        "Most likely distribution within the family dist(lambda*u).");
  m.def("solve_inverse", &maxent::solve_inverse, py::arg("sys"),
        py::arg("cfg") = maxent::SolverConfig{},
        "Maximum-entropy solution of y = Xp via the convex dual.");
  m.def("solve_maxent_coherent", &maxent::solve_maxent_coherent, py::arg("u"),
        py::arg("r"), py::arg("cfg") = maxent::SolverConfig{},
        "Most entropic distribution coherent with r on u.");
  m.def("orthogonality_check", &maxent::orthogonality_check, py::arg("u"),
        py::arg("r"), py::arg("sol"), "u . (r - sol.pmf).");
  m.def("dual_objective", &maxent::dual_objective, py::arg("sys"),
        py::arg("lambda_"));
  m.def("dual_gradient", &maxent::dual_gradient, py::arg("sys"),
        py::arg("lambda_"));

  m.def("composition_count", &maxent::composition_count, py::arg("n"),
        py::arg("m"), py::arg("cap") = maxent::kDefaultEnumerationCap);
  m.def(
      "list_types",
      [](std::int64_t n, int m_, std::int64_t cap) {
        maxent::TypeClassEnumerator en(n, m_, cap);
        std::vector<maxent::TypeClass> out;
        while (auto t = en.next()) out.push_back(std::move(*t));
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("cap") = maxent::kDefaultEnumerationCap,
      "All compositions of N into m parts, lexicographically decreasing.");
  m.def("log_multiplicity", &maxent::log_multiplicity, py::arg("counts"));
  m.def("default_coherence_window", &maxent::default_coherence_window,
        py::arg("u"), py::arg("n"));
  m.def(
      "most_probable_coherent_type",
      [](std::int64_t n, const maxent::Potential& u, double c,
         std::optional<double> delta, std::int64_t cap) {
        return delta ? maxent::most_probable_coherent_type(n, u, c, *delta, cap)
                     : maxent::most_probable_coherent_type(n, u, c, cap);
      },
      py::arg("n"), py::arg("u"), py::arg("c"), py::arg("delta") = py::none(),
      py::arg("cap") = maxent::kDefaultEnumerationCap,
      "Most probable type class inside the coherence window.");

  m.def("grid_maxent", &maxent::oracle::grid_maxent, py::arg("u"), py::arg("c"),
        py::arg("grid"), "Brute-force max-entropy grid point in the window.");
  m.def("grid_ml", &maxent::oracle::grid_ml, py::arg("u"), py::arg("r"),
        py::arg("lo"), py::arg("hi"), py::arg("step"),
        "Brute-force likelihood scan over the multiplier.");

#ifdef MAXENT_VERSION
  m.attr("__version__") = MAXENT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
