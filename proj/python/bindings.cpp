#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lauricella/cli.hpp"
#include "lauricella/decomposition.hpp"
#include "lauricella/errors.hpp"
#include "lauricella/hyper_core.hpp"
#include "lauricella/identities.hpp"
#include "lauricella/lauricella_direct.hpp"
#include "lauricella/pde_green.hpp"

namespace py = pybind11;
using namespace lauricella;

namespace {

Truncation truncation(double rel_tol, int max_degree) {
  Truncation t;
  t.rel_tol = rel_tol;
  t.max_total_degree = max_degree;
  return t;
}

EvalResult eval_fa(double a, const std::vector<double>& b, const std::vector<double>& c, const std::vector<double>& x,
                   const std::string& method, double rel_tol, int max_degree) {
  const LauricellaAParams p{a, b, c};
  const Truncation t = truncation(rel_tol, max_degree);
  if (method == "direct") return fa_direct(p, x, t);
  if (method == "recurrent") return fa_recurrent(p, x, t);
  if (method == "decomposed") return fa_decomposed(p, x, t);
  throw ParameterError("method must be decomposed, direct or recurrent");
}

EvalResult eval_fb(const std::vector<double>& a, const std::vector<double>& b, double c, const std::vector<double>& x,
                   const std::string& method, double rel_tol, int max_degree) {
  const LauricellaBParams p{a, b, c};
  const Truncation t = truncation(rel_tol, max_degree);
  if (method == "direct") return fb_direct(p, x, t);
  if (method == "recurrent") return fb_recurrent(p, x, t);
  if (method == "decomposed") return fb_decomposed(p, x, t);
  throw ParameterError("method must be decomposed, direct or recurrent");
}

py::dict report_dict(const IdentityReport& r) {
  py::dict d;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["rel_err"] = r.rel_err;
  d["converged"] = r.converged;
  d["error_estimate"] = r.error_estimate;
  if (!r.z_values.empty()) {
    d["z"] = r.z_values;
    d["errors"] = r.errors;
    d["monotone"] = r.monotone;
  }
  return d;
}

PDEConfig pde_config(int m, int n, const std::vector<double>& alpha, double radius) {
  PDEConfig cfg{m, n, alpha, radius};
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_lauricella, mod) {
  mod.doc() = "Lauricella F_A / F_B evaluation, summation and limit identities, Holmgren problem";

  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<ParameterError>(mod, "ParameterError", PyExc_ValueError);
  py::register_exception<SingularityError>(mod, "SingularityError", PyExc_ZeroDivisionError);
  py::register_exception<QuadratureError>(mod, "QuadratureError", PyExc_RuntimeError);
  py::register_exception<NonConvergenceError>(mod, "NonConvergenceError", PyExc_RuntimeError);

  py::class_<EvalResult>(mod, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("tail_estimate", &EvalResult::tail_estimate)
      .def_readonly("terms_used", &EvalResult::terms_used)
      .def_readonly("converged", &EvalResult::converged)
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + cli::format_real(r.value) + ", converged=" + (r.converged ? "True" : "False") + ")";
      });

  const Truncation defaults;
  mod.def(
      "gauss_2f1",
      [](double a, double b, double c, double x, double rel_tol) {
        return gauss_2f1({a, b, c}, x, truncation(rel_tol, Truncation{}.max_total_degree));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("rel_tol") = defaults.rel_tol);
  mod.def("fa", &eval_fa, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("method") = "decomposed",
          py::arg("rel_tol") = defaults.rel_tol, py::arg("max_degree") = defaults.max_total_degree);
  mod.def("fb", &eval_fb, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("method") = "decomposed",
          py::arg("rel_tol") = defaults.rel_tol, py::arg("max_degree") = defaults.max_total_degree);

  mod.def(
      "summation_fa", [](double a, const std::vector<double>& b, int max_degree) {
        return report_dict(lemma2_fa(a, b, truncation(Truncation{}.rel_tol, max_degree)));
      },
      py::arg("a"), py::arg("b"), py::arg("max_degree") = 60);
  mod.def(
      "summation_fb", [](double a, const std::vector<double>& b, int max_degree) {
        return report_dict(lemma2_fb(a, b, truncation(Truncation{}.rel_tol, max_degree)));
      },
      py::arg("a"), py::arg("b"), py::arg("max_degree") = 60);
  mod.def(
      "limit_fa",
      [](double a, const std::vector<double>& b, const std::vector<double>& c, std::vector<double> z) {
        return report_dict(lemma3_fa({a, b, c}, z.empty() ? default_lemma3_z() : z));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z") = std::vector<double>{});
  mod.def(
      "limit_fb",
      [](const std::vector<double>& a, const std::vector<double>& b, double c, std::vector<double> z) {
        return report_dict(lemma3_fb({a, b, c}, z.empty() ? default_lemma3_z() : z));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z") = std::vector<double>{});

  mod.def(
      "fundamental_solution",
      [](const Point& x, const Point& xi, int m, int n, const std::vector<double>& alpha, double radius) {
        return fundamental_solution(pde_config(m, n, alpha, radius), x, xi);
      },
      py::arg("x"), py::arg("xi"), py::arg("m"), py::arg("n"), py::arg("alpha"), py::arg("radius") = 1.0);
  mod.def(
      "green_function",
      [](const Point& x, const Point& xi, int m, int n, const std::vector<double>& alpha, double radius) {
        return green_function(pde_config(m, n, alpha, radius), x, xi);
      },
      py::arg("x"), py::arg("xi"), py::arg("m"), py::arg("n"), py::arg("alpha"), py::arg("radius") = 1.0);
  mod.def(
      "solve_exact_case",
      [](const std::string& name, const Point& xi, int m, int n, const std::vector<double>& alpha, double radius,
         int panels) {
        const PDEConfig cfg = pde_config(m, n, alpha, radius);
        const ExactCase ec = exact_case(cfg, name);
        GridSpec spec;
        spec.panels = panels;
        const double u = holmgren_solve(cfg, ec.data, make_grid(cfg, spec), xi);
        return py::make_tuple(u, ec.exact(xi));
      },
      py::arg("case"), py::arg("xi"), py::arg("m"), py::arg("n"), py::arg("alpha"), py::arg("radius") = 1.0,
      py::arg("panels") = GridSpec{}.panels, "Holmgren solution and the exact value at xi, as (u, exact).");

  mod.def(
      "run",
      [](const std::string& line, std::uint64_t seed) {
        cli::Options opts;
        opts.seed = seed;
        const cli::Report r = cli::run(cli::parse_command(line), opts);
        return py::make_tuple(r.exit_code, cli::to_json(r));
      },
      py::arg("line"), py::arg("seed") = 0, "Run one command line through the CLI verbs; returns (exit_code, json).");
}
