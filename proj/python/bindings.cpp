#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gammacop/copulas.hpp"
#include "gammacop/densities.hpp"
#include "gammacop/dependence.hpp"
#include "gammacop/divisibility.hpp"
#include "gammacop/errors.hpp"
#include "gammacop/model_io.hpp"
#include "gammacop/sampling.hpp"
#include "gammacop/validation.hpp"

namespace py = pybind11;
using namespace gammacop;

namespace {

std::vector<double> draws(const CopulaModel& c, long n, std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed, stream);
  const int d = c.dim();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) * d);
  for (long i = 0; i < n; ++i) {
    if (d == 2) {
      const auto v = sample_copula(c, rng);
      out.insert(out.end(), v.begin(), v.end());
    } else {
      const auto v = sample_copula_rosenblatt(c, rng);
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multivariate gamma laws of affine type and their Laplace copulas.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ExistenceError>(m, "ExistenceError", domain.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<AffineModel>(m, "Model")
      .def_static("from_json", &parse_model_json, py::arg("text"))
      .def_static("load", &parse_model_file, py::arg("path"))
      .def("to_json", [](const AffineModel& a) { return model_to_json(a); })
      .def_property_readonly("n", &AffineModel::dim)
      .def_property_readonly("coeffs", [](const AffineModel& a) { return a.poly.coeffs(); })
      .def_property_readonly("lam", [](const AffineModel& a) { return a.shapes.lambda; })
      .def_property_readonly("lambdas", [](const AffineModel& a) { return a.shapes.lambdas; })
      .def("__repr__", [](const AffineModel& a) { return "Model(" + model_to_json(a, -1) + ")"; });

  m.def(
      "check",
      [](const AffineModel& a, double tol) {
        const DivisibilityReport r = check_infinite_divisibility(a.poly, tol);
        py::dict bt;
        for (const auto& [s, v] : r.btilde) bt[py::str(s.label())] = v;
        py::dict d;
        d["divisible"] = r.divisible;
        d["singleton_ok"] = r.singleton_ok;
        d["btilde_ok"] = r.btilde_ok;
        d["btilde"] = bt;
        return d;
      },
      py::arg("model"), py::arg("tol") = 1e-12);

  m.def(
      "logpdf", [](const AffineModel& a, std::vector<double> x) { return evaluate_density(a, x).logpdf; },
      py::arg("model"), py::arg("x"));

  py::class_<CopulaModel>(m, "Copula")
      .def(py::init([](const AffineModel& a, bool force) {
             CopulaBuildOptions o;
             o.force = force;
             return CopulaModel::build(a, o);
           }),
           py::arg("model"), py::arg("force") = false)
      .def_property_readonly("n", &CopulaModel::dim)
      .def("cdf", [](const CopulaModel& c, std::vector<double> v) { return copula_cdf(c, v); }, py::arg("v"))
      .def("pdf", [](const CopulaModel& c, std::vector<double> v) { return copula_pdf(c, v); }, py::arg("v"))
      .def("conditional", &conditional_cdf, py::arg("v1"), py::arg("v2"))
      .def("sample",
           [](const CopulaModel& c, long n, std::uint64_t seed, std::uint64_t stream) {
             const auto flat = draws(c, n, seed, stream);
             std::vector<std::vector<double>> rows(n);
             for (long i = 0; i < n; ++i) rows[i].assign(flat.begin() + i * c.dim(), flat.begin() + (i + 1) * c.dim());
             return rows;
           },
           py::arg("n"), py::arg("seed") = 0, py::arg("stream") = 0);

  m.def(
      "kendall_tau", [](double r, double lam, double l1, double l2) { return kendall_tau_closed(r, lam, l1, l2).value; },
      py::arg("r12"), py::arg("lam"), py::arg("l1"), py::arg("l2"));
  m.def(
      "spearman_rho", [](double r, double lam, double l1, double l2) { return spearman_rho_closed(r, lam, l1, l2).value; },
      py::arg("r12"), py::arg("lam"), py::arg("l1"), py::arg("l2"));

  m.def(
      "validate",
      [](const AffineModel& a, bool full) {
        ValidationOptions o;
        o.full = full;
        const ValidationReport r = run_full_validation(a, o);
        py::list checks;
        for (const auto& e : r.checks) {
          py::dict d;
          d["name"] = e.name;
          d["pass"] = e.pass;
          d["skipped"] = e.skipped;
          d["computed"] = e.computed;
          d["target"] = e.target;
          d["note"] = e.note;
          checks.append(d);
        }
        return py::make_tuple(r.overall, checks);
      },
      py::arg("model"), py::arg("full") = false);
}
