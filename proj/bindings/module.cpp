// Python bindings: the evaluators and verification scans of the zetacert
// core, exposed as zetacert._core.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "zetacert/bose_kernel.hpp"
#include "zetacert/combinatorics.hpp"
#include "zetacert/errors.hpp"
#include "zetacert/quad.hpp"
#include "zetacert/report.hpp"
#include "zetacert/richardson.hpp"
#include "zetacert/specfun.hpp"
#include "zetacert/verify.hpp"

namespace py = pybind11;

namespace {

py::object big_int_to_py(const zetacert::BigInt& v) {
  const std::string digits = v.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

zetacert::ZetaRoute route_from_name(const std::string& name) {
  if (name == "direct") return zetacert::ZetaRoute::DirectSeries;
  if (name == "odd") return zetacert::ZetaRoute::OddSeries;
  if (name == "alternating") return zetacert::ZetaRoute::AlternatingSeries;
  if (name == "integral") return zetacert::ZetaRoute::IntegralRepresentation;
  throw zetacert::DomainError("unknown zeta route '" + name +
                              "' (expected direct|odd|alternating|integral)");
}

zetacert::GridSpec make_grid(double start, double end, int points, bool log_spacing) {
  return {start, end, points,
          log_spacing ? zetacert::GridSpacing::Logarithmic : zetacert::GridSpacing::Linear};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "special functions and numerical certification of zeta-ratio claims";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const zetacert::DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const zetacert::Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  // special functions
  m.def("gamma", &zetacert::gamma, py::arg("x"),
        "Euler gamma; +inf overflow sentinel, ValueError at the poles");
  m.def("log_gamma", &zetacert::log_gamma, py::arg("x"));
  m.def(
      "zeta",
      [](double x, const std::string& route) {
        return zetacert::zeta(x, route_from_name(route));
      },
      py::arg("x"), py::arg("route") = "alternating",
      "Riemann zeta for x > 1; route is direct|odd|alternating|integral");
  m.def("eta", &zetacert::eta, py::arg("x"), "Dirichlet eta for x > 1");
  m.def("lambda_", &zetacert::lambda, py::arg("x"), "Dirichlet lambda for x > 1");

  // combinatorics
  m.def(
      "stirling2",
      [](int k, int p) { return big_int_to_py(zetacert::stirling2(k, p)); },
      py::arg("k"), py::arg("p"),
      "Stirling number of the second kind S(k,p), exact Python int");
  m.def("falling_factorial", &zetacert::falling_factorial, py::arg("beta"), py::arg("n"));
  m.def(
      "classify_binomial",
      [](double z, double w) {
        return std::string(zetacert::to_string(zetacert::classify_binomial(z, w)));
      },
      py::arg("z"), py::arg("w"),
      "branch name of the extended binomial coefficient at (z, w)");
  m.def("binom", &zetacert::binom, py::arg("z"), py::arg("w"),
        "extended binomial coefficient; +inf on the divergent branch");

  // kernel
  m.def("kernel_base", &zetacert::kernel_base, py::arg("t"), "1/(e^t - 1) for t > 0");
  m.def(
      "general_derivative",
      [](double vartheta, double theta, int k, double t) {
        return zetacert::general_derivative({vartheta, theta, k}, t);
      },
      py::arg("vartheta"), py::arg("theta"), py::arg("k"), py::arg("t"),
      "k-th derivative of 1/(vartheta*e^(theta*t) - 1)");
  m.def("kernel_derivative", &zetacert::kernel_derivative, py::arg("k"), py::arg("t"),
        "signed derivative (-1)^k (d/dt)^k of 1/(e^t - 1); positive on t > 0");
  m.def("kernel_ratio", &zetacert::kernel_ratio, py::arg("k"), py::arg("t"),
        "kernel_derivative(k+1, t) / kernel_derivative(k, t)");
  m.def("nth_derivative",
        [](const std::function<double(double)>& f, int k, double t, double h0) {
          return zetacert::nth_derivative(f, k, t, h0);
        },
        py::arg("f"), py::arg("k"), py::arg("t"), py::arg("h0") = 0.0,
        "Richardson-extrapolated central finite difference, orders 1..5");

  // quadrature
  py::class_<zetacert::QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &zetacert::QuadratureResult::value)
      .def_readonly("error_estimate", &zetacert::QuadratureResult::error_estimate)
      .def_readonly("subdivisions", &zetacert::QuadratureResult::subdivisions)
      .def_readonly("truncation_point", &zetacert::QuadratureResult::truncation_point)
      .def("__repr__", [](const zetacert::QuadratureResult& r) {
        return "QuadratureResult(value=" + std::to_string(r.value) +
               ", error_estimate=" + std::to_string(r.error_estimate) + ")";
      });
  m.def("integrate_bose_moment", &zetacert::integrate_bose_moment, py::arg("s"),
        py::arg("tol"), "integral of t^(s-1)/(e^t-1) over (0, inf)");
  m.def("integrate_kernel_moment", &zetacert::integrate_kernel_moment, py::arg("k"),
        py::arg("s"), py::arg("tol"), "integral of F_k(t) t^s over (0, inf)");

  // verification
  py::class_<zetacert::GridSpec>(m, "GridSpec")
      .def(py::init(&make_grid), py::arg("start"), py::arg("end"), py::arg("points"),
           py::arg("log_spacing") = true)
      .def_readonly("start", &zetacert::GridSpec::start)
      .def_readonly("end", &zetacert::GridSpec::end)
      .def_readonly("points", &zetacert::GridSpec::points)
      .def("abscissae", &zetacert::GridSpec::abscissae);

  py::class_<zetacert::VerificationReport>(m, "VerificationReport")
      .def_readonly("claim_id", &zetacert::VerificationReport::claim_id)
      .def_property_readonly("verdict",
                             [](const zetacert::VerificationReport& r) {
                               return r.passed() ? "pass" : "fail";
                             })
      .def_readonly("worst_margin", &zetacert::VerificationReport::worst_margin)
      .def_readonly("worst_point", &zetacert::VerificationReport::worst_point)
      .def_readonly("samples", &zetacert::VerificationReport::samples)
      .def_readonly("residual_max", &zetacert::VerificationReport::residual_max)
      .def_readonly("parameters", &zetacert::VerificationReport::parameters)
      .def("passed", &zetacert::VerificationReport::passed)
      .def("to_json",
           [](const zetacert::VerificationReport& r) { return to_json(r).dump(); })
      .def("__repr__", [](const zetacert::VerificationReport& r) {
        return zetacert::summary_line(r);
      });

  m.def("theorem1_ratio", &zetacert::theorem1_ratio, py::arg("x"), py::arg("alpha"),
        py::arg("ell"), "binom(x+alpha+ell, alpha) * zeta(x+alpha)/zeta(x)");
  m.def(
      "scan_theorem1_monotone",
      [](double alpha, int ell, const zetacert::GridSpec& grid, double slack) {
        return zetacert::scan_theorem1_monotone(alpha, ell, grid, slack);
      },
      py::arg("alpha"), py::arg("ell"), py::arg("grid") = zetacert::kDefaultXGrid,
      py::arg("slack") = zetacert::kDefaultMonotoneSlack);
  m.def(
      "scan_log_convexity",
      [](int ell, const zetacert::GridSpec& grid, double h, double slack) {
        return zetacert::scan_log_convexity(ell, grid, h, slack);
      },
      py::arg("ell"), py::arg("grid") = zetacert::kDefaultConvexityGrid,
      py::arg("h") = zetacert::kDefaultConvexityStep,
      py::arg("slack") = zetacert::kDefaultConvexitySlack);
  m.def(
      "scan_proposition_ratio",
      [](int k, const zetacert::GridSpec& grid, double slack) {
        return zetacert::scan_proposition_ratio(k, grid, slack);
      },
      py::arg("k"), py::arg("grid") = zetacert::kDefaultTGrid,
      py::arg("slack") = zetacert::kDefaultMonotoneSlack);
  m.def("check_proof_identities", &zetacert::check_proof_identities,
        py::arg("tol") = zetacert::kDefaultIdentityTol);
  m.def("scan_monotonicity_rule", &zetacert::scan_monotonicity_rule,
        py::arg("tol") = zetacert::kDefaultIdentityTol);
  m.def("scan_kernel_positivity", &zetacert::scan_kernel_positivity);

#ifdef ZETACERT_VERSION
  m.attr("__version__") = ZETACERT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
