#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "basel/combinatorics.hpp"
#include "basel/identities.hpp"
#include "basel/quadrature.hpp"
#include "basel/report.hpp"
#include "basel/series.hpp"
#include "basel/specfun.hpp"

namespace py = pybind11;

namespace {

basel::Tolerance make_tol(double abs_tol, double rel_tol, std::size_t max_work) {
  return basel::Tolerance(abs_tol, rel_tol, max_work);
}

basel::EndpointBehavior endpoint(const std::string& name) {
  if (name == "regular") return basel::EndpointBehavior::regular;
  if (name == "log") return basel::EndpointBehavior::log_singular;
  if (name == "inverse_sqrt") return basel::EndpointBehavior::inverse_sqrt_singular;
  throw std::invalid_argument("endpoint must be regular, log or inverse_sqrt");
}

py::dict outcome_dict(const basel::VerificationOutcome& o) {
  py::dict params;
  for (const auto& p : o.params) params[py::str(p.name)] = p.value;
  py::dict d;
  d["id"] = o.id;
  d["params"] = params;
  d["lhs"] = o.lhs;
  d["rhs"] = o.rhs;
  d["abs_error"] = o.abs_error;
  d["rel_error"] = o.rel_error;
  d["pass"] = o.pass;
  d["reason"] = o.reason;
  d["evals"] = o.work.evals;
  d["terms"] = o.work.terms;
  return d;
}

py::tuple quadrature_tuple(const basel::QuadratureResult& r) {
  return py::make_tuple(r.value, r.error_estimate, r.evaluations, r.converged);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical verification of Basel-problem identities";
  m.attr("__version__") = std::string(basel::kToolVersion);

  py::register_exception<basel::PoleError>(m, "PoleError", PyExc_ValueError);
  py::register_exception<basel::NotConverged>(m, "NotConverged", PyExc_RuntimeError);

  m.def(
      "polylog",
      [](int p, std::complex<double> z, double abs_tol, double rel_tol) {
        return basel::polylog_complex(p, z, basel::Tolerance(abs_tol, rel_tol));
      },
      py::arg("p"), py::arg("z"), py::arg("abs_tol") = 1e-14, py::arg("rel_tol") = 1e-14);
  m.def(
      "polylog_real",
      [](int p, double x, double abs_tol, double rel_tol) {
        return basel::polylog_real(p, x, basel::Tolerance(abs_tol, rel_tol));
      },
      py::arg("p"), py::arg("x"), py::arg("abs_tol") = 1e-14, py::arg("rel_tol") = 1e-14);
  m.def("incomplete_beta", &basel::incomplete_beta, py::arg("z"));

  m.def(
      "integrate_unit",
      [](std::function<double(double)> f, const std::string& left,
         const std::string& right, double abs_tol, double rel_tol, std::size_t max_work) {
        // Python callbacks need the GIL, so evaluation stays on this thread.
        return quadrature_tuple(basel::integrate_unit(
            basel::IntegrandSpec::unit(std::move(f), endpoint(left), endpoint(right)),
            make_tol(abs_tol, rel_tol, max_work)));
      },
      py::arg("f"), py::arg("left") = "regular", py::arg("right") = "regular",
      py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-10,
      py::arg("max_work") = basel::Tolerance::kDefaultMaxWork,
      "Returns (value, error_estimate, evaluations, converged).");
  m.def(
      "integrate_semi_infinite",
      [](std::function<double(double)> f, const std::string& left, double abs_tol,
         double rel_tol, std::size_t max_work) {
        return quadrature_tuple(basel::integrate_semi_infinite(
            basel::IntegrandSpec::half_line(std::move(f), endpoint(left)),
            make_tol(abs_tol, rel_tol, max_work)));
      },
      py::arg("f"), py::arg("left") = "regular", py::arg("abs_tol") = 1e-10,
      py::arg("rel_tol") = 1e-10, py::arg("max_work") = basel::Tolerance::kDefaultMaxWork);

  m.def(
      "arctan_power_coeff",
      [](unsigned n, unsigned p) {
        const auto a = basel::arctan_power_coeff(n, p);
        // Python ints are arbitrary precision; go through decimal strings.
        auto to_int = [](const basel::BigInt& v) {
          return py::int_(py::reinterpret_steal<py::object>(
              PyLong_FromString(v.get_str().c_str(), nullptr, 10)));
        };
        return py::make_tuple(to_int(a.numerator()), to_int(a.denominator()));
      },
      py::arg("n"), py::arg("p"), "A(n, p) as a (numerator, denominator) pair.");

  m.def("list_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : basel::register_all()) ids.push_back(c.id);
    return ids;
  });
  m.def(
      "describe",
      [](const std::string& id) {
        const auto* c = basel::lookup(id);
        if (c == nullptr) throw py::key_error(id);
        return py::make_tuple(c->description, c->reference);
      },
      py::arg("id"));

  m.def(
      "verify",
      [](const std::string& id, std::size_t grid, std::optional<double> tol) {
        std::optional<basel::Tolerance> t;
        if (tol) t = basel::Tolerance(*tol, *tol);
        std::vector<basel::VerificationOutcome> out;
        {
          py::gil_scoped_release release;
          out = basel::verify(id, grid, t, 0);
        }
        py::list result;
        for (const auto& o : out) result.append(outcome_dict(o));
        return result;
      },
      py::arg("id"), py::arg("grid") = 5, py::arg("tol") = py::none());
  m.def(
      "verify_all_json",
      [](std::size_t grid, std::optional<double> tol, std::vector<std::string> ids) {
        std::optional<basel::Tolerance> t;
        if (tol) t = basel::Tolerance(*tol, *tol);
        py::gil_scoped_release release;
        return basel::render_report(basel::verify_all(grid, t, 0, ids),
                                    basel::ReportFormat::json);
      },
      py::arg("grid") = 5, py::arg("tol") = py::none(),
      py::arg("ids") = std::vector<std::string>{});

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    }
  });
}
