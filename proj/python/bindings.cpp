// Python bindings for the core operations: kernels, the Stieltjes engine,
// Fourier coefficients and midpoint identities, and the finite series.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <genfourier/finiteseries.hpp>
#include <genfourier/fourier.hpp>
#include <genfourier/funcmodel.hpp>
#include <genfourier/kernels.hpp>
#include <genfourier/stieltjes.hpp>
#include <genfourier/verify.hpp>

namespace py = pybind11;
using namespace genfourier;

namespace {

stieltjes::Side side_1(const std::string& s) {
  if (s == "left") return stieltjes::Side::Left;
  if (s == "right") return stieltjes::Side::Right;
  throw ArgumentError("side must be 'left' or 'right'");
}

fourier::Side side_3(const std::string& s) {
  if (s == "left") return fourier::Side::Left;
  if (s == "right") return fourier::Side::Right;
  if (s == "both") return fourier::Side::Both;
  throw ArgumentError("side must be 'left', 'right' or 'both'");
}

fourier::SumMode mode_of(const std::string& s) {
  if (s == "direct") return fourier::SumMode::Direct;
  if (s == "cesaro") return fourier::SumMode::Cesaro;
  throw ArgumentError("mode must be 'direct' or 'cesaro'");
}

py::dict catalog_dict(const funcmodel::FunctionCatalog& cat) {
  py::dict out;
  for (const auto& [name, fn] : cat.entries()) out[py::str(name)] = fn;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sawtooth-kernel Fourier identities: Riemann-Stieltjes engine, Cesaro "
            "summation, arithmetic-progression kernels, finite Fourier series";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<IntegrabilityError>(m, "IntegrabilityError", PyExc_ArithmeticError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  // ---- kernels ----
  m.def("psi", &kernels::psi, py::arg("u"), "Sawtooth kernel u - floor(u) - 1/2.");
  m.def("psi_partial", &kernels::psi_partial, py::arg("u"), py::arg("l"),
        "Truncated sine expansion of psi with l terms.");
  m.def("psi_cesaro", &kernels::psi_cesaro, py::arg("u"), py::arg("n"),
        "Mean of the first n truncated sums of the psi expansion.");
  m.def("c_rq", &kernels::c_rq, py::arg("r"), py::arg("q"),
        "Constant term of the progression kernel, i/(2q) cot(pi r/q).");
  m.def("c_rq_series", &kernels::c_rq_series, py::arg("r"), py::arg("q"), py::arg("terms"),
        "Direct series for c(r,q), the slow cross-check oracle.");
  m.def("psi_rq_closed", &kernels::psi_rq_closed, py::arg("u"), py::arg("r"), py::arg("q"),
        "Closed form of the progression kernel psi(u, r, q).");
  m.def("psi_rq_series", &kernels::psi_rq_series, py::arg("u"), py::arg("r"), py::arg("q"),
        py::arg("m"), "Symmetric truncation of the defining series for psi(u, r, q).");

  py::class_<kernels::ApKernelClosedForm>(m, "ApKernel",
                                          "Step data of psi(u, r, q) for r < q")
      .def(py::init(&kernels::ApKernelClosedForm::make), py::arg("r"), py::arg("q"))
      .def_readonly("r", &kernels::ApKernelClosedForm::r)
      .def_readonly("q", &kernels::ApKernelClosedForm::q)
      .def_readonly("c", &kernels::ApKernelClosedForm::c)
      .def_readonly("step_values", &kernels::ApKernelClosedForm::step_values)
      .def_readonly("jump_values", &kernels::ApKernelClosedForm::jump_values);

  // ---- function model ----
  py::class_<funcmodel::PiecewiseFn>(m, "PiecewiseFn",
                                     "Piecewise-smooth function with stored one-sided values")
      .def("__call__", &funcmodel::PiecewiseFn::eval, py::arg("x"))
      .def("eval", &funcmodel::PiecewiseFn::eval, py::arg("x"))
      .def("left_limit", &funcmodel::PiecewiseFn::left_limit, py::arg("x"))
      .def("right_limit", &funcmodel::PiecewiseFn::right_limit, py::arg("x"))
      .def("jump_at", &funcmodel::PiecewiseFn::jump_at, py::arg("x"))
      .def("is_step", &funcmodel::PiecewiseFn::is_step)
      .def("is_good", &funcmodel::PiecewiseFn::is_good)
      .def_property_readonly("domain", [](const funcmodel::PiecewiseFn& f) {
        return py::make_tuple(f.domain_lo(), f.domain_hi());
      })
      .def("restricted",
           [](const funcmodel::PiecewiseFn& f, double lo, double hi) {
             return f.restricted(lo, hi);
           },
           py::arg("lo"), py::arg("hi"));

  m.def("builtin_catalog", [] { return catalog_dict(funcmodel::builtin_catalog()); },
        "The named test functions shipped with the library.");
  m.def("parse_catalog", [](const std::string& text) {
          return catalog_dict(funcmodel::parse_catalog_text(text));
        },
        py::arg("text"), "Parse the catalog text format into a name -> function dict.");

  // ---- quadrature / Stieltjes ----
  py::class_<quadrature::QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("abs_tol", &quadrature::QuadratureConfig::abs_tol)
      .def_readwrite("max_subdivisions", &quadrature::QuadratureConfig::max_subdivisions)
      .def_readwrite("rule_order", &quadrature::QuadratureConfig::rule_order);

  py::class_<stieltjes::StieltjesResult>(m, "StieltjesResult")
      .def_readonly("value", &stieltjes::StieltjesResult::value)
      .def_readonly("smooth_part", &stieltjes::StieltjesResult::smooth_part)
      .def_readonly("atom_part", &stieltjes::StieltjesResult::atom_part)
      .def_readonly("est_error", &stieltjes::StieltjesResult::est_error);

  const quadrature::QuadratureConfig default_quad;
  m.def("rs_step_integrator", &stieltjes::rs_step_integrator, py::arg("f"), py::arg("alpha"),
        py::arg("a"), py::arg("b"),
        "Integral of f against a step integrator: the finite jump sum.");
  m.def("rs_smooth", &stieltjes::rs_smooth, py::arg("g"), py::arg("f"), py::arg("a"),
        py::arg("b"), py::arg("cfg") = default_quad,
        "Integral of g against df: quadrature of g f' plus jump terms.");
  m.def("integrate_by_parts", &stieltjes::integrate_by_parts, py::arg("f"), py::arg("alpha"),
        py::arg("a"), py::arg("b"), py::arg("cfg") = default_quad,
        "Integral of alpha against df via integration by parts.");
  m.def("euler_sum_rhs", &stieltjes::euler_sum_rhs, py::arg("f"), py::arg("a"), py::arg("b"),
        py::arg("cfg") = default_quad,
        "Right side of the generalized Euler summation formula.");
  m.def("one_sided_via_stieltjes",
        [](const funcmodel::PiecewiseFn& f, double a, double eps, double delta,
           const std::string& side) {
          return stieltjes::one_sided_via_stieltjes(f, a, eps, delta, side_1(side));
        },
        py::arg("f"), py::arg("a"), py::arg("epsilon"), py::arg("delta"), py::arg("side"),
        "One-sided limit recovered through the unit-step Stieltjes integral.");

  // ---- Fourier ----
  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("c"), py::arg("d"))
      .def_readonly("c", &Interval::c)
      .def_readonly("d", &Interval::d)
      .def_readonly("delta", &Interval::delta);

  py::class_<fourier::FourierCoeffs>(m, "FourierCoeffs")
      .def_readonly("interval", &fourier::FourierCoeffs::interval)
      .def_readonly("order", &fourier::FourierCoeffs::N)
      .def("coeff", &fourier::FourierCoeffs::coeff, py::arg("n"))
      .def_property_readonly("coefficients", [](const fourier::FourierCoeffs& fc) {
        return fc.c;  // index n + order
      });

  py::class_<fourier::MidpointReport>(m, "MidpointReport")
      .def_readonly("lhs", &fourier::MidpointReport::lhs)
      .def_readonly("rhs", &fourier::MidpointReport::rhs)
      .def_readonly("residual", &fourier::MidpointReport::residual)
      .def_readonly("mean_term", &fourier::MidpointReport::mean_term)
      .def_readonly("stieltjes_term", &fourier::MidpointReport::stieltjes_term)
      .def_readonly("boundary_term", &fourier::MidpointReport::boundary_term);

  m.def("exp_coeffs", &fourier::exp_coeffs, py::arg("f"), py::arg("interval"), py::arg("n"),
        py::arg("cfg") = default_quad,
        "Exponential Fourier coefficients c_k for |k| <= n on the interval.");
  m.def("trig_coeffs",
        [](const fourier::FourierCoeffs& fc) {
          auto t = fourier::trig_coeffs(fc);
          return py::make_tuple(t.a, t.b);
        },
        py::arg("coeffs"), "Trigonometric views (a, b) with a[0] = 2 c_0.");
  m.def("partial_sum", &fourier::partial_sum, py::arg("coeffs"), py::arg("x"), py::arg("l"),
        py::arg("include_mean") = true,
        "Partial sum over 1 <= |k| <= l, plus c_0 when include_mean.");
  m.def("cesaro_mean", &fourier::cesaro_mean, py::arg("coeffs"), py::arg("x"), py::arg("n"),
        py::arg("include_mean") = true, "Mean of the first n partial sums (the (c,1) value).");
  m.def("theorem1_left", &fourier::theorem1_left, py::arg("f"), py::arg("interval"),
        py::arg("a"), py::arg("cfg") = default_quad, "Left-limit midpoint identity report.");
  m.def("theorem1_right", &fourier::theorem1_right, py::arg("f"), py::arg("interval"),
        py::arg("a"), py::arg("cfg") = default_quad, "Right-limit midpoint identity report.");
  m.def("theorem1_both", &fourier::theorem1_both, py::arg("f"), py::arg("interval"),
        py::arg("a"), py::arg("cfg") = default_quad, "Two-sided midpoint identity report.");
  m.def("local_series",
        [](const funcmodel::PiecewiseFn& f, double a, double delta, const std::string& side,
           int n, const std::string& mode, const quadrature::QuadratureConfig& cfg) {
          return fourier::local_series(f, a, delta, side_3(side), n, mode_of(mode), cfg);
        },
        py::arg("f"), py::arg("a"), py::arg("delta"), py::arg("side"), py::arg("n"),
        py::arg("mode") = "cesaro", py::arg("cfg") = default_quad,
        "Local Fourier series over a one- or two-sided window at a.");

  // ---- finite series ----
  py::class_<finiteseries::FiniteFourier>(m, "FiniteFourier")
      .def_readonly("q", &finiteseries::FiniteFourier::q)
      .def_readonly("b", &finiteseries::FiniteFourier::b)
      .def_readonly("grid_values", &finiteseries::FiniteFourier::grid_values);

  m.def("finite_coeffs", &finiteseries::finite_coeffs, py::arg("f"), py::arg("q"),
        py::arg("cfg") = default_quad, "Finite Fourier coefficients modulo q.");
  m.def("reconstruct", &finiteseries::reconstruct, py::arg("coeffs"), py::arg("a"),
        "Evaluate the finite series at a/q for an integer 1 <= a <= q.");
  m.def("coefficient_independence_check",
        [](const funcmodel::PiecewiseFn& f, int q, const quadrature::QuadratureConfig& cfg,
           double tol) {
          auto rep = finiteseries::coefficient_independence_check(f, q, cfg, tol);
          return py::make_tuple(rep.pass, rep.max_residual);
        },
        py::arg("f"), py::arg("q"), py::arg("cfg") = default_quad, py::arg("tol") = 1e-10,
        "Reconstruction check for every a = 1..q; returns (pass, max_residual).");
  m.def("finite_coeff_quadrature", &finiteseries::finite_coeff_quadrature, py::arg("f"),
        py::arg("r"), py::arg("q"), py::arg("cfg") = default_quad,
        "Dense-quadrature oracle for one step-kernel coefficient.");

  m.attr("__version__") = "0.1.0";
}
