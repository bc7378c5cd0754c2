#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramified/entropy.hpp"
#include "ramified/errors.hpp"
#include "ramified/frullani.hpp"
#include "ramified/graph_model.hpp"
#include "ramified/heat_kernel.hpp"
#include "ramified/spectral_zeta.hpp"

namespace py = pybind11;
using namespace ramified;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral zeta, heat trace and entanglement entropy of diamond graphs";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", domain.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  auto precision = py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<QuadratureError>(m, "QuadratureError", precision.ptr());

  py::class_<GraphSpec>(m, "GraphSpec")
      .def_readonly("decimation", &GraphSpec::decimation)
      .def_readonly("hausdorff_dim", &GraphSpec::hausdorff_dim)
      .def_readonly("spectral_dim", &GraphSpec::spectral_dim)
      .def_readonly("walk_dim", &GraphSpec::walk_dim)
      .def_readonly("total_length", &GraphSpec::total_length)
      .def_readonly("embedding_dim", &GraphSpec::embedding_dim)
      .def("__repr__", [](const GraphSpec& g) {
        return "GraphSpec(l=" + std::to_string(g.decimation) + ", d_s=" + std::to_string(g.spectral_dim) + ")";
      });
  m.def("make_graph", &make_graph, py::arg("l"));

  m.def("gamma", py::overload_cast<specfun::Complex>(&specfun::gamma), py::arg("z"));
  m.def("riemann_zeta", py::overload_cast<specfun::Complex>(&specfun::riemann_zeta), py::arg("z"));

  m.def("zeta_closed", [](int l, Complex s) { return zeta_closed(make_graph(l), s); }, py::arg("l"), py::arg("s"));
  m.def("pole", [](int l, int n) { return pole(make_graph(l), n); }, py::arg("l"), py::arg("n"));
  m.def("pole_weight", [](int l, int n) { return pole_weight(make_graph(l), n); }, py::arg("l"), py::arg("n"));
  m.def("zeta_zero", [](int l) { return zeta_zero(make_graph(l)); }, py::arg("l"));
  m.def("spectral_area", [](int l) { return spectral_area(make_graph(l)); }, py::arg("l"));
  m.def("spectral_area_limit", &spectral_area_limit);

  m.def(
      "trace_direct", [](int l, double t) { return trace_direct(make_graph(l), t).value; }, py::arg("l"),
      py::arg("t"));
  m.def(
      "trace_asymptotic",
      [](int l, double t, int n_max) { return trace_asymptotic(make_graph(l), t, n_max).value; }, py::arg("l"),
      py::arg("t"), py::arg("n_max") = kDefaultPoleOrders);
  m.def("theta_segment", [](double t) { return theta_segment(t); }, py::arg("t"));

  m.def(
      "entropy_leading",
      [](int l, double eps, const std::string& convention) {
        if (convention != "paper" && convention != "replica") throw DomainError("convention must be paper or replica");
        return entropy_leading(make_graph(l), eps, convention == "paper" ? Convention::paper : Convention::replica);
      },
      py::arg("l"), py::arg("epsilon"), py::arg("convention") = "paper");
  m.def("entropy_tilde", [](int l) { return entropy_tilde(make_graph(l)); }, py::arg("l"));
  m.def("entropy_tilde_limit", &entropy_tilde_limit);
  m.def(
      "correction_coefficients",
      [](int l, int n) {
        const auto c = correction_coefficients(make_graph(l), n);
        return py::make_tuple(c.pi_c, c.pi_s);
      },
      py::arg("l"), py::arg("n"));
  m.def(
      "effective_action", [](int l, double alpha, double eps) { return effective_action(make_graph(l), alpha, eps); },
      py::arg("l"), py::arg("alpha"), py::arg("epsilon"));
  m.def(
      "effective_action_quadrature",
      [](int l, double alpha, double eps) { return frullani::frullani_oracle(make_graph(l), alpha, eps, 0); },
      py::arg("l"), py::arg("alpha"), py::arg("epsilon"));
}
