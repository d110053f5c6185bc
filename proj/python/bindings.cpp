#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zjones/borel.hpp"
#include "zjones/chord.hpp"
#include "zjones/commands.hpp"
#include "zjones/error.hpp"
#include "zjones/lorentz.hpp"
#include "zjones/torus.hpp"

namespace py = pybind11;
using namespace zj;

namespace {

std::string series_json(const std::string& knot, int order, const std::string& colour, bool normalized) {
  MPoly c = colour == "s" ? colour_s() : MPoly::constant(colour_s().ring(), parse_rational(colour));
  JonesSeries j = jones_series(KnotSpec::parse(knot), order, c);
  if (normalized) j = normalize_by_unknot(j, c);
  return to_json(j.series).dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"zjones"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_zjones, m) {
  m.doc() = "Colour power series of knots, Borel resummation and diagnostics";

  py::register_exception<Error>(m, "ZJonesError", PyExc_ValueError);

  m.def("series_json", &series_json, py::arg("knot"), py::arg("order"), py::arg("colour") = "s",
        py::arg("normalized") = false);
  m.def("cv_weight", [](const std::string& d) { return cv_weight(ChordDiagram::parse(d)).str(); }, py::arg("diagram"));
  m.def("weight_character", [](const std::string& d) { return weight_character(ChordDiagram::parse(d)).str(); },
        py::arg("diagram"));
  m.def("canonical", [](const std::string& d) { return ChordDiagram::parse(d).str(); }, py::arg("diagram"));
  m.def("kashaev_closed", [](int mm, int p, long n, std::complex<double> h) { return kashaev_closed(TorusParams(mm, p), n, h); },
        py::arg("m"), py::arg("p"), py::arg("n"), py::arg("h"));
  m.def("kashaev_quadrature",
        [](int mm, int p, std::complex<double> s0, std::complex<double> h) {
          return kashaev_quadrature(TorusParams(mm, p), s0, h).value;
        },
        py::arg("m"), py::arg("p"), py::arg("s0"), py::arg("h"));
  m.def("resum_json",
        [](int mm, int p, std::complex<double> s0, std::complex<double> h, double theta, double tol) {
          ResumConfig cfg;
          cfg.theta = theta;
          cfg.tol = tol;
          return resum(TorusParams(mm, p), s0, h, cfg).to_json().dump();
        },
        py::arg("m"), py::arg("p"), py::arg("s0"), py::arg("h"), py::arg("theta") = 0.0, py::arg("tol") = 1e-9);
  m.def("gevrey_json",
        [](const std::string& knot, const std::string& s0, int order) {
          Rational q = parse_rational(s0);
          HSeries f = jones_series(KnotSpec::parse(knot), order, MPoly::constant(colour_s().ring(), q)).series;
          return gevrey_diagnose(coefficients_at(f, q)).to_json().dump();
        },
        py::arg("knot"), py::arg("s0") = "1/2", py::arg("order") = 40);
  m.def("rep_to_color", [](const std::string& label) { return rep_to_color(RepLabel::parse(label)).values; },
        py::arg("label"));
  m.def("cli", &cli, py::arg("args"));
}
