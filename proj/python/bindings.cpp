#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcarpet/canal_decomposition.hpp"
#include "qcarpet/discrete_chain.hpp"
#include "qcarpet/eigenbasis.hpp"
#include "qcarpet/errors.hpp"
#include "qcarpet/evolution.hpp"
#include "qcarpet/fractional_revival.hpp"

namespace py = pybind11;
using namespace qcarpet;

namespace {

// (nt, nx) array: row = time slice.
py::array_t<double> to_array(const CarpetField& f) {
  py::array_t<double> out({f.nt(), f.nx()});
  auto v = f.values();
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<complex> to_array(const std::vector<complex>& v) {
  py::array_t<complex> out(v.size());
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

TermKind parse_kind(const std::string& s) {
  if (s == "bplus") return TermKind::background_plus;
  if (s == "bminus") return TermKind::background_minus;
  if (s == "interference") return TermKind::interference;
  if (s == "all") return TermKind::all;
  throw InvalidParameter("terms must be bplus, bminus, interference or all");
}

}  // namespace

PYBIND11_MODULE(_qcarpet, m) {
  m.doc() = "Quantum carpets of a Gaussian packet in an infinite well and a tight-binding chain.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto invalid = py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<NonCoprimeError>(m, "NonCoprimeError", invalid.ptr());
  auto numeric = py::register_exception<NumericAccuracyError>(m, "NumericAccuracyError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", numeric.ptr());
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", numeric.ptr());
  py::register_exception<DegenerateStateError>(m, "DegenerateStateError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<WellConfig>(m, "Well")
      .def(py::init(&make_well), py::arg("L") = 1.0)
      .def_readonly("L", &WellConfig::L)
      .def_readonly("T", &WellConfig::T);

  py::class_<GaussianPacket>(m, "Packet")
      .def(py::init(&make_packet), py::arg("well"), py::arg("xbar_over_L"),
           py::arg("sx_over_L"), py::arg("pbar_in_hbar_over_L"))
      .def_readonly("xbar", &GaussianPacket::xbar)
      .def_readonly("sx", &GaussianPacket::sx)
      .def_readonly("pbar", &GaussianPacket::pbar)
      .def_readonly("sp", &GaussianPacket::sp)
      .def_readonly("confinement_ratio", &GaussianPacket::confinement_ratio)
      .def_readonly("leakage_warning", &GaussianPacket::leakage_warning);

  py::class_<ModeExpansion>(m, "Modes")
      .def_property_readonly("nmax", &ModeExpansion::nmax)
      .def_property_readonly("captured_norm", &ModeExpansion::captured_norm)
      .def_property_readonly("coeffs", [](const ModeExpansion& e) { return to_array(e.coeffs()); });

  m.def("coeffs_quadrature", &coeffs_quadrature, py::arg("well"), py::arg("packet"), py::arg("nmax"));
  m.def("coeffs_analytic", &coeffs_analytic, py::arg("well"), py::arg("packet"), py::arg("nmax"));
  m.def("choose_nmax", &choose_nmax, py::arg("well"), py::arg("packet"), py::arg("tail_tol") = 1e-10);

  m.def("wavefunction", [](const WellConfig& w, const ModeExpansion& e, double x_lo, double x_hi,
                           std::size_t nx, double t) {
        return to_array(sample_wavefunction(w, e, Axis(x_lo, x_hi, nx), t).values);
      },
      py::arg("well"), py::arg("modes"), py::arg("x_lo"), py::arg("x_hi"), py::arg("nx"), py::arg("t"));

  m.def("carpet", [](const WellConfig& w, const ModeExpansion& e, std::size_t nx, std::size_t nt,
                     double t_lo, double t_hi) {
        py::gil_scoped_release release;
        CarpetField f = carpet(w, e, SpaceTimeGrid::over_well(w, nx, t_lo, t_hi, nt));
        py::gil_scoped_acquire acquire;
        return to_array(f);
      },
      py::arg("well"), py::arg("modes"), py::arg("nx"), py::arg("nt"), py::arg("t_lo"), py::arg("t_hi"));

  py::class_<RevivalFraction>(m, "Fraction")
      .def(py::init(&make_fraction), py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &RevivalFraction::alpha)
      .def_readonly("beta", &RevivalFraction::beta)
      .def_readonly("q_alpha", &RevivalFraction::q_alpha)
      .def("time_over_T", &RevivalFraction::time_over_T);

  m.def("gauss_sum", &gauss_sum, py::arg("fraction"), py::arg("n"));
  m.def("gauss_phases", [](const RevivalFraction& f) { return gauss_table(f).phases; },
        py::arg("fraction"));

  m.def("fractional_reconstruction",
        [](const WellConfig& w, const GaussianPacket& p, const RevivalFraction& f, std::size_t nx) {
          return to_array(sample_fractional_reconstruction(w, p, f, Axis(0.0, w.L, nx)).values);
        },
        py::arg("well"), py::arg("packet"), py::arg("fraction"), py::arg("nx"));
  m.def("reconstruction_error",
        [](const WellConfig& w, const GaussianPacket& p, const ModeExpansion& e,
           const RevivalFraction& f, std::size_t nx) {
          return reconstruction_error(w, p, e, f, Axis(0.0, w.L, nx));
        },
        py::arg("well"), py::arg("packet"), py::arg("modes"), py::arg("fraction"), py::arg("nx"));
  m.def("count_packets",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> rho, double threshold) {
          return count_packets({rho.data(), static_cast<std::size_t>(rho.size())}, threshold);
        },
        py::arg("density"), py::arg("threshold") = kDefaultPacketThreshold);

  m.def("reconstruct_density", &reconstruct_density, py::arg("well"), py::arg("packet"),
        py::arg("x"), py::arg("t"), py::arg("n_sigma") = kDefaultSigmaCut);
  m.def("term_field",
        [](const WellConfig& w, const GaussianPacket& p, const std::string& terms,
           std::size_t nx, std::size_t nt, double t_lo, double t_hi) {
          return to_array(term_field(w, p, TermSelection::line_family(parse_kind(terms)),
                                     SpaceTimeGrid::over_well(w, nx, t_lo, t_hi, nt)));
        },
        py::arg("well"), py::arg("packet"), py::arg("terms"), py::arg("nx"), py::arg("nt"),
        py::arg("t_lo"), py::arg("t_hi"));

  m.def("map_time", [](int N, const WellConfig& w, double t) { return map_time(make_chain(N), w, t); },
        py::arg("sites"), py::arg("well"), py::arg("t"));
  m.def("discrete_carpet",
        [](int N, const WellConfig& w, const GaussianPacket& p, double tau_max, std::size_t nt) {
          return to_array(discrete_carpet(make_chain(N), w, p, Axis(0.0, tau_max, nt)));
        },
        py::arg("sites"), py::arg("well"), py::arg("packet"), py::arg("tau_max"), py::arg("nt"));
  m.def("revival_scan",
        [](int N, const WellConfig& w, const GaussianPacket& p, double lo, double hi, int samples) {
          const RevivalPeak r = revival_scan(make_chain(N), w, p, lo, hi, samples);
          return py::make_tuple(r.t_peak, r.fidelity_peak);
        },
        py::arg("sites"), py::arg("well"), py::arg("packet"), py::arg("window_lo"),
        py::arg("window_hi"), py::arg("samples"));
}
