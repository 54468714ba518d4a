// Python bindings exposing the main operations of the library.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinchain/degeneracy.hpp"
#include "spinchain/entanglement.hpp"
#include "spinchain/free_fermion.hpp"
#include "spinchain/hciz.hpp"
#include "spinchain/spectra.hpp"
#include "spinchain/unfolding.hpp"

namespace py = pybind11;
using namespace spinchain;

namespace {

EnsembleSpec make_spec(const std::string& family, int n, std::uint64_t seed,
                       bool heis_site_dependent) {
  EnsembleSpec spec;
  spec.family = family_from_string(family);
  spec.n = n;
  spec.seed = seed;
  spec.heis_site_dependent = heis_site_dependent;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral and eigenstate statistics of random nearest-neighbour qubit chains";

  py::class_<PauliString>(m, "PauliString")
      .def_static("identity", &PauliString::identity, py::arg("n"))
      .def_static("single_site", &PauliString::single_site, py::arg("site"), py::arg("label"),
                  py::arg("n"))
      .def_static("from_labels", &PauliString::from_labels, py::arg("labels"),
                  py::arg("phase_quarter") = 0)
      .def_property_readonly("n", &PauliString::n)
      .def("labels", &PauliString::labels)
      .def("phase", &PauliString::phase)
      .def("weight", &PauliString::weight)
      .def("translated", &PauliString::translated)
      .def("to_dense", &PauliString::to_dense, py::arg("budget") = kDenseBudget)
      .def("__mul__", [](const PauliString& p, const PauliString& q) { return mul(p, q); })
      .def("__repr__", &PauliString::to_string);
  m.def("commutes", &commutes);
  m.def("hs_inner", &hs_inner);
  m.def("anticommuting_neighbours", &anticommuting_neighbours);

  py::class_<Term>(m, "Term")
      .def_readonly("op", &Term::op)
      .def_readonly("site", &Term::site)
      .def_readonly("a", &Term::a)
      .def_readonly("b", &Term::b)
      .def_readonly("orbit", &Term::orbit);

  py::class_<SampledHamiltonian>(m, "SampledHamiltonian")
      .def_readonly("terms", &SampledHamiltonian::terms)
      .def_readonly("coefficients", &SampledHamiltonian::coefficients)
      .def_property_readonly("n", &SampledHamiltonian::n)
      .def("dense", &SampledHamiltonian::dense, py::arg("budget") = kDenseBudget)
      .def("normalized_trace_h2", &SampledHamiltonian::normalized_trace_h2)
      .def("scale", &SampledHamiltonian::scale);

  m.def(
      "sample",
      [](const std::string& family, int n, std::uint64_t seed, std::uint64_t index,
         bool heis_site_dependent) {
        return sample(make_spec(family, n, seed, heis_site_dependent), index);
      },
      py::arg("family"), py::arg("n"), py::arg("seed") = 0, py::arg("index") = 0,
      py::arg("heis_site_dependent") = false);
  m.def(
      "expected_trace_h2",
      [](const std::string& family, int n) {
        return expected_trace_h2(make_spec(family, n, 0, false));
      },
      py::arg("family"), py::arg("n"));
  m.def(
      "fixed_hamiltonian",
      [](const std::string& kind, int n, double eps) {
        if (kind == "z-field") return fixed_hamiltonian(FixedKind::ZField, n, eps);
        if (kind == "xy-plus-z") return fixed_hamiltonian(FixedKind::EpsXYPlusZ, n, eps);
        if (kind == "epsj-z") return fixed_hamiltonian(FixedKind::EpsJZ, n, eps);
        throw std::invalid_argument("unknown fixed Hamiltonian kind: " + kind);
      },
      py::arg("kind"), py::arg("n"), py::arg("eps") = 0.0);

  m.def(
      "diagonalize",
      [](const Matrix& h, bool want_vectors) {
        EigenSystem es = diagonalize(h, want_vectors);
        return py::make_tuple(es.values, es.vectors);
      },
      py::arg("h"), py::arg("want_vectors") = false);
  m.def(
      "sampled_eigenvalues",
      [](const std::string& family, int n, std::uint64_t seed, std::uint64_t index) {
        return sampled_eigenvalues(sample(make_spec(family, n, seed, false), index));
      },
      py::arg("family"), py::arg("n"), py::arg("seed") = 0, py::arg("index") = 0);
  m.def("trace_moment", &trace_moment, py::arg("spectrum"), py::arg("m"));
  m.def("gaussian_cdf_error", &gaussian_cdf_error);
  m.def("gue_reference_density", &gue_reference_density);
  m.def("semicircle_density", &semicircle_density);
  m.def(
      "characteristic_fn",
      [](const RealVector& spectrum, const std::vector<double>& grid) {
        CharacteristicCurve c = characteristic_fn(spectrum, grid);
        return c.values;
      },
      py::arg("spectrum"), py::arg("t_grid"));

  m.def("surmise", &surmise, py::arg("beta"), py::arg("s_grid"), py::arg("area") = 1.0,
        py::arg("mean") = 1.0);
  m.def(
      "unfolded_spacings",
      [](const std::vector<RealVector>& spectra, bool drop_zero_spacings) {
        UnfoldingMap map = build_unfolding(spectra);
        std::vector<std::vector<double>> unfolded;
        for (const RealVector& w : spectra) unfolded.push_back(unfold(map, w));
        SpacingSample s = spacing_sample(unfolded, drop_zero_spacings);
        return py::make_tuple(s.spacings, s.zero_count, s.total_count);
      },
      py::arg("spectra"), py::arg("drop_zero_spacings") = false);

  m.def("partial_trace", &partial_trace, py::arg("state"), py::arg("keep"), py::arg("n"));
  m.def("purity", &purity);
  m.def("linear_entropy", &linear_entropy);
  m.def("min_gap", &min_gap);

  m.def(
      "xy_plus_z_closed_form",
      [](int n, double eps) { return xy_plus_z_closed_form(n, eps).values; },
      py::arg("n"), py::arg("eps"));
  m.def("epsj_z_closed_form", &epsj_z_closed_form, py::arg("n"), py::arg("eps"),
        py::arg("max_n") = 26);
  m.def("cyclic_xy_z_spectrum", &cyclic_xy_z_spectrum, py::arg("n"), py::arg("eps"),
        py::arg("max_n") = 26);
  m.def("xy_plus_z_cdf_error", &xy_plus_z_cdf_error, py::arg("n"), py::arg("eps"), py::arg("x"));
  m.def("translation_basis_purity", &translation_basis_purity, py::arg("n"), py::arg("l"),
        py::arg("budget") = 12);

  m.def("hciz_one_point",
        py::overload_cast<const std::vector<double>&>(&hciz::one_point_n2));
  m.def("hciz_two_point",
        py::overload_cast<const std::vector<double>&, double>(&hciz::two_point_n2),
        py::arg("grid"), py::arg("pinned") = 0.0);
  m.def("hciz_joint_density", &hciz::joint_density_n2);
  m.def("hciz_normalization", &hciz::hyperplane_normalization, py::arg("abs_tol") = 2e-4);
}
