#include "klab/closed_forms.hpp"
#include "klab/errors.hpp"
#include "klab/graph.hpp"
#include "klab/invariants.hpp"
#include "klab/report.hpp"
#include "klab/serialize.hpp"
#include "klab/spectral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace klab;

namespace {

py::object to_py(const BigInt& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

Variant variant_of(const std::string& s) { return parse_variant(s); }

py::list spectrum_values(const Spectrum& s) { return py::cast(s.values()); }

} // namespace

PYBIND11_MODULE(_klab, m) {
    m.doc() = "Exact Kirchhoff-index and spectral tools for S_n x K_2 and its edge-deleted variants";

    auto base = py::register_exception<Error>(m, "KlabError");
    py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<NotConnected>(m, "NotConnected", base.ptr());
    py::register_exception<DisconnectedFamily>(m, "DisconnectedFamily", base.ptr());
    py::register_exception<NotMirrorSymmetric>(m, "NotMirrorSymmetric", base.ptr());
    py::register_exception<SingularCubic>(m, "SingularCubic", base.ptr());
    py::register_exception<NotConnectedSpectrum>(m, "NotConnectedSpectrum", base.ptr());
    py::register_exception<Inconsistency>(m, "Inconsistency", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("labels", &Graph::labels)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                   " edges>";
        });

    m.def("snr2", [](int n, const std::set<int>& deleted) { return make_snr2({n, deleted}); }, py::arg("n"),
          py::arg("deleted") = std::set<int>{}, "S_n x K_2 with the listed vertical edges removed (1 = center)");
    m.def("star", &star, py::arg("n"));
    m.def("complete", &complete, py::arg("n"));
    m.def("cartesian_product", &cartesian_product);
    m.def("is_connected", &is_connected);

    m.def("kirchhoff_index", [](const Graph& g) { return to_py(kirchhoff_index(g)); });
    m.def("mult_deg_kirchhoff_index", [](const Graph& g) { return to_py(mult_deg_kirchhoff_index(g)); });
    m.def("spanning_trees", [](const Graph& g) { return to_py(spanning_trees(g)); });
    m.def("wiener_index", &wiener_index);
    m.def("gutman_index", &gutman_index);
    m.def("resistance_matrix", [](const Graph& g) {
        const auto r = resistance_matrix(g);
        py::list rows;
        for (std::size_t i = 0; i < r.order(); ++i) {
            py::list row;
            for (std::size_t j = 0; j < r.order(); ++j) row.append(to_py(r(i, j)));
            rows.append(row);
        }
        return rows;
    });

    m.def("laplacian_spectrum", [](const Graph& g) { return spectrum_values(numeric_spectrum(laplacian(g), 1e-9)); });
    m.def("normalized_laplacian_spectrum",
          [](const Graph& g) { return spectrum_values(numeric_spectrum(normalized_laplacian(g).floating, 1e-9)); });
    m.def("analytic_spectrum_L_sn2", [](int n) { return spectrum_values(analytic_spectrum_L_sn2(n)); });
    m.def("analytic_spectrum_NL_sn2", [](int n) { return spectrum_values(analytic_spectrum_NL_sn2(n)); });
    m.def("analytic_spectrum_L_snr2",
          [](int n, int r, bool center_deleted) { return spectrum_values(analytic_spectrum_L_snr2(n, r, center_deleted)); },
          py::arg("n"), py::arg("r"), py::arg("center_deleted"));
    m.def("spectrum_json", [](int n, const std::set<int>& deleted) {
        const FamilySpec spec{n, deleted};
        spec.validate();
        const Spectrum s = spec.r() == 0 ? analytic_spectrum_L_sn2(n)
                                         : analytic_spectrum_L_snr2(n, spec.r(), spec.center_deleted());
        return spectrum_to_json(s).dump();
    }, py::arg("n"), py::arg("deleted") = std::set<int>{});

    m.def("kf_sn2", [](int n) { return to_py(kf_sn2(n)); });
    m.def("kfstar_sn2", [](int n) { return to_py(kfstar_sn2(n)); });
    m.def("tau_sn2", [](int n) { return to_py(tau_sn2(n)); });
    m.def("wiener_sn2", &wiener_sn2);
    m.def("gutman_sn2", &gutman_sn2);
    m.def("kf_snr2",
          [](int n, int r, bool c, const std::string& v) { return to_py(kf_snr2(n, r, c, variant_of(v)).value); },
          py::arg("n"), py::arg("r"), py::arg("center_deleted"), py::arg("variant") = "proof");
    m.def("tau_snr2",
          [](int n, int r, bool c, const std::string& v) { return to_py(tau_snr2(n, r, c, variant_of(v)).value); },
          py::arg("n"), py::arg("r"), py::arg("center_deleted"), py::arg("variant") = "proof");
    m.def("wiener_snr2",
          [](int n, int r, bool c, const std::string& v) { return to_py(wiener_snr2(n, r, c, variant_of(v)).value); },
          py::arg("n"), py::arg("r"), py::arg("center_deleted"), py::arg("variant") = "proof");

    m.def("report_json",
          [](int n, const std::set<int>& deleted, const std::string& variant, bool exact) {
              ReportOptions o;
              o.variant = variant_of(variant);
              o.exact = exact;
              return to_json(compute_report(FamilySpec{n, deleted}, o)).dump();
          },
          py::arg("n"), py::arg("deleted") = std::set<int>{}, py::arg("variant") = "proof", py::arg("exact") = true);
}
