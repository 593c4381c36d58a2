#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uhg/bounds.hpp"
#include "uhg/charpoly.hpp"
#include "uhg/constructions.hpp"
#include "uhg/elementary.hpp"
#include "uhg/exact.hpp"
#include "uhg/identities.hpp"
#include "uhg/io.hpp"
#include "uhg/spectrum.hpp"
#include "uhg/unified_matrix.hpp"

namespace py = pybind11;
using namespace uhg;

namespace {

py::int_ to_py_int(const BigInt& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list poly_to_list(const Poly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py_int(c));
    return out;
}

py::list labels_to_list(const EdgeIndexSet& idx) {
    py::list out;
    for (const auto& part : idx.parts()) out.append(py::tuple(py::cast(part.ids())));
    return out;
}

PartSizeProfile profile_from(const std::vector<int>& sizes) { return PartSizeProfile{sizes}; }

py::dict closed_form_dict(const ClosedFormSpectrum& cf) {
    py::dict d;
    d["trig"] = cf.trig;
    d["pm_one"] = cf.pm_one;
    d["zero_sqrt2"] = cf.zero_sqrt2;
    d["full"] = cf.full();
    return d;
}

py::dict bound_dict(const BoundReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["status"] = to_string(r.status);
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(uhg, m) {
    m.doc() = "unified-matrix spectra of finite hypergraphs";

    py::register_exception<budget_error>(m, "BudgetError");

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, const std::vector<std::vector<int>>&, int>(), py::arg("n"),
             py::arg("edges"), py::arg("rank_limit") = kDefaultRankLimit)
        .def_property_readonly("n", &Hypergraph::vertex_count)
        .def("edges",
             [](const Hypergraph& h) {
                 py::list out;
                 for (const auto& e : h.edges())
                     out.append(py::make_tuple(py::tuple(py::cast(e.vertices.ids())),
                                               e.multiplicity));
                 return out;
             })
        .def("degree", &Hypergraph::degree, py::arg("v"))
        .def("rank", &Hypergraph::rank)
        .def("is_simple", &Hypergraph::is_simple)
        .def("is_loopless", &Hypergraph::is_loopless)
        .def("is_uniform", &Hypergraph::is_uniform)
        .def("__repr__", [](const Hypergraph& h) {
            return "<Hypergraph n=" + std::to_string(h.vertex_count()) + " edges=" +
                   std::to_string(h.edges().size()) + ">";
        });

    m.def("e_index", [](const Hypergraph& h) { return edge_index(h).size(); },
          "size of I(H)");
    m.def("edge_index", [](const Hypergraph& h) { return labels_to_list(edge_index(h)); },
          "the canonically ordered parts of I(H)");
    m.def("unified_degree",
          [](const Hypergraph& h, const std::vector<int>& part) {
              return unified_degree(h, Part(part));
          },
          py::arg("h"), py::arg("part"));
    m.def("min_unified_degree", &min_unified_degree);
    m.def("included_edge_count", &included_edge_count);

    m.def("unified_matrix", [](const Hypergraph& h) {
        UnifiedMatrix u = build_unified_matrix(h);
        py::list rows;
        for (int i = 0; i < u.order(); ++i) {
            py::list row;
            for (int j = 0; j < u.order(); ++j) row.append(u.at(i, j));
            rows.append(row);
        }
        return py::make_tuple(labels_to_list(u.labels), rows);
    }, "labels and dense entries of U(H)");

    m.def("char_poly", [](const Hypergraph& h) {
        return poly_to_list(char_poly_exact(build_unified_matrix(h)));
    }, "monic characteristic polynomial coefficients, highest degree first");
    m.def("determinant", [](const Hypergraph& h) {
        return to_py_int(determinant(build_unified_matrix(h)));
    });
    m.def("eigenvalues", [](const Hypergraph& h) {
        return symmetric_eigenvalues(build_unified_matrix(h).m);
    }, "descending eigenvalues of U(H)");
    m.def("spectrum_groups", [](const Hypergraph& h) {
        return eigen_spectrum(build_unified_matrix(h)).groups;
    }, "(representative, multiplicity) groups");

    m.def("exact_distance", [](const Hypergraph& h, int u, int v) {
        return exact_distance(h, u, v);
    });
    m.def("exact_diameter", &exact_diameter);
    m.def("is_exactly_connected", &is_exactly_connected);
    m.def("exact_girth", [](const Hypergraph& h) { return exact_girth(h); });
    m.def("odd_exact_girth", [](const Hypergraph& h) { return odd_exact_girth(h); });
    m.def("count_exact_walks",
          [](const Hypergraph& h, const std::vector<int>& from, const std::vector<int>& to,
             int len) { return to_py_int(count_exact_walks(h, Part(from), Part(to), len)); },
          py::arg("h"), py::arg("from_part"), py::arg("to_part"), py::arg("length"));
    m.def("e_triangle_count",
          [](const Hypergraph& h) { return e_triangle_count(h); });

    m.def("elementary_count",
          [](const Hypergraph& h, int q) {
              return static_cast<long long>(enumerate_elementary(h, q).size());
          },
          py::arg("h"), py::arg("q"));
    m.def("det_via_elementary",
          [](const Hypergraph& h) { return to_py_int(det_via_elementary(h)); });
    m.def("coeffs_via_elementary",
          [](const Hypergraph& h) { return poly_to_list(coeffs_via_elementary(h)); });

    m.def("gen_unified_cycle",
          [](const std::vector<int>& sizes) { return gen_unified_cycle(profile_from(sizes)); });
    m.def("gen_unified_path",
          [](const std::vector<int>& sizes) { return gen_unified_path(profile_from(sizes)); });
    m.def("cycle_closed_form", [](const std::vector<int>& sizes) {
        return closed_form_dict(cycle_spectrum_closed_form(profile_from(sizes)));
    });
    m.def("path_closed_form", [](const std::vector<int>& sizes) {
        return closed_form_dict(path_spectrum_closed_form(profile_from(sizes)));
    });

    m.def("pendant_attach", [](const Hypergraph& h, int u) {
        OperationReport r = pendant_attach(h, u);
        return py::make_tuple(r.result, r.holds);
    });
    m.def("coalesce", [](const Hypergraph& a, int u, const Hypergraph& b, int v) {
        OperationReport r = coalesce(a, u, b, v);
        return py::make_tuple(r.result, r.holds);
    });
    m.def("attach_edge", [](const Hypergraph& h, int u, int v, int s) {
        OperationReport r = attach_edge(h, u, v, s);
        return py::make_tuple(r.result, r.holds, r.name);
    });
    m.def("disjoint_union", [](const std::vector<Hypergraph>& hs) {
        return disjoint_union(hs);
    });

    m.def("weak_chromatic_number",
          [](const Hypergraph& h) { return weak_chromatic_number(h); });
    m.def("strong_chromatic_number",
          [](const Hypergraph& h) { return strong_chromatic_number(h); });
    m.def("independence_number",
          [](const Hypergraph& h) { return independence_number(h); });
    m.def("complete_clique_number",
          [](const Hypergraph& h) { return complete_clique_number(h); });
    m.def("bounds_report", [](const Hypergraph& h) {
        py::list out;
        for (const auto& r : spectral_radius_bounds(h)) out.append(bound_dict(r));
        for (const auto& r : chromatic_bounds(h, kDefaultBudget)) out.append(bound_dict(r));
        for (const auto& r : independence_clique_bounds(h, kDefaultBudget))
            out.append(bound_dict(r));
        return out;
    });

    m.def("parse_hg", [](const std::string& text) { return parse_hg_string(text); });
    m.def("emit_hg", &emit_hg);
}
