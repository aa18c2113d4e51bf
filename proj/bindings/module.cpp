#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apery/cli.hpp"
#include "apery/errors.hpp"
#include "apery/invariants.hpp"
#include "apery/report.hpp"

namespace py = pybind11;

namespace {

using namespace apery;

Int int_from_object(const py::handle& obj) {
    return Int(py::str(obj).cast<std::string>());
}

py::int_ int_to_py(const Int& v) {
    PyObject* p = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(p);
}

LatticeVector vector_from_py(const py::sequence& seq) {
    std::vector<Int> entries;
    entries.reserve(static_cast<size_t>(py::len(seq)));
    for (const auto& item : seq) entries.push_back(int_from_object(item));
    return LatticeVector{std::move(entries)};
}

py::tuple vector_to_py(const LatticeVector& v) {
    py::tuple t(static_cast<size_t>(v.dim()));
    for (int i = 0; i < v.dim(); ++i) t[static_cast<size_t>(i)] = int_to_py(v[i]);
    return t;
}

py::list vectors_to_py(const std::vector<LatticeVector>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(vector_to_py(v));
    return out;
}

py::object rat_to_py(const Rat& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rat_to_string(q));
}

Semigroup semigroup_from_py(const py::sequence& gens) {
    std::vector<LatticeVector> vs;
    for (const auto& g : gens) vs.push_back(vector_from_py(g.cast<py::sequence>()));
    return Semigroup(vs);
}

py::dict multiplicity_to_py(const MultiplicityResult& m) {
    py::dict out;
    out["value"] = m.value ? py::object(int_to_py(*m.value)) : py::none();
    out["method"] = to_string(m.method);
    out["certified"] = m.certified;
    out["apery_upper_bound"] = int_to_py(m.upper_bound_apery);
    out["det_bound"] = m.dim2_det_bound ? py::object(int_to_py(*m.dim2_det_bound)) : py::none();
    out["stabilized"] = m.stabilized;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "invariants of simplicial affine semigroups, exact arithmetic core";

    py::register_exception<Error>(m, "Error");

    py::class_<Semigroup>(m, "Semigroup")
        .def(py::init(&semigroup_from_py), py::arg("generators"))
        .def_property_readonly("dimension", &Semigroup::dimension)
        .def_property_readonly("codimension", &Semigroup::codimension)
        .def_property_readonly("generators",
                               [](const Semigroup& S) { return vectors_to_py(S.generators()); })
        .def_property_readonly("extremal_rays",
                               [](const Semigroup& S) { return vectors_to_py(S.extremal_rays()); })
        .def("contains",
             [](const Semigroup& S, const py::sequence& v) { return S.contains(vector_from_py(v)); })
        .def("order",
             [](const Semigroup& S, const py::sequence& v) { return S.order(vector_from_py(v)); })
        .def("maximal_expression",
             [](const Semigroup& S, const py::sequence& v) {
                 return S.maximal_expression(vector_from_py(v));
             })
        .def("cone_coordinates",
             [](const Semigroup& S, const py::sequence& v) {
                 py::list out;
                 for (const Rat& q : S.cone_coordinates(vector_from_py(v)))
                     out.append(rat_to_py(q));
                 return out;
             })
        .def("degree",
             [](const Semigroup& S, const py::sequence& v) {
                 return rat_to_py(S.degree(vector_from_py(v)));
             })
        .def("is_homogeneous", &Semigroup::is_homogeneous);

    m.def("parse_generators", [](const std::string& text) {
        return vectors_to_py(parse_generators(text));
    });
    m.def("apery_set", [](const Semigroup& S) {
        py::list out;
        for (const auto& el : apery_set(S).elements) {
            py::dict e;
            e["value"] = vector_to_py(el.value);
            e["order"] = el.order;
            e["rem"] = vector_to_py(el.rem);
            out.append(std::move(e));
        }
        return out;
    });
    m.def("has_monomial_reduction", &has_monomial_reduction);
    m.def("reduction_number", [](const Semigroup& S) { return reduction_number(S); });
    m.def("is_cohen_macaulay", [](const Semigroup& S) { return is_cohen_macaulay(S); });
    m.def("is_gorenstein", [](const Semigroup& S) { return is_gorenstein(S); });
    m.def("gr_is_cohen_macaulay", [](const Semigroup& S) { return gr_is_cohen_macaulay(S); });
    m.def("gr_is_gorenstein", [](const Semigroup& S) { return gr_is_gorenstein(S); });
    m.def("is_minimal_multiplicity", &is_minimal_multiplicity);
    m.def("regularity", &regularity);
    m.def("betas_and_d_s", [](const Semigroup& S) { return betas_and_dS(S); });
    m.def(
        "multiplicity",
        [](const Semigroup& S, int hilbert_cap) {
            return multiplicity_to_py(multiplicity(S, hilbert_cap));
        },
        py::arg("S"), py::arg("hilbert_cap") = 40);
    m.def(
        "analyze_json",
        [](const py::sequence& gens, int hilbert_cap) {
            Semigroup S = semigroup_from_py(gens);
            return report_to_json(analyze(S, hilbert_cap)).dump();
        },
        py::arg("generators"), py::arg("hilbert_cap") = 40);
}
