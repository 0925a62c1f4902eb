// Python bindings: thin wrappers returning plain Python structures; exact
// rationals cross the boundary as "p/q" strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "ug4/chevalley.hpp"
#include "ug4/splitcas.hpp"
#include "ug4/udim.hpp"
#include "ug4/verify.hpp"
#include "ug4/vparams.hpp"

namespace py = pybind11;
using namespace ug4;

namespace {

Provenance prov_of(const std::string& s) {
    if (s == "corrected") return Provenance::corrected;
    if (s == "as-printed" || s == "as_printed") return Provenance::as_printed;
    throw std::invalid_argument("provenance must be 'corrected' or 'as-printed'");
}

py::object json_to_py(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

VogelPoint point_of(const py::object& algebra, const py::object& point) {
    if (!algebra.is_none()) return algebra_point(algebra.cast<std::string>());
    auto t = point.cast<std::vector<std::string>>();
    if (t.size() != 3) throw std::invalid_argument("point must be three rationals");
    return {parse_rat(t[0]), parse_rat(t[1]), parse_rat(t[2])};
}

}  // namespace

PYBIND11_MODULE(_ug4, m) {
    m.doc() = "Exact universal dimension catalog and split-Casimir verification";

    m.def(
        "algebra_point",
        [](const std::string& name) {
            VogelPoint p = algebra_point(name);
            return py::make_tuple(rat_str(p.a), rat_str(p.b), rat_str(p.c));
        },
        py::arg("name"), "Vogel parameters (a, b, c) of a simple Lie algebra, t = 1/2 gauge");

    m.def(
        "dim",
        [](const std::string& label, const py::object& algebra, const py::object& point,
           const std::string& provenance) {
            Label l = parse_label(label);
            Provenance prov = prov_of(provenance);
            if (!algebra.is_none()) {
                AlgebraId id = parse_algebra(algebra.cast<std::string>());
                return rat_str(dim_at_algebra(l, id, prov));
            }
            return rat_str(dim(l, point_of(algebra, point), prov));
        },
        py::arg("label"), py::arg("algebra") = py::none(), py::arg("point") = py::none(),
        py::arg("provenance") = "corrected",
        "Exact dimension of a catalog label at an algebra or parameter point");

    m.def(
        "casimir_eigenvalue",
        [](const std::string& label, const py::object& algebra, const py::object& point, int n,
           const std::string& provenance) {
            return rat_str(casimir_eigenvalue(parse_label(label), point_of(algebra, point), n,
                                              prov_of(provenance)));
        },
        py::arg("label"), py::arg("algebra") = py::none(), py::arg("point") = py::none(),
        py::arg("n") = 4, py::arg("provenance") = "corrected",
        "n-split Casimir eigenvalue of a catalog label");

    m.def(
        "table",
        [](const std::string& module, const py::object& algebra, const py::object& point,
           const std::string& provenance) {
            VogelPoint pt = point_of(algebra, point);
            Provenance prov = prov_of(provenance);
            DecompositionTable tab = module_table(module, prov);
            py::list rows;
            Rat sum(0);
            for (const TableEntry& e : tab.entries) {
                Rat dv;
                if (!algebra.is_none())
                    dv = dim_at_algebra(e.label, parse_algebra(algebra.cast<std::string>()), prov);
                else
                    dv = dim(e.label, pt, prov);
                dv *= Rat(e.mult);
                dv.canonicalize();
                sum += dv;
                py::dict row;
                row["label"] = e.label.str();
                row["mult"] = e.mult;
                row["eig4"] = rat_str(casimir_eigenvalue(e.label, pt, 4, prov));
                row["dim"] = rat_str(dv);
                rows.append(row);
            }
            sum.canonicalize();
            py::dict out;
            out["module"] = canonical_module(module);
            out["rows"] = rows;
            out["sum"] = rat_str(sum);
            out["closed_form_total"] = rat_str(tab.total_at(dim_g(pt)));
            return out;
        },
        py::arg("module"), py::arg("algebra") = py::none(), py::arg("point") = py::none(),
        py::arg("provenance") = "corrected", "Full catalog table of a module");

    m.def(
        "spectrum",
        [](const std::string& algebra, const std::string& module, const std::string& provenance) {
            AlgebraId id = parse_algebra(algebra);
            LieAlgebra alg = build_algebra(algebra);
            return json_to_py(spectrum_to_json(module_spectrum(alg, id, module, prov_of(provenance))));
        },
        py::arg("algebra"), py::arg("module"), py::arg("provenance") = "corrected",
        "Measured split-Casimir spectrum of a module at an algebra");

    m.def(
        "verify",
        [](const std::string& algebra, const std::string& module, const std::string& provenance) {
            AlgebraId id = parse_algebra(algebra);
            LieAlgebra alg = build_algebra(algebra);
            return json_to_py(report_to_json(verify_module(alg, id, module, prov_of(provenance))));
        },
        py::arg("algebra"), py::arg("module"), py::arg("provenance") = "corrected",
        "Catalog predictions reconciled against a measured spectrum");

    m.def(
        "dump_algebra",
        [](const std::string& name) { return json_to_py(build_algebra(name).to_json()); },
        py::arg("name"), "Exact Chevalley-basis structure constants and Killing form");

    m.def(
        "check_sum_identity",
        [](const std::string& module, const std::vector<std::string>& point) {
            VogelPoint pt{parse_rat(point.at(0)), parse_rat(point.at(1)), parse_rat(point.at(2))};
            SumIdentityReport r = check_sum_identity(module, pt, Provenance::corrected);
            py::dict out;
            out["module"] = r.module;
            out["lhs"] = rat_str(r.lhs);
            out["rhs"] = rat_str(r.rhs);
            out["exact"] = r.exact;
            return out;
        },
        py::arg("module"), py::arg("point"),
        "Sum of catalog dimensions vs the closed-form total at a point");

    m.def("module_names", []() { return module_names(); });
}
