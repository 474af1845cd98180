#include "homcalc/cli.hpp"
#include "homcalc/poly_parser.hpp"
#include "homcalc/structure_file.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

namespace py = pybind11;
using namespace homcalc;

namespace {

// Opaque handle; Python sees it through its kind and canonical text.
struct PyStructure {
    Structure value;
};

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact verification of Hom-Lie algebroids, bialgebroids and Hom-Courant algebroids";

    static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
    static py::exception<StructureError> structure_error(m, "StructureError", PyExc_ValueError);
    static py::exception<IncompatibleTarget> incompatible(m, "IncompatibleTarget", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const StructureError& e) {
            py::object exc = py::handle(structure_error.ptr())(e.what());
            exc.attr("line") = e.line();
            exc.attr("column") = e.column();
            exc.attr("pointer") = e.pointer();
            exc.attr("syntax") = e.category() == StructureError::Category::syntax;
            PyErr_SetObject(structure_error.ptr(), exc.ptr());
        } catch (const IncompatibleTarget& e) {
            incompatible(e.what());
        } catch (const Error& e) {
            error(e.what());
        }
    });

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& text, const std::vector<std::string>& variables) {
                 return parse_poly(text, make_variables(variables));
             }),
             py::arg("text"), py::arg("variables"))
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("is_zero", &Poly::is_zero)
        .def("__str__", &Poly::to_string)
        .def("__repr__", [](const Poly& p) { return "Poly('" + p.to_string() + "')"; });

    py::class_<AxiomResult>(m, "AxiomResult")
        .def_readonly("id", &AxiomResult::id)
        .def_readonly("anchor", &AxiomResult::anchor)
        .def_readonly("passed", &AxiomResult::passed)
        .def_readonly("checked", &AxiomResult::checked)
        .def_property_readonly("witness", [](const AxiomResult& a) -> py::object {
            if (!a.witness) return py::none();
            return py::make_tuple(a.witness->assignment, a.witness->lhs, a.witness->rhs);
        });

    py::class_<VerificationReport>(m, "Report")
        .def_readonly("structure", &VerificationReport::structure)
        .def_readonly("sample_degree", &VerificationReport::sample_degree)
        .def_readonly("axioms", &VerificationReport::axioms)
        .def_readonly("elapsed_ms", &VerificationReport::elapsed_ms)
        .def_property_readonly("passed", &VerificationReport::passed)
        .def_property_readonly("first_failure", &VerificationReport::first_failure)
        .def("__bool__", &VerificationReport::passed)
        .def("to_text", &VerificationReport::to_text)
        .def("to_json", [](const VerificationReport& r) { return report_json(r); });

    py::class_<PyStructure>(m, "Structure")
        .def_property_readonly("kind", [](const PyStructure& s) { return kind_of(s.value); })
        .def("to_text", [](const PyStructure& s) { return print_structure(s.value); })
        .def("__str__", [](const PyStructure& s) { return print_structure(s.value); })
        .def("__repr__", [](const PyStructure& s) { return "<homcalc.Structure kind=" + kind_of(s.value) + ">"; });

    m.def("parse", [](const std::string& text) { return PyStructure{parse_structure(text)}; }, py::arg("text"));
    m.def(
        "verify",
        [](const PyStructure& s, unsigned max_degree) {
            py::gil_scoped_release release;
            return verify_structure(s.value, SampleConfig{max_degree});
        },
        py::arg("structure"), py::arg("max_degree") = 3);
    m.def(
        "derive", [](const PyStructure& s, const std::string& target) { return PyStructure{derive_structure(s.value, target)}; },
        py::arg("structure"), py::arg("target"));
    m.def("derive_targets", &derive_targets);
    m.def("catalog_names", &catalog_names);
    m.def(
        "catalog",
        [](const std::string& name) {
            const auto names = catalog_names();
            if (std::find(names.begin(), names.end(), name) == names.end()) throw py::key_error(name);
            return PyStructure{catalog_entry(name)};
        },
        py::arg("name"));
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
