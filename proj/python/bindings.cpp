#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrc/io.hpp"
#include "lrc/verify.hpp"

namespace py = pybind11;
using namespace lrc;

namespace {

LrcParams make_params(std::size_t m, std::size_t n, std::size_t ell, std::size_t g,
                      const std::string& field, const std::string& variant) {
    LrcParams p;
    p.m = m;
    p.n = n;
    p.ell = ell;
    p.g = g;
    p.field = parse_field_name(field);
    p.variant = parse_variant(variant);
    return p;
}

std::vector<Symbol> to_symbols(const std::vector<long long>& values, const Field& f) {
    std::vector<Symbol> out;
    out.reserve(values.size());
    for (long long v : values) {
        if (v < 0 || static_cast<std::uint64_t>(v) >= f.size())
            throw py::value_error("symbol " + std::to_string(v) + " not in [0, " +
                                  std::to_string(f.size()) + ")");
        out.push_back(static_cast<Symbol>(v));
    }
    return out;
}

std::vector<long long> from_symbols(const std::vector<Symbol>& values) {
    return {values.begin(), values.end()};
}

py::dict report_dict(const PropertyReport& r) {
    py::dict d;
    d["holds"] = r.holds;
    d["cases_checked"] = r.cases_checked;
    if (r.witness) {
        d["punctured"] = r.witness->punctured;
        d["erased"] = r.witness->erased;
    } else {
        d["punctured"] = py::none();
        d["erased"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Locally recoverable erasure codes: parity-check constructions, "
                "encoding/decoding and exhaustive verification over GF(2^w)";

    py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Field, std::shared_ptr<Field>>(mod, "Field")
        .def(py::init<unsigned>(), py::arg("w"))
        .def_property_readonly("degree", &Field::degree)
        .def_property_readonly("size", &Field::size)
        .def_property_readonly("poly", &Field::poly)
        .def_property_readonly("name", [](const Field& f) { return field_name(f); })
        .def("add", &Field::add, py::arg("a"), py::arg("b"))
        .def("mul", &Field::mul, py::arg("a"), py::arg("b"))
        .def("div", &Field::div, py::arg("a"), py::arg("b"))
        .def("inv", &Field::inv, py::arg("a"))
        .def("alpha_pow", &Field::alpha_pow, py::arg("e"))
        .def("log_alpha", &Field::log_alpha, py::arg("a"));

    py::class_<Matrix>(mod, "Matrix")
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def("at", &Matrix::at, py::arg("row"), py::arg("col"))
        .def("to_text", [](const Matrix& m) { return format_matrix(m); })
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__repr__", [](const Matrix& m) {
            return "<Matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " over " +
                   field_name(*m.field()) + ">";
        });

    mod.def("parse_matrix", [](const std::string& text) { return parse_matrix(text); },
            py::arg("text"));

    mod.def("mod_reduce", &mod_reduce, py::arg("s"), py::arg("t"));
    mod.def("singleton_bound", &singleton_bound, py::arg("n"), py::arg("ell"), py::arg("g"));
    mod.def("special_bound", &special_bound, py::arg("n"), py::arg("ell"), py::arg("g"));

    mod.def(
        "rs_matrix",
        [](std::size_t n, std::size_t r, std::size_t i, std::size_t j, const std::string& field) {
            return rs_matrix(n, r, i, j, parse_field_name(field));
        },
        py::arg("n"), py::arg("r"), py::arg("i") = 0, py::arg("j") = 0, py::arg("field") = "gf2^4");
    mod.def(
        "ers_matrix",
        [](std::size_t n, std::size_t r, std::size_t j, const std::string& field) {
            return ers_matrix(n, r, j, parse_field_name(field));
        },
        py::arg("n"), py::arg("r"), py::arg("j") = 0, py::arg("field") = "gf2^4");

    mod.def(
        "build_parity_check",
        [](std::size_t m, std::size_t n, std::size_t ell, std::size_t g, const std::string& field,
           const std::string& variant, bool force) {
            return build_parity_check(make_params(m, n, ell, g, field, variant), force);
        },
        py::arg("m"), py::arg("n"), py::arg("ell"), py::arg("g"), py::arg("field"),
        py::arg("variant"), py::arg("force") = false);

    mod.def(
        "code_report",
        [](std::size_t m, std::size_t n, std::size_t ell, std::size_t g) {
            LrcParams p;
            p.m = m;
            p.n = n;
            p.ell = ell;
            p.g = g;
            CodeParamsReport r = report(p);
            py::dict d;
            d["length"] = r.length;
            d["dimension"] = r.dimension;
            d["bound_d"] = r.bound_d;
            d["locality"] = r.locality;
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("ell"), py::arg("g"));

    py::class_<LrcCode>(mod, "Code")
        .def(py::init([](std::size_t m, std::size_t n, std::size_t ell, std::size_t g,
                         const std::string& field, const std::string& variant, bool force) {
                 return LrcCode::build(make_params(m, n, ell, g, field, variant), force);
             }),
             py::arg("m"), py::arg("n"), py::arg("ell"), py::arg("g"), py::arg("field"),
             py::arg("variant"), py::arg("force") = false)
        .def_property_readonly("length", &LrcCode::length)
        .def_property_readonly("dimension", &LrcCode::dimension)
        .def_property_readonly("parity_check", &LrcCode::parity_check)
        .def_property_readonly("data_positions",
                               [](const LrcCode& c) { return c.layout().data_positions; })
        .def_property_readonly("local_parity_positions",
                               [](const LrcCode& c) { return c.layout().local_parity_positions; })
        .def_property_readonly("global_parity_positions",
                               [](const LrcCode& c) { return c.layout().global_parity_positions; })
        .def("encode",
             [](const LrcCode& c, const std::vector<long long>& data) {
                 return from_symbols(encode(c, to_symbols(data, *c.params().field)));
             },
             py::arg("data"))
        .def("syndrome",
             [](const LrcCode& c, const std::vector<long long>& word) {
                 return from_symbols(syndrome(c, to_symbols(word, *c.params().field)));
             },
             py::arg("word"))
        .def("decode",
             [](const LrcCode& c, const std::vector<long long>& received,
                const std::vector<std::size_t>& erasures) -> py::object {
                 ErasurePattern pattern(erasures, c.length());
                 DecodeResult res = decode(c, to_symbols(received, *c.params().field), pattern);
                 if (!res.ok()) return py::none();
                 return py::cast(from_symbols(*res.word));
             },
             py::arg("received"), py::arg("erasures"));

    mod.def(
        "min_distance",
        [](const Matrix& h, std::uint64_t budget, unsigned jobs) {
            return min_distance(h, EnumerationLimits{budget, jobs});
        },
        py::arg("h"), py::arg("budget") = EnumerationLimits{}.budget, py::arg("jobs") = 1);
    mod.def(
        "distance_at_least",
        [](const Matrix& h, std::size_t delta, std::uint64_t budget, unsigned jobs) {
            return distance_at_least(h, delta, EnumerationLimits{budget, jobs});
        },
        py::arg("h"), py::arg("delta"), py::arg("budget") = EnumerationLimits{}.budget,
        py::arg("jobs") = 1);
    mod.def(
        "is_optimal",
        [](std::size_t m, std::size_t n, std::size_t ell, std::size_t g, std::size_t d) {
            LrcParams p;
            p.m = m;
            p.n = n;
            p.ell = ell;
            p.g = g;
            return is_optimal(p, d);
        },
        py::arg("m"), py::arg("n"), py::arg("ell"), py::arg("g"), py::arg("d"));
    mod.def("xor_collapse", &xor_collapse, py::arg("h"), py::arg("m"), py::arg("ell"), py::arg("g"));

    mod.def("check_pmds", [](const LrcCode& c) { return report_dict(check_pmds(c)); }, py::arg("code"));
    mod.def("check_sd", [](const LrcCode& c) { return report_dict(check_sd(c)); }, py::arg("code"));
}
