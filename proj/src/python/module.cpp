// SPDX-License-Identifier: Apache-2.0
// Python bindings.  Reports come back as dicts decoded from the same JSON the
// command-line tool prints; rationals travel as strings or ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isog3/coble.hpp"
#include "isog3/reports.hpp"

namespace py = pybind11;
using namespace isog3;

namespace {

py::object to_python(const reports::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Q> rationals(const std::vector<py::object>& v) {
    std::vector<Q> out;
    for (const auto& x : v) out.push_back(Q::parse(py::str(x).cast<std::string>()));
    return out;
}

std::vector<std::string> strings(const std::vector<Q>& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

}  // namespace

PYBIND11_MODULE(isog3, m) {
    m.doc() = "Explicit (3,3)-isogenies of genus-2 Jacobians";

    // The type lives as long as the interpreter; the handle is never released.
    static py::handle error_type = py::exception<Error>(m, "Error").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(std::string(e.what()));
            exc.attr("code") = error_name(e.code());
            exc.attr("degeneracy") = is_degeneracy(e.code());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.def(
        "char3",
        [](uint64_t q, const std::vector<uint64_t>& f, std::optional<std::vector<uint32_t>> modulus, int max_extension) {
            return to_python(reports::char3_report(reports::field_for(q, modulus), f, max_extension));
        },
        py::arg("q"), py::arg("f"), py::arg("modulus") = py::none(),
        py::arg("max_extension") = reports::kDefaultMaxExtension,
        "Isogenous curve of y^2 = x^5 + f4 x^4 + ... + f0 over F_q; f holds element indices f0..f4.");

    m.def(
        "iso",
        [](uint64_t q, const std::vector<uint64_t>& f, const std::vector<uint64_t>& g,
           std::optional<std::vector<uint32_t>> modulus, int max_extension) {
            return to_python(reports::iso_report(reports::field_for(q, modulus), f, g, max_extension));
        },
        py::arg("q"), py::arg("f"), py::arg("g"), py::arg("modulus") = py::none(),
        py::arg("max_extension") = reports::kDefaultMaxExtension);

    m.def(
        "sweep",
        [](uint64_t q, int count, uint64_t seed, std::optional<int> threads, bool timing, bool details) {
            reports::SweepOptions opt;
            opt.q = q;
            opt.count = count;
            opt.seed = seed;
            opt.threads = threads.value_or(reports::thread_budget());
            opt.timing = timing;
            opt.details = details;
            py::gil_scoped_release release;
            const auto r = reports::sweep_report(opt);
            py::gil_scoped_acquire acquire;
            return to_python(r);
        },
        py::arg("q"), py::arg("count") = 50, py::arg("seed") = 1, py::arg("threads") = py::none(),
        py::arg("timing") = false, py::arg("details") = false);

    m.def(
        "complex",
        [](const std::vector<py::object>& z, int digits, std::optional<int> stability) {
            return to_python(reports::complex_report(rationals(z), digits, stability));
        },
        py::arg("z"), py::arg("digits") = 100, py::arg("stability") = py::none(),
        "Complex construction from the Maschke point z = (z1, z2, z3, z4).");

    m.def(
        "verify",
        [](const std::string& check, std::optional<uint64_t> seed) {
            if (check == "burkhardt") return to_python(reports::verify_burkhardt(seed.value_or(7)));
            if (check == "hessian") return to_python(reports::verify_hessian(seed.value_or(11)));
            if (check == "reflections") return to_python(reports::verify_reflections());
            if (check == "salmon") return to_python(reports::verify_salmon(seed.value_or(2024)));
            throw Error(ErrorCode::InvalidInput, "unknown check '" + check + "'");
        },
        py::arg("check"), py::arg("seed") = py::none());

    m.def(
        "cminus", [](const std::vector<py::object>& z) { return strings(cminus(rationals(z))); }, py::arg("z"),
        "Kernel of M(0, z) as exact rationals, first nonzero coordinate 1.");
    m.def(
        "burkhardt", [](const std::vector<py::object>& y) { return to_string(burkhardt_eval(rationals(y))); },
        py::arg("y"));
    m.def(
        "phi40", [](const std::vector<py::object>& z) { return to_string(phi40(rationals(z)).value); }, py::arg("z"));
}
