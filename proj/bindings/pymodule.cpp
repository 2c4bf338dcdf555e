#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aqg/instance.hpp"
#include "aqg/suites.hpp"
#include "aqg/suq2.hpp"

namespace py = pybind11;
using namespace aqg;

namespace {

suq2::Gen gen_from_char(char c) {
    switch (c) {
        case 'a': return suq2::Gen::A;
        case 'A': return suq2::Gen::As;
        case 'c': return suq2::Gen::C;
        case 'C': return suq2::Gen::Cs;
        default: throw std::invalid_argument("word letters must be one of a A c C");
    }
}

std::vector<suq2::Gen> parse_word(const std::string& word) {
    std::vector<suq2::Gen> out;
    for (char c : word) out.push_back(gen_from_char(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_aqg, m) {
    m.doc() = "algebraic quantum group verification engine";

    py::class_<Instance>(m, "Instance")
        .def_property_readonly("name", [](const Instance& i) { return i.name; })
        .def_property_readonly("kind", [](const Instance& i) {
            return i.kind == Instance::Kind::Finite ? "finite" : "suq2";
        });

    m.def(
        "load_instance",
        [](const std::string& path) {
            Instance inst = load_instance(path);
            if (inst.kind == Instance::Kind::Finite) {
                Report v = validate_structure(*inst.finite);
                if (!v.pass()) {
                    for (const auto& e : v.entries)
                        if (!e.pass)
                            throw StructuralError(e.id, e.anchor + (e.witness
                                                                        ? " at " + *e.witness
                                                                        : ""));
                }
            }
            return inst;
        },
        py::arg("path"),
        "Parse and validate an instance file; raises ValueError on malformed input and "
        "RuntimeError naming the failed axiom on an invalid finite table.");

    m.def(
        "run_suite",
        [](const Instance& inst, const std::string& suite, int degree, const std::string& q,
           double tolerance, int jobs) {
            if (!is_suite_name(suite)) throw std::invalid_argument("unknown suite " + suite);
            SuiteConfig cfg;
            cfg.degree = degree;
            cfg.tol.abs_tol = tolerance;
            cfg.jobs = jobs;
            if (!q.empty()) cfg.q_override = Rational::parse(q);
            Report rep = run_suite(inst, suite, cfg);
            return rep.to_json();
        },
        py::arg("instance"), py::arg("suite") = "all", py::arg("degree") = 6,
        py::arg("q") = "", py::arg("tolerance") = 1e-9, py::arg("jobs") = 1,
        "Run a verification suite and return the canonical JSON report string.");

    m.def(
        "q_power",
        [](const std::string& q, std::complex<double> z) {
            return q_power(Rational::parse(q), Cx(z));
        },
        py::arg("q"), py::arg("z"), "Principal power q^z for rational q in (0,1).");

    m.def(
        "suq2_normal_form",
        [](const std::string& word, const std::string& q) {
            suq2::Engine eng(Rational::parse(q));
            return eng.normal_form(parse_word(word)).str();
        },
        py::arg("word"), py::arg("q") = "1/2",
        "PBW normal form of a generator word; letters a, A (= a*), c, C (= c*).");

    m.def(
        "suq2_haar",
        [](const std::string& word, const std::string& q) {
            suq2::Engine eng(Rational::parse(q));
            Rational acc;
            for (const auto& [t, c] : eng.normal_form(parse_word(word)))
                acc += c * eng.haar_mono(t);
            return acc.str();
        },
        py::arg("word"), py::arg("q") = "1/2",
        "Haar state of a generator word, as an exact rational string.");

    m.def(
        "suq2_antipode",
        [](const std::string& word, const std::string& q) {
            suq2::Engine eng(Rational::parse(q));
            return eng.antipode(eng.normal_form(parse_word(word))).str();
        },
        py::arg("word"), py::arg("q") = "1/2", "Antipode of a generator word.");

    py::register_exception<ParseError>(m, "InstanceParseError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
}
