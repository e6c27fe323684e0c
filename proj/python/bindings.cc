// Copyright 2026 The cqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thin pybind11 layer. Matrices, words and phases cross the boundary as the same JSON text the CLI
// reads and writes; cqca/__init__.py turns that into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cqca/cocycle.h"
#include "cqca/errors.h"
#include "cqca/evolve.h"
#include "cqca/factor.h"
#include "cqca/oracle.h"
#include "cqca/poly_parser.h"
#include "cqca/sca.h"
#include "cqca/serialize.h"

namespace py = pybind11;
using namespace cqca;
using nlohmann::json;

namespace {

ScaMatrix read_matrix(const std::string &text) {
    return matrix_from_json(parse_json(text));
}

json exponent_json(const Exponent &a) {
    return json(std::vector<std::int64_t>(a.begin(), a.end()));
}

Palindrome read_palindrome(const std::string &text, Prime p) {
    LaurentPoly f = parse_poly(text, p);
    if (!f.is_palindrome()) {
        throw DomainError(f.str() + " is not a palindrome");
    }
    return Palindrome(f);
}

std::string classify_json(const std::string &text) {
    SymplecticCertificate cert = classify(read_matrix(text));
    return json{{"shift", exponent_json(cert.shift)}, {"core", to_json(cert.core)}}.dump();
}

std::string recipe_json(const std::string &f_text, const std::string &h_text, std::optional<std::string> fp_text,
                        std::optional<std::string> hp_text, std::uint32_t p_raw) {
    Prime p(p_raw);
    Palindrome f = read_palindrome(f_text, p), h = read_palindrome(h_text, p);
    Palindrome hp = hp_text ? read_palindrome(*hp_text, p) : Palindrome(LaurentPoly::constant(p, 1, 1));
    Palindrome fp = fp_text ? read_palindrome(*fp_text, p)
                            : Palindrome(LaurentPoly::constant(p, 1, 1) - f.poly() * h.poly());
    return to_json(from_recipe(f, h, fp, hp)).dump();
}

std::string default_phase_json(const std::string &text) {
    return to_json(default_phase(read_matrix(text))).dump();
}

bool validate_phase(const std::string &matrix, const std::string &phase, std::optional<std::int64_t> radius,
                    std::uint64_t seed) {
    ScaMatrix s = read_matrix(matrix);
    PhaseFunction phi = phase_from_json(parse_json(phase), s);
    return validate_cocycle(phi, radius.value_or(default_validation_radius(s)), seed);
}

py::object evolve_render(const std::string &matrix, const std::string &plus, const std::string &minus,
                         std::int64_t steps, const std::string &format) {
    ScaMatrix s = read_matrix(matrix);
    PhaseVector xi(parse_poly(plus, s.modulus(), s.dim()), parse_poly(minus, s.modulus(), s.dim()));
    EvolutionTrace trace = evolve(s, xi, steps);
    if (format == "csv") {
        return py::str(render_csv(trace));
    }
    if (format == "ascii") {
        return py::str(render_ascii(trace));
    }
    if (format == "pgm") {
        return py::bytes(render_pgm(trace));
    }
    throw ParseError("unknown format \"" + format + "\"", 0);
}

py::list selftest(std::uint32_t p, std::size_t window, std::uint64_t seed) {
    py::list out;
    for (const oracle::CheckReport &r : oracle::run_selftest(Prime(p), window, seed)) {
        py::dict row;
        row["check"] = r.name;
        row["passed"] = r.passed;
        row["checked"] = r.checked;
        row["failed"] = r.failed;
        row["detail"] = r.detail;
        out.append(row);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact algebra for Clifford quantum cellular automata";

    auto &base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<MismatchError>(m, "MismatchError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NotSymplecticError>(m, "NotSymplecticError", base.ptr());
    py::register_exception<FactorizationMismatchError>(m, "FactorizationMismatchError", base.ptr());
    py::register_exception<NoValidPhaseError>(m, "NoValidPhaseError", base.ptr());
    py::register_exception<WindowError>(m, "WindowError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    m.def(
        "parse_poly", [](const std::string &text, std::uint32_t p, std::size_t d) {
            return parse_poly(text, Prime(p), d).str();
        },
        py::arg("text"), py::arg("p"), py::arg("d") = 1, "Canonical rendering of a Laurent polynomial");
    m.def(
        "canonical", [](const std::string &text) { return to_json(read_matrix(text)).dump(); },
        py::arg("matrix"));
    m.def(
        "is_symplectic", [](const std::string &text) { return is_symplectic(read_matrix(text)); },
        py::arg("matrix"));
    m.def("classify", &classify_json, py::arg("matrix"));
    m.def(
        "compose",
        [](const std::string &a, const std::string &b) {
            return to_json(compose(read_matrix(a), read_matrix(b))).dump();
        },
        py::arg("first"), py::arg("second"), "Matrix product first * second");
    m.def(
        "inverse", [](const std::string &text) { return to_json(inverse(read_matrix(text))).dump(); },
        py::arg("matrix"));
    m.def(
        "factorize", [](const std::string &text) { return to_json(factorize(read_matrix(text))).dump(); },
        py::arg("matrix"));
    m.def(
        "multiply_word",
        [](const std::string &word, std::uint32_t p) {
            return to_json(multiply_word(word_from_json(parse_json(word), Prime(p)))).dump();
        },
        py::arg("word"), py::arg("p"));
    m.def("recipe", &recipe_json, py::arg("f"), py::arg("h"), py::arg("f_prime") = py::none(),
          py::arg("h_prime") = py::none(), py::arg("p") = 2);
    m.def("default_phase", &default_phase_json, py::arg("matrix"));
    m.def("validate_phase", &validate_phase, py::arg("matrix"), py::arg("phase"), py::arg("radius") = py::none(),
          py::arg("seed") = 0);
    m.def("evolve", &evolve_render, py::arg("matrix"), py::arg("plus"), py::arg("minus"), py::arg("steps"),
          py::arg("format") = "csv");
    m.def("selftest", &selftest, py::arg("p"), py::arg("window") = 3, py::arg("seed") = 0);
}
