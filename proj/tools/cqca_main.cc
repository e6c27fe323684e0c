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

// Command line front end. Exit codes: 0 success, 1 domain rejection (not symplectic, no phase, recipe
// factorization mismatch, failed self test), 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cqca/cocycle.h"
#include "cqca/errors.h"
#include "cqca/evolve.h"
#include "cqca/factor.h"
#include "cqca/oracle.h"
#include "cqca/poly_parser.h"
#include "cqca/serialize.h"

using namespace cqca;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInputError = 2;

/// Raised for a domain rejection that should end the command with exit code 1.
struct Rejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint32_t p = 2;
    std::size_t d = 1;
    bool p_given = false;
    bool d_given = false;
    std::string format;
    std::uint64_t seed = 0;
    std::int64_t steps = 10;
    std::string output;
};

std::string read_source(const std::string &source) {
    if (source == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    if (!source.empty() && source.front() == '{') {
        return source;
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open \"" + source + "\"", 0);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ScaMatrix load_matrix(const std::string &source, const Options &opt) {
    return matrix_from_json(
        parse_json(read_source(source)), opt.p_given ? std::optional<std::uint32_t>(opt.p) : std::nullopt,
        opt.d_given ? std::optional<std::size_t>(opt.d) : std::nullopt);
}

json exponent_json(const Exponent &e) {
    return json(std::vector<std::int64_t>(e.begin(), e.end()));
}

void emit(const std::string &text, const Options &opt) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write \"" + opt.output + "\"", 0);
    }
    out << text;
}

void print(const json &j) {
    std::cout << j.dump() << '\n';
}

int cmd_verify(const std::string &source, const Options &opt) {
    ScaMatrix s = load_matrix(source, opt);
    bool form_ok = is_symplectic(s);
    json report{{"symplectic", form_ok}};
    try {
        SymplecticCertificate cert = classify(s);
        report["shift"] = exponent_json(cert.shift);
        report["core"] = to_json(cert.core);
    } catch (const NotSymplecticError &e) {
        report["reason"] = e.what();
    }
    report["criteria_agree"] = form_ok == report.contains("shift");
    print(report);
    return form_ok ? kOk : kRejected;
}

int cmd_classify(const std::string &source, const Options &opt) {
    ScaMatrix s = load_matrix(source, opt);
    SymplecticCertificate cert = classify(s);
    print({{"symplectic", true}, {"shift", exponent_json(cert.shift)}, {"core", to_json(cert.core)}});
    return kOk;
}

int cmd_compose(const std::string &first, const std::string &second, const Options &opt) {
    ScaMatrix s = load_matrix(first, opt);
    ScaMatrix t = load_matrix(second, opt);
    print(to_json(compose(s, t)));
    return kOk;
}

int cmd_invert(const std::string &source, const Options &opt) {
    print(to_json(inverse(load_matrix(source, opt))));
    return kOk;
}

int cmd_factor(const std::string &source, const Options &opt) {
    ScaMatrix s = load_matrix(source, opt);
    GeneratorWord w = factorize(s);
    ScaMatrix product = multiply_word(w);
    json input = to_json(s);
    json echoed = to_json(product);
    if (input.dump() != echoed.dump()) {
        throw std::logic_error("factorization does not multiply back to the input");
    }
    print({{"word", to_json(w)}, {"product", echoed}});
    return kOk;
}

int cmd_recipe(const std::string &f_text, const std::string &h_text, const std::string &fp_text,
               const std::string &hp_text, const Options &opt) {
    Prime p(opt.p);
    LaurentPoly f = parse_poly(f_text, p, opt.d);
    LaurentPoly h = parse_poly(h_text, p, opt.d);
    for (const auto *e : {&f, &h}) {
        if (!e->is_palindrome()) {
            throw ParseError("recipe input " + e->str() + " is not a palindrome", 0);
        }
    }
    LaurentPoly one = LaurentPoly::constant(p, opt.d, 1);
    LaurentPoly h_prime = hp_text.empty() ? one : parse_poly(hp_text, p, opt.d);
    LaurentPoly f_prime = fp_text.empty() ? one - f * h : parse_poly(fp_text, p, opt.d);
    for (const auto *e : {&f_prime, &h_prime}) {
        if (!e->is_palindrome()) {
            throw ParseError("recipe input " + e->str() + " is not a palindrome", 0);
        }
    }
    ScaMatrix s = from_recipe(Palindrome(f), Palindrome(h), Palindrome(f_prime), Palindrome(h_prime));
    SymplecticCertificate cert = classify(s);
    print({{"matrix", to_json(s)}, {"symplectic", is_symplectic(s)}, {"shift", exponent_json(cert.shift)}});
    return kOk;
}

int cmd_evolve(const std::string &source, const std::vector<std::string> &xi_text, const Options &opt) {
    ScaMatrix s = load_matrix(source, opt);
    if (!is_symplectic(s)) {
        throw Rejected("matrix is not symplectic");
    }
    if (xi_text.size() != 2) {
        throw ParseError("--xi takes the plus and minus polynomials", 0);
    }
    if (opt.steps < 0) {
        throw ParseError("--steps must be non-negative", 0);
    }
    PhaseVector xi0(parse_poly(xi_text[0], s.modulus(), s.dim()), parse_poly(xi_text[1], s.modulus(), s.dim()));
    EvolutionTrace trace = evolve(s, xi0, opt.steps);
    std::string format = opt.format.empty() ? "csv" : opt.format;
    if (format == "ascii") {
        if (s.dim() == 1 && render_width(trace) <= kMaxAsciiColumns) {
            emit(render_ascii(trace), opt);
            return kOk;
        }
        std::cerr << "warning: light cone wider than " << kMaxAsciiColumns << " columns, writing csv instead\n";
        format = "csv";
    }
    if (format == "csv") {
        emit(render_csv(trace), opt);
    } else if (format == "pgm") {
        emit(render_pgm(trace), opt);
    } else {
        throw ParseError("unknown format \"" + format + "\"", 0);
    }
    return kOk;
}

int cmd_phase(const std::string &source, std::int64_t radius, const Options &opt) {
    ScaMatrix s = load_matrix(source, opt);
    PhaseFunction phi = default_phase(s);
    std::int64_t r = radius >= 0 ? radius : default_validation_radius(s);
    bool valid = validate_cocycle(phi, r, opt.seed);
    print({{"matrix", to_json(s)}, {"phase", to_json(phi)}, {"radius", r}, {"valid", valid}});
    return valid ? kOk : kRejected;
}

int cmd_selftest(std::size_t window, const Options &opt) {
    bool ok = true;
    for (const auto &r : oracle::run_selftest(Prime(opt.p), window, opt.seed)) {
        ok = ok && r.passed;
        json line{{"check", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"failed", r.failed}};
        if (!r.detail.empty()) {
            line["detail"] = r.detail;
        }
        print(line);
    }
    return ok ? kOk : kRejected;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Clifford quantum cellular automata: verify, classify, factor and simulate"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    auto *p_flag = app.add_option("--p", opt.p, "Prime cell dimension")->check(CLI::PositiveNumber);
    auto *d_flag = app.add_option("--d", opt.d, "Lattice dimension")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "Output format for evolve: csv, ascii or pgm");
    app.add_option("--seed", opt.seed, "Seed for sampled checks");
    app.add_option("--steps", opt.steps, "Number of evolution steps");
    app.add_option("-o,--output", opt.output, "Write evolve output to a file instead of stdout");

    std::string matrix, second, f_text, h_text, fp_text, hp_text;
    std::vector<std::string> xi_text;
    std::int64_t radius = -1;
    std::size_t window = 3;

    auto *verify = app.add_subcommand("verify", "Test the form-preservation criterion and report the certificate");
    verify->add_option("matrix", matrix, "Matrix JSON: file, '-' for stdin, or inline")->required();
    auto *classify_cmd = app.add_subcommand("classify", "Split into a shift and an SL(2) palindrome core");
    classify_cmd->add_option("matrix", matrix)->required();
    auto *compose_cmd = app.add_subcommand("compose", "Matrix product: apply the second matrix first");
    compose_cmd->add_option("first", matrix)->required();
    compose_cmd->add_option("second", second)->required();
    auto *invert = app.add_subcommand("invert", "Group inverse");
    invert->add_option("matrix", matrix)->required();
    auto *factor = app.add_subcommand("factor", "Factor a 1D automaton into shift, shears and local rotations");
    factor->add_option("matrix", matrix)->required();
    auto *recipe = app.add_subcommand("recipe", "Build ((f, f'), (-h', h)) from palindromes");
    recipe->add_option("F", f_text, "Palindrome f")->required();
    recipe->add_option("H", h_text, "Palindrome h")->required();
    recipe->add_option("F_PRIME", fp_text, "Palindrome f' (default 1 - f h)");
    recipe->add_option("H_PRIME", hp_text, "Palindrome h' (default 1)");
    auto *evolve_cmd = app.add_subcommand("evolve", "Trace the orbit of a phase vector");
    evolve_cmd->add_option("matrix", matrix)->required();
    evolve_cmd->add_option("--xi", xi_text, "Initial vector as two polynomials: plus minus")->expected(2)->required();
    auto *phase = app.add_subcommand("phase", "Construct and validate a phase function");
    phase->add_option("matrix", matrix)->required();
    phase->add_option("--radius", radius, "Validation radius (default: neighborhood radius + 1)");
    auto *selftest = app.add_subcommand("selftest", "Run the dense-matrix oracle suite");
    selftest->add_option("--window", window, "Number of sites in the oracle window");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInputError;
    }
    opt.p_given = p_flag->count() > 0;
    opt.d_given = d_flag->count() > 0;

    try {
        if (!is_prime(opt.p)) {
            throw ParseError("--p must be prime", 0);
        }
        if (*verify) {
            return cmd_verify(matrix, opt);
        }
        if (*classify_cmd) {
            return cmd_classify(matrix, opt);
        }
        if (*compose_cmd) {
            return cmd_compose(matrix, second, opt);
        }
        if (*invert) {
            return cmd_invert(matrix, opt);
        }
        if (*factor) {
            return cmd_factor(matrix, opt);
        }
        if (*recipe) {
            return cmd_recipe(f_text, h_text, fp_text, hp_text, opt);
        }
        if (*evolve_cmd) {
            return cmd_evolve(matrix, xi_text, opt);
        }
        if (*phase) {
            return cmd_phase(matrix, radius, opt);
        }
        if (*selftest) {
            return cmd_selftest(window, opt);
        }
    } catch (const NotSymplecticError &e) {
        std::cerr << "not symplectic: " << e.what() << '\n';
        return kRejected;
    } catch (const NoValidPhaseError &e) {
        std::cerr << "no valid phase: " << e.what() << '\n';
        return kRejected;
    } catch (const FactorizationMismatchError &e) {
        std::cerr << "factorization mismatch: " << e.what() << '\n';
        return kRejected;
    } catch (const Rejected &e) {
        std::cerr << e.what() << '\n';
        return kRejected;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
