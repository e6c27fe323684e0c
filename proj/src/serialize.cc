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

#include "cqca/serialize.h"

#include <limits>

#include "cqca/errors.h"
#include "cqca/poly_parser.h"

namespace cqca {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string &what) {
    throw ParseError("malformed JSON document: " + what, 0);
}

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        malformed(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::int64_t integer(const json &j, const char *what) {
    if (!j.is_number_integer()) {
        malformed(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

LaurentPoly poly(const json &j, Prime p, std::size_t d) {
    if (!j.is_string()) {
        malformed("polynomial entries must be strings");
    }
    return parse_poly(j.get<std::string>(), p, d);
}

}  // namespace

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
}

json to_json(const ScaMatrix &s) {
    return {
        {"p", s.modulus().value()},
        {"d", s.dim()},
        {"entries", json::array({json::array({s.pp.str(), s.pm.str()}), json::array({s.mp.str(), s.mm.str()})})},
    };
}

ScaMatrix matrix_from_json(const json &j, std::optional<std::uint32_t> expected_p, std::optional<std::size_t> expected_d) {
    std::int64_t p_raw = integer(field(j, "p"), "p");
    std::int64_t d_raw = integer(field(j, "d"), "d");
    if (p_raw < 2 || p_raw > std::numeric_limits<std::uint32_t>::max() || !is_prime(static_cast<std::uint64_t>(p_raw))) {
        malformed("p must be a prime");
    }
    if (d_raw < 1) {
        malformed("d must be positive");
    }
    if (expected_p && *expected_p != p_raw) {
        throw MismatchError("matrix has p = " + std::to_string(p_raw) + " but " + std::to_string(*expected_p) +
                            " was requested");
    }
    if (expected_d && *expected_d != static_cast<std::size_t>(d_raw)) {
        throw MismatchError("matrix has d = " + std::to_string(d_raw) + " but " + std::to_string(*expected_d) +
                            " was requested");
    }
    Prime p(static_cast<std::uint64_t>(p_raw));
    auto d = static_cast<std::size_t>(d_raw);
    const json &entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != 2 || !entries[0].is_array() || !entries[1].is_array() ||
        entries[0].size() != 2 || entries[1].size() != 2) {
        malformed("entries must be a 2x2 array");
    }
    return {poly(entries[0][0], p, d), poly(entries[0][1], p, d), poly(entries[1][0], p, d), poly(entries[1][1], p, d)};
}

json to_json(const GeneratorWord &w) {
    json out = json::array();
    for (const auto &l : w.letters) {
        if (const auto *s = std::get_if<letters::Shift>(&l)) {
            out.push_back({{"shift", s->amount}});
        } else if (const auto *g = std::get_if<letters::Shear>(&l)) {
            out.push_back({{"g", {{"n", g->n}, {"c", g->c}}}});
        } else if (const auto *u = std::get_if<letters::UpperShear>(&l)) {
            out.push_back({{"gu", {{"n", u->n}, {"c", u->c}}}});
        } else if (const auto *f = std::get_if<letters::Local>(&l)) {
            out.push_back({{"f", {{"c", f->c}}}});
        }
    }
    return out;
}

GeneratorWord word_from_json(const json &j, Prime modulus) {
    if (!j.is_array()) {
        malformed("a word must be an array of letters");
    }
    GeneratorWord w(modulus);
    auto constant = [&](const json &body) {
        return FieldElement(integer(field(body, "c"), "c"), modulus).value();
    };
    auto index = [&](const json &body) {
        std::int64_t n = integer(field(body, "n"), "n");
        if (n < 0) {
            malformed("shear index must be non-negative");
        }
        return n;
    };
    for (const json &letter : j) {
        if (!letter.is_object() || letter.size() != 1) {
            malformed("each letter must be an object with one key");
        }
        const std::string &kind = letter.begin().key();
        const json &body = letter.begin().value();
        if (kind == "shift") {
            w.letters.push_back(letters::Shift{integer(body, "shift")});
        } else if (kind == "g") {
            w.letters.push_back(letters::Shear{index(body), constant(body)});
        } else if (kind == "gu") {
            w.letters.push_back(letters::UpperShear{index(body), constant(body)});
        } else if (kind == "f") {
            std::uint32_t c = constant(body);
            if (c == 0) {
                malformed("local letter needs a nonzero constant");
            }
            w.letters.push_back(letters::Local{c});
        } else {
            malformed("unknown letter \"" + kind + "\"");
        }
    }
    return w;
}

json to_json(const PhaseFunction &phi) {
    return {
        {"order", phi.gen_plus.order()},
        {"gen_plus", phi.gen_plus.numerator()},
        {"gen_minus", phi.gen_minus.numerator()},
    };
}

PhaseFunction phase_from_json(const json &j, const ScaMatrix &automaton) {
    std::uint32_t order = phase_order(automaton.modulus());
    std::int64_t declared = integer(field(j, "order"), "order");
    if (declared != order) {
        throw MismatchError("phase order " + std::to_string(declared) + " does not match the automaton's prime");
    }
    return {automaton, PhaseExponent(integer(field(j, "gen_plus"), "gen_plus"), order),
            PhaseExponent(integer(field(j, "gen_minus"), "gen_minus"), order)};
}

json to_json(const PhaseVector &xi) {
    return json::array({xi.plus.str(), xi.minus.str()});
}

PhaseVector vector_from_json(const json &j, Prime modulus, std::size_t dim) {
    if (!j.is_array() || j.size() != 2) {
        malformed("a phase vector must be a pair of polynomial strings");
    }
    return {poly(j[0], modulus, dim), poly(j[1], modulus, dim)};
}

}  // namespace cqca
