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

#ifndef CQCA_SERIALIZE_H
#define CQCA_SERIALIZE_H

#include <nlohmann/json.hpp>
#include <optional>

#include "cqca/cocycle.h"
#include "cqca/factor.h"

// JSON forms used by the command line tool and the Python module.
//
//   matrix:  {"p": 2, "d": 1, "entries": [["1", "0"], ["u^-1 + u", "1"]]}
//   word:    [{"shift": 2}, {"g": {"n": 1, "c": 1}}, {"gu": {"n": 0, "c": 1}}, {"f": {"c": 2}}]
//   phase:   {"order": 4, "gen_plus": 1, "gen_minus": 0}
//   vector:  ["1 + u", "u^-1"]
//
// Readers throw ParseError for malformed documents (offset 0 when the problem is structural rather than
// inside a polynomial string) and MismatchError when p or d disagree with an expected value.

namespace cqca {

nlohmann::json to_json(const ScaMatrix &s);
ScaMatrix matrix_from_json(
    const nlohmann::json &j, std::optional<std::uint32_t> expected_p = std::nullopt,
    std::optional<std::size_t> expected_d = std::nullopt);

nlohmann::json to_json(const GeneratorWord &w);
GeneratorWord word_from_json(const nlohmann::json &j, Prime modulus);

nlohmann::json to_json(const PhaseFunction &phi);
PhaseFunction phase_from_json(const nlohmann::json &j, const ScaMatrix &automaton);

nlohmann::json to_json(const PhaseVector &xi);
PhaseVector vector_from_json(const nlohmann::json &j, Prime modulus, std::size_t dim);

/// Parses JSON text, converting syntax errors into ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace cqca

#endif
