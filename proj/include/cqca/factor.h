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

#ifndef CQCA_FACTOR_H
#define CQCA_FACTOR_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cqca/sca.h"

namespace cqca {

namespace letters {

/// u^amount times the identity.
struct Shift {
    std::int64_t amount;
    bool operator==(const Shift &) const = default;
};

/// ((1, 0), (c b_n, 1)).
struct Shear {
    std::int64_t n;
    std::uint32_t c;
    bool operator==(const Shear &) const = default;
};

/// ((1, c b_n), (0, 1)).
struct UpperShear {
    std::int64_t n;
    std::uint32_t c;
    bool operator==(const UpperShear &) const = default;
};

/// ((0, c), (-1/c, 0)).
struct Local {
    std::uint32_t c;
    bool operator==(const Local &) const = default;
};

}  // namespace letters

using GeneratorLetter = std::variant<letters::Shift, letters::Shear, letters::UpperShear, letters::Local>;

/// Matrix of a single letter in one dimension.
ScaMatrix letter_matrix(Prime modulus, const GeneratorLetter &letter);

/// Ordered product of elementary one-dimensional automata. The letters multiply left to right.
struct GeneratorWord {
    explicit GeneratorWord(Prime modulus) : modulus(modulus) {
    }
    GeneratorWord(Prime modulus, std::vector<GeneratorLetter> letters) : modulus(modulus), letters(std::move(letters)) {
    }

    /// Amount of the leading Shift letter, 0 when there is none.
    std::int64_t shift() const;

    bool operator==(const GeneratorWord &) const = default;

    Prime modulus;
    std::vector<GeneratorLetter> letters;
};

std::string to_string(const GeneratorLetter &letter);
std::ostream &operator<<(std::ostream &out, const GeneratorWord &w);

ScaMatrix multiply_word(const GeneratorWord &w);

/// One pass of the Euclidean reduction, reported to a FactorizeObserver.
struct ReductionStep {
    std::size_t iteration;
    /// Degree of the lower-left entry after the step. Strictly decreasing across steps.
    Degree lower_left_degree;
};

using FactorizeObserver = std::function<void(const ReductionStep &)>;

/// Writes a one-dimensional symplectic automaton as Shift(a) followed by shears and local rotations.
///
/// The shift is split off with classify(); the SL(2) core is then column-reduced by left multiplication
/// with inverse generators. Each pass divides the lower-left entry by the upper-left entry in the
/// palindrome ring (emitting one Shear letter per nonzero symmetric coordinate of the quotient) and
/// swaps rows with Local(1) if a nonzero remainder is left. The remaining upper triangular matrix
/// ((c, b), (0, 1/c)) becomes Local(c) Local(-1) followed by UpperShear letters for b/c.
///
/// Throws NotSymplecticError, or DomainError for dimension other than 1.
GeneratorWord factorize(const ScaMatrix &s, const FactorizeObserver &observer = {});

/// Deterministic pseudo-random word for property suites. A word of positive length starts with a
/// nonzero shift with probability 1/2; the remaining letters are shears (lower and upper) with
/// n <= max_n and local rotations, all with nonzero constants.
GeneratorWord random_word(Prime modulus, std::size_t length, std::int64_t max_n, std::uint64_t seed);

}  // namespace cqca

#endif
