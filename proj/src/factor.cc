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

#include "cqca/factor.h"

#include <ostream>
#include <random>
#include <sstream>

#include "cqca/errors.h"

namespace cqca {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Working matrix of the reduction: entries of the SL(2) core still to be factored.
struct Rows {
    LaurentPoly a, b, c, d;

    /// Left multiplication by Local(1)^-1 = ((0, -1), (1, 0)).
    void swap_rows() {
        LaurentPoly na = -c;
        LaurentPoly nb = -d;
        c = std::move(a);
        d = std::move(b);
        a = std::move(na);
        b = std::move(nb);
    }
};

}  // namespace

ScaMatrix letter_matrix(Prime modulus, const GeneratorLetter &letter) {
    return std::visit(
        overloaded{
            [&](const letters::Shift &l) {
                return shift(modulus, Exponent{l.amount});
            },
            [&](const letters::Shear &l) {
                return shear_g(modulus, l.n, FieldElement(l.c, modulus));
            },
            [&](const letters::UpperShear &l) {
                return upper_shear(modulus, l.n, FieldElement(l.c, modulus));
            },
            [&](const letters::Local &l) {
                return local_f(FieldElement(l.c, modulus));
            },
        },
        letter);
}

std::int64_t GeneratorWord::shift() const {
    for (const auto &l : letters) {
        if (const auto *s = std::get_if<letters::Shift>(&l)) {
            return s->amount;
        }
    }
    return 0;
}

std::string to_string(const GeneratorLetter &letter) {
    return std::visit(
        overloaded{
            [](const letters::Shift &l) {
                return "shift(" + std::to_string(l.amount) + ")";
            },
            [](const letters::Shear &l) {
                return "g(" + std::to_string(l.n) + ", " + std::to_string(l.c) + ")";
            },
            [](const letters::UpperShear &l) {
                return "gu(" + std::to_string(l.n) + ", " + std::to_string(l.c) + ")";
            },
            [](const letters::Local &l) {
                return "f(" + std::to_string(l.c) + ")";
            },
        },
        letter);
}

std::ostream &operator<<(std::ostream &out, const GeneratorWord &w) {
    out << '[';
    for (std::size_t k = 0; k < w.letters.size(); k++) {
        out << (k ? " " : "") << to_string(w.letters[k]);
    }
    return out << ']';
}

ScaMatrix multiply_word(const GeneratorWord &w) {
    ScaMatrix result = ScaMatrix::identity(w.modulus, 1);
    for (const auto &l : w.letters) {
        result = compose(result, letter_matrix(w.modulus, l));
    }
    return result;
}

GeneratorWord factorize(const ScaMatrix &s, const FactorizeObserver &observer) {
    if (s.dim() != 1) {
        throw DomainError("factorization is only available in one dimension");
    }
    Prime p = s.modulus();
    SymplecticCertificate cert = classify(s);

    GeneratorWord word(p);
    if (cert.shift[0] != 0) {
        word.letters.push_back(letters::Shift{cert.shift[0]});
    }

    // Invariant: core = word * rows (after the shift letter).
    Rows rows{cert.core.pp, cert.core.pm, cert.core.mp, cert.core.mm};
    std::size_t iteration = 0;
    while (!rows.c.is_zero()) {
        if (rows.a.is_zero() || rows.c.degree() < rows.a.degree()) {
            rows.swap_rows();
            word.letters.push_back(letters::Local{1});
            if (rows.c.is_zero()) {
                break;
            }
        }
        PalindromeDivision division = palindrome_divmod(Palindrome(rows.c), Palindrome(rows.a));
        for (const auto &[n, coeff] : symmetric_coordinates(division.quotient)) {
            word.letters.push_back(letters::Shear{n, coeff.value()});
        }
        rows.c = division.remainder.poly();
        rows.d -= division.quotient.poly() * rows.b;
        iteration++;
        if (observer) {
            observer({iteration, rows.c.degree()});
        }
    }

    // Upper triangular with unit diagonal entries; units of the palindrome ring are constants.
    if (rows.a.degree() != Degree(0)) {
        throw std::logic_error("reduced upper-left entry " + rows.a.str() + " is not a nonzero constant");
    }
    FieldElement unit = rows.a.coefficient(Exponent{0});
    if (unit.value() != 1) {
        word.letters.push_back(letters::Local{unit.value()});
        word.letters.push_back(letters::Local{(-FieldElement(1, p)).value()});
    }
    Palindrome upper(rows.b * unit.inverse());
    for (const auto &[n, coeff] : symmetric_coordinates(upper)) {
        word.letters.push_back(letters::UpperShear{n, coeff.value()});
    }
    return word;
}

GeneratorWord random_word(Prime modulus, std::size_t length, std::int64_t max_n, std::uint64_t seed) {
    if (max_n < 0) {
        throw DomainError("max_n must be non-negative");
    }
    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t n) {
        return rng() % n;
    };
    std::uint32_t p = modulus.value();
    auto nonzero = [&]() {
        return static_cast<std::uint32_t>(1 + below(p - 1));
    };
    auto index = [&]() {
        return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max_n) + 1));
    };

    GeneratorWord w(modulus);
    for (std::size_t k = 0; k < length; k++) {
        if (k == 0 && below(2) == 0) {
            std::int64_t amount = static_cast<std::int64_t>(below(3)) + 1;
            w.letters.push_back(letters::Shift{below(2) ? amount : -amount});
            continue;
        }
        switch (below(3)) {
            case 0:
                w.letters.push_back(letters::Shear{index(), nonzero()});
                break;
            case 1:
                w.letters.push_back(letters::UpperShear{index(), nonzero()});
                break;
            default:
                w.letters.push_back(letters::Local{nonzero()});
                break;
        }
    }
    return w;
}

}  // namespace cqca
