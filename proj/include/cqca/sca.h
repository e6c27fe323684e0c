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

#ifndef CQCA_SCA_H
#define CQCA_SCA_H

#include <iosfwd>
#include <string>
#include <vector>

#include "cqca/laurent.h"
#include "cqca/phase_space.h"

namespace cqca {

/// A 2x2 matrix over the Laurent polynomial ring, acting on phase vectors by
///
///     (xi_plus, xi_minus) -> (pp xi_plus + pm xi_minus, mp xi_plus + mm xi_minus).
///
/// Nothing about symplecticity is assumed at construction; use is_symplectic() or classify().
struct ScaMatrix {
    ScaMatrix(LaurentPoly pp, LaurentPoly pm, LaurentPoly mp, LaurentPoly mm);
    static ScaMatrix identity(Prime modulus, std::size_t dim);

    Prime modulus() const {
        return pp.modulus();
    }
    std::size_t dim() const {
        return pp.dim();
    }

    /// Image of e_plus(0) and e_minus(0), i.e. the first and second columns.
    PhaseVector column_plus() const;
    PhaseVector column_minus() const;

    ScaMatrix operator*(const LaurentPoly &f) const;

    bool operator==(const ScaMatrix &other) const = default;

    std::string str() const;

    LaurentPoly pp;
    LaurentPoly pm;
    LaurentPoly mp;
    LaurentPoly mm;
};

std::ostream &operator<<(std::ostream &out, const ScaMatrix &s);

/// Result of classify(): the automaton equals u^shift times `core`, where `core` has palindromic
/// entries and determinant 1.
struct SymplecticCertificate {
    Exponent shift;
    ScaMatrix core;
};

PhaseVector apply(const ScaMatrix &s, const PhaseVector &xi);
/// Matrix product s t, i.e. apply t first.
ScaMatrix compose(const ScaMatrix &s, const ScaMatrix &t);
LaurentPoly det(const ScaMatrix &s);

/// Checks that s preserves the polynomial form on the basis vectors:
/// Sigma(s e1, s e1) = 0, Sigma(s e2, s e2) = 0, Sigma(s e1, s e2) = 1.
bool is_symplectic(const ScaMatrix &s);

/// Splits s into a lattice shift and an SL(2) core over the palindrome ring.
/// Throws NotSymplecticError when the determinant is not u^(2a) with coefficient 1, or the de-shifted
/// entries are not palindromes.
SymplecticCertificate classify(const ScaMatrix &s);

/// Group inverse. Throws NotSymplecticError when classify() fails.
ScaMatrix inverse(const ScaMatrix &s);

/// Lattice translation u^a times the identity.
ScaMatrix shift(Prime modulus, const Exponent &a);

/// Lower shear ((1, 0), (c b_n, 1)) with b_n = u^n + u^-n, and b_0 = 1. One dimension only.
ScaMatrix shear_g(Prime modulus, std::int64_t n, const FieldElement &c);
/// Upper shear ((1, c b_n), (0, 1)).
ScaMatrix upper_shear(Prime modulus, std::int64_t n, const FieldElement &c);

/// On-site rotation ((0, c), (-1/c, 0)) in the given dimension. Throws DomainError for c = 0.
ScaMatrix local_f(const FieldElement &c, std::size_t dim = 1);

/// The matrix ((f, f'), (-h', h)), with determinant f h + f' h' = 1. In characteristic 2 the sign is
/// invisible. Throws FactorizationMismatchError unless f' h' = 1 - f h.
ScaMatrix from_recipe(const Palindrome &f, const Palindrome &h, const Palindrome &f_prime, const Palindrome &h_prime);

/// Union of the supports of the four entries, sorted.
std::vector<Exponent> neighborhood(const ScaMatrix &s);

/// Largest |coordinate| over the neighborhood; 0 for the zero matrix.
std::int64_t neighborhood_radius(const ScaMatrix &s);

}  // namespace cqca

#endif
