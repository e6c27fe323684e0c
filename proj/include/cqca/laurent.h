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

#ifndef CQCA_LAURENT_H
#define CQCA_LAURENT_H

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqca/prime_field.h"

namespace cqca {

/// A lattice vector in Z^d. Doubles as the exponent of a Laurent monomial u^x.
using Exponent = boost::container::small_vector<std::int64_t, 2>;

Exponent operator+(const Exponent &a, const Exponent &b);
Exponent operator-(const Exponent &a);
Exponent zero_exponent(std::size_t dim);

/// Degree of a one-variable Laurent polynomial: the largest |exponent| in its support.
/// The zero polynomial has degree minus infinity, which compares below every integer.
class Degree {
   public:
    explicit Degree(std::int64_t value) : value_(value) {
    }
    static Degree minus_infinity() {
        return Degree();
    }

    bool is_minus_infinity() const {
        return !value_.has_value();
    }
    /// Throws DomainError for minus infinity.
    std::int64_t value() const;

    std::strong_ordering operator<=>(const Degree &other) const;
    bool operator==(const Degree &other) const = default;

   private:
    Degree() = default;
    std::optional<std::int64_t> value_;
};

std::ostream &operator<<(std::ostream &out, const Degree &d);

struct Term {
    Exponent exponent;
    std::uint32_t coeff;

    bool operator==(const Term &other) const = default;
};

/// Element of F_p[u_1^{+-1}, ..., u_d^{+-1}].
///
/// The same object stands for a finitely supported lattice function f: Z^d -> F_p, the coefficient of
/// u^x being f(x). Multiplication of polynomials is convolution of the lattice functions.
///
/// Terms are kept sorted by exponent (lexicographic) with no zero coefficients, so structural equality
/// is ring equality.
class LaurentPoly {
   public:
    LaurentPoly(Prime modulus, std::size_t dim);

    static LaurentPoly constant(Prime modulus, std::size_t dim, std::int64_t c);
    static LaurentPoly monomial(Prime modulus, const Exponent &exponent, std::int64_t c = 1);
    /// Builds from arbitrary (exponent, coefficient) pairs. Repeated exponents are summed.
    static LaurentPoly from_terms(
        Prime modulus, std::size_t dim, const std::vector<std::pair<Exponent, std::int64_t>> &terms);
    /// One-variable shorthand: coefficients for u^lowest, u^(lowest+1), ...
    static LaurentPoly from_coefficients(Prime modulus, std::int64_t lowest, const std::vector<std::int64_t> &coeffs);

    Prime modulus() const {
        return modulus_;
    }
    std::size_t dim() const {
        return dim_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    std::size_t num_terms() const {
        return terms_.size();
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }
    std::vector<Exponent> support() const;
    FieldElement coefficient(const Exponent &exponent) const;

    LaurentPoly operator+(const LaurentPoly &other) const;
    LaurentPoly operator-(const LaurentPoly &other) const;
    LaurentPoly operator*(const LaurentPoly &other) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const FieldElement &c) const;
    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);

    /// Multiplication by u^shift, i.e. translation of the lattice function by `shift`.
    LaurentPoly times_monomial(const Exponent &shift) const;

    /// u_k -> u_k^{-1} for every k; reflection of the lattice function at the origin.
    LaurentPoly reflect() const;
    bool is_palindrome() const;

    /// Nonzero multiple of a single monomial. These are exactly the units of the ring.
    bool is_unit() const;
    /// Degree; requires dim() == 1.
    Degree degree() const;
    /// Largest |coordinate| over the support; minus infinity for zero. Any dimension.
    Degree radius() const;

    bool operator==(const LaurentPoly &other) const = default;

    std::string str() const;

   private:
    void check_compatible(const LaurentPoly &other) const;
    void check_exponent(const Exponent &exponent) const;

    Prime modulus_;
    std::size_t dim_;
    std::vector<Term> terms_;
};

std::ostream &operator<<(std::ostream &out, const LaurentPoly &f);

/// A Laurent polynomial known to be reflection invariant.
class Palindrome {
   public:
    /// Throws DomainError when `f` is not reflection invariant.
    explicit Palindrome(LaurentPoly f);

    const LaurentPoly &poly() const {
        return poly_;
    }
    Palindrome operator+(const Palindrome &other) const;
    Palindrome operator-(const Palindrome &other) const;
    Palindrome operator*(const Palindrome &other) const;

    bool operator==(const Palindrome &other) const = default;

   private:
    struct Trusted {};
    Palindrome(LaurentPoly f, Trusted) : poly_(std::move(f)) {
    }
    friend Palindrome palindromize(const LaurentPoly &g);

    LaurentPoly poly_;
};

/// g + reflect(g).
Palindrome palindromize(const LaurentPoly &g);

/// Symmetric basis element b_n = u^n + u^-n for n >= 1, and b_0 = 1. One variable.
LaurentPoly symmetric_basis(Prime modulus, std::int64_t n);

/// Coordinates of a one-variable palindrome in the basis {b_0 = 1, b_n = u^n + u^-n}: (n, c_n) pairs with
/// c_n != 0, ascending in n.
std::vector<std::pair<std::int64_t, FieldElement>> symmetric_coordinates(const Palindrome &f);

struct PalindromeDivision {
    Palindrome quotient;
    Palindrome remainder;
};

/// Euclidean division in the one-variable palindrome ring: f = q h + r with deg r < deg h.
/// Throws DomainError when h is zero or the polynomials are not one-variable.
PalindromeDivision palindrome_divmod(const Palindrome &f, const Palindrome &h);

}  // namespace cqca

#endif
