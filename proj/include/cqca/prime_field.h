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

#ifndef CQCA_PRIME_FIELD_H
#define CQCA_PRIME_FIELD_H

#include <cstdint>
#include <iosfwd>

namespace cqca {

/// A prime modulus, checked by trial division when constructed.
///
/// Moduli are limited to 32 bits so that products of two residues fit in 64 bits.
class Prime {
   public:
    explicit Prime(std::uint64_t p);

    std::uint32_t value() const {
        return p_;
    }

    bool operator==(const Prime &other) const = default;

   private:
    std::uint32_t p_;
};

/// Residue modulo a runtime prime. Always reduced into [0, p).
class FieldElement {
   public:
    FieldElement(std::int64_t value, Prime modulus);

    std::uint32_t value() const {
        return value_;
    }
    Prime modulus() const {
        return modulus_;
    }
    bool is_zero() const {
        return value_ == 0;
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement operator-() const;

    /// Multiplicative inverse. Throws DomainError on zero.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;

    bool operator==(const FieldElement &other) const = default;

   private:
    FieldElement(std::uint32_t reduced, Prime modulus, int) : value_(reduced), modulus_(modulus) {
    }
    void check_same_modulus(const FieldElement &other) const;

    std::uint32_t value_;
    Prime modulus_;
};

std::ostream &operator<<(std::ostream &out, const FieldElement &e);

bool is_prime(std::uint64_t n);

/// Modular helpers on raw residues, used by the polynomial layer to avoid re-wrapping every coefficient.
namespace modp {
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Inverse via Fermat. Throws DomainError on zero.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
}  // namespace modp

}  // namespace cqca

#endif
