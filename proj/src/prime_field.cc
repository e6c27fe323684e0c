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

#include "cqca/prime_field.h"

#include <limits>
#include <ostream>
#include <string>

#include "cqca/errors.h"

namespace cqca {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

Prime::Prime(std::uint64_t p) : p_(0) {
    if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p)) {
        throw DomainError("modulus " + std::to_string(p) + " is not a supported prime");
    }
    p_ = static_cast<std::uint32_t>(p);
}

namespace modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t result = 1 % p;
    std::uint32_t base = a % p;
    while (e) {
        if (e & 1) {
            result = mul(result, base, p);
        }
        base = mul(base, base, p);
        e >>= 1;
    }
    return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) {
        throw DomainError("inversion of zero in F_" + std::to_string(p));
    }
    return pow(a, p - 2, p);
}

}  // namespace modp

FieldElement::FieldElement(std::int64_t value, Prime modulus)
    : value_(modp::reduce(value, modulus.value())), modulus_(modulus) {
}

void FieldElement::check_same_modulus(const FieldElement &other) const {
    if (modulus_ != other.modulus_) {
        throw MismatchError(
            "field elements over different primes: " + std::to_string(modulus_.value()) + " vs " +
            std::to_string(other.modulus_.value()));
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    check_same_modulus(other);
    return {modp::add(value_, other.value_, modulus_.value()), modulus_, 0};
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    check_same_modulus(other);
    return {modp::sub(value_, other.value_, modulus_.value()), modulus_, 0};
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    check_same_modulus(other);
    return {modp::mul(value_, other.value_, modulus_.value()), modulus_, 0};
}

FieldElement FieldElement::operator/(const FieldElement &other) const {
    check_same_modulus(other);
    return *this * other.inverse();
}

FieldElement FieldElement::operator-() const {
    return {modp::neg(value_, modulus_.value()), modulus_, 0};
}

FieldElement FieldElement::inverse() const {
    return {modp::inv(value_, modulus_.value()), modulus_, 0};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return {modp::pow(value_, exponent, modulus_.value()), modulus_, 0};
}

std::ostream &operator<<(std::ostream &out, const FieldElement &e) {
    return out << e.value() << " mod " << e.modulus().value();
}

}  // namespace cqca
