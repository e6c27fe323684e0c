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

#include "cqca/laurent.h"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "cqca/errors.h"

namespace cqca {

Exponent operator+(const Exponent &a, const Exponent &b) {
    Exponent result(a);
    for (std::size_t k = 0; k < result.size(); k++) {
        result[k] += b[k];
    }
    return result;
}

Exponent operator-(const Exponent &a) {
    Exponent result(a);
    for (auto &x : result) {
        x = -x;
    }
    return result;
}

Exponent zero_exponent(std::size_t dim) {
    return Exponent(dim, 0);
}

std::int64_t Degree::value() const {
    if (!value_) {
        throw DomainError("degree of the zero polynomial is minus infinity");
    }
    return *value_;
}

std::strong_ordering Degree::operator<=>(const Degree &other) const {
    if (!value_ || !other.value_) {
        return value_.has_value() <=> other.value_.has_value();
    }
    return *value_ <=> *other.value_;
}

std::ostream &operator<<(std::ostream &out, const Degree &d) {
    if (d.is_minus_infinity()) {
        return out << "-inf";
    }
    return out << d.value();
}

namespace {

bool exponent_less(const Term &a, const Term &b) {
    return a.exponent < b.exponent;
}

/// Sorts, sums repeated exponents and drops zeros.
std::vector<Term> canonicalize(std::vector<Term> terms, std::uint32_t p) {
    std::sort(terms.begin(), terms.end(), exponent_less);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coeff = modp::add(out.back().coeff, t.coeff, p);
        } else {
            out.push_back(std::move(t));
        }
        if (!out.empty() && out.back().coeff == 0) {
            out.pop_back();
        }
    }
    return out;
}

/// Merges two canonical term lists as a + sign * b.
std::vector<Term> merge(const std::vector<Term> &a, const std::vector<Term> &b, bool negate_b, std::uint32_t p) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->exponent < j->exponent)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->exponent < i->exponent) {
            out.push_back({j->exponent, negate_b ? modp::neg(j->coeff, p) : j->coeff});
            j++;
        } else {
            std::uint32_t c = negate_b ? modp::sub(i->coeff, j->coeff, p) : modp::add(i->coeff, j->coeff, p);
            if (c != 0) {
                out.push_back({i->exponent, c});
            }
            i++;
            j++;
        }
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(Prime modulus, std::size_t dim) : modulus_(modulus), dim_(dim) {
    if (dim == 0) {
        throw DomainError("lattice dimension must be positive");
    }
}

LaurentPoly LaurentPoly::constant(Prime modulus, std::size_t dim, std::int64_t c) {
    return monomial(modulus, zero_exponent(dim), c);
}

LaurentPoly LaurentPoly::monomial(Prime modulus, const Exponent &exponent, std::int64_t c) {
    LaurentPoly f(modulus, exponent.size());
    std::uint32_t r = modp::reduce(c, modulus.value());
    if (r != 0) {
        f.terms_.push_back({exponent, r});
    }
    return f;
}

LaurentPoly LaurentPoly::from_terms(
    Prime modulus, std::size_t dim, const std::vector<std::pair<Exponent, std::int64_t>> &terms) {
    LaurentPoly f(modulus, dim);
    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (const auto &[e, c] : terms) {
        f.check_exponent(e);
        raw.push_back({e, modp::reduce(c, modulus.value())});
    }
    f.terms_ = canonicalize(std::move(raw), modulus.value());
    return f;
}

LaurentPoly LaurentPoly::from_coefficients(Prime modulus, std::int64_t lowest, const std::vector<std::int64_t> &coeffs) {
    LaurentPoly f(modulus, 1);
    for (std::size_t k = 0; k < coeffs.size(); k++) {
        std::uint32_t r = modp::reduce(coeffs[k], modulus.value());
        if (r != 0) {
            f.terms_.push_back({Exponent{lowest + static_cast<std::int64_t>(k)}, r});
        }
    }
    return f;
}

void LaurentPoly::check_compatible(const LaurentPoly &other) const {
    if (modulus_ != other.modulus_) {
        throw MismatchError("polynomials over different primes");
    }
    if (dim_ != other.dim_) {
        throw MismatchError("polynomials in different lattice dimensions");
    }
}

void LaurentPoly::check_exponent(const Exponent &exponent) const {
    if (exponent.size() != dim_) {
        throw MismatchError(
            "exponent of length " + std::to_string(exponent.size()) + " in dimension " + std::to_string(dim_));
    }
}

std::vector<Exponent> LaurentPoly::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        out.push_back(t.exponent);
    }
    return out;
}

FieldElement LaurentPoly::coefficient(const Exponent &exponent) const {
    check_exponent(exponent);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exponent, 0}, exponent_less);
    if (it != terms_.end() && it->exponent == exponent) {
        return FieldElement(it->coeff, modulus_);
    }
    return FieldElement(0, modulus_);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &other) const {
    check_compatible(other);
    LaurentPoly f(modulus_, dim_);
    f.terms_ = merge(terms_, other.terms_, false, modulus_.value());
    return f;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &other) const {
    check_compatible(other);
    LaurentPoly f(modulus_, dim_);
    f.terms_ = merge(terms_, other.terms_, true, modulus_.value());
    return f;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
    return *this = *this + other;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other) {
    return *this = *this - other;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &other) const {
    check_compatible(other);
    LaurentPoly f(modulus_, dim_);
    if (is_zero() || other.is_zero()) {
        return f;
    }
    std::uint32_t p = modulus_.value();
    std::vector<Term> raw;
    raw.reserve(terms_.size() * other.terms_.size());
    for (const auto &a : terms_) {
        for (const auto &b : other.terms_) {
            raw.push_back({a.exponent + b.exponent, modp::mul(a.coeff, b.coeff, p)});
        }
    }
    f.terms_ = canonicalize(std::move(raw), p);
    return f;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly f(*this);
    for (auto &t : f.terms_) {
        t.coeff = modp::neg(t.coeff, modulus_.value());
    }
    return f;
}

LaurentPoly LaurentPoly::operator*(const FieldElement &c) const {
    if (c.modulus() != modulus_) {
        throw MismatchError("scalar over a different prime");
    }
    LaurentPoly f(modulus_, dim_);
    if (c.is_zero()) {
        return f;
    }
    f.terms_ = terms_;
    for (auto &t : f.terms_) {
        t.coeff = modp::mul(t.coeff, c.value(), modulus_.value());
    }
    return f;
}

LaurentPoly LaurentPoly::times_monomial(const Exponent &shift) const {
    check_exponent(shift);
    LaurentPoly f(*this);
    for (auto &t : f.terms_) {
        t.exponent = t.exponent + shift;
    }
    return f;
}

LaurentPoly LaurentPoly::reflect() const {
    LaurentPoly f(modulus_, dim_);
    f.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        f.terms_.push_back({-it->exponent, it->coeff});
    }
    return f;
}

bool LaurentPoly::is_palindrome() const {
    // Sorted order reverses under negation, so compare the list against its own mirror.
    std::size_t n = terms_.size();
    for (std::size_t k = 0; k < n; k++) {
        const Term &a = terms_[k];
        const Term &b = terms_[n - 1 - k];
        if (a.coeff != b.coeff) {
            return false;
        }
        for (std::size_t i = 0; i < dim_; i++) {
            if (a.exponent[i] != -b.exponent[i]) {
                return false;
            }
        }
    }
    return true;
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1;
}

Degree LaurentPoly::degree() const {
    if (dim_ != 1) {
        throw DomainError("degree is defined for one-variable polynomials only");
    }
    return radius();
}

Degree LaurentPoly::radius() const {
    if (terms_.empty()) {
        return Degree::minus_infinity();
    }
    std::int64_t r = 0;
    for (const auto &t : terms_) {
        for (auto x : t.exponent) {
            r = std::max(r, x < 0 ? -x : x);
        }
    }
    return Degree(r);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &t : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        bool is_constant = std::all_of(t.exponent.begin(), t.exponent.end(), [](std::int64_t x) {
            return x == 0;
        });
        if (t.coeff != 1 || is_constant) {
            out << t.coeff;
        }
        for (std::size_t k = 0; k < dim_; k++) {
            std::int64_t x = t.exponent[k];
            if (x == 0) {
                continue;
            }
            out << 'u';
            if (dim_ > 1) {
                out << (k + 1);
            }
            if (x != 1) {
                out << '^' << x;
            }
        }
    }
    return out.str();
}

std::ostream &operator<<(std::ostream &out, const LaurentPoly &f) {
    return out << f.str();
}

Palindrome::Palindrome(LaurentPoly f) : poly_(std::move(f)) {
    if (!poly_.is_palindrome()) {
        throw DomainError("not a palindrome: " + poly_.str());
    }
}

Palindrome Palindrome::operator+(const Palindrome &other) const {
    return Palindrome(poly_ + other.poly_, Trusted{});
}

Palindrome Palindrome::operator-(const Palindrome &other) const {
    return Palindrome(poly_ - other.poly_, Trusted{});
}

Palindrome Palindrome::operator*(const Palindrome &other) const {
    return Palindrome(poly_ * other.poly_, Trusted{});
}

Palindrome palindromize(const LaurentPoly &g) {
    return Palindrome(g + g.reflect(), Palindrome::Trusted{});
}

LaurentPoly symmetric_basis(Prime modulus, std::int64_t n) {
    if (n < 0) {
        throw DomainError("symmetric basis index must be non-negative");
    }
    if (n == 0) {
        return LaurentPoly::constant(modulus, 1, 1);
    }
    return LaurentPoly::from_terms(modulus, 1, {{Exponent{n}, 1}, {Exponent{-n}, 1}});
}

std::vector<std::pair<std::int64_t, FieldElement>> symmetric_coordinates(const Palindrome &f) {
    if (f.poly().dim() != 1) {
        throw DomainError("symmetric coordinates are defined for one-variable palindromes only");
    }
    std::vector<std::pair<std::int64_t, FieldElement>> out;
    for (const auto &t : f.poly().terms()) {
        if (t.exponent[0] >= 0) {
            out.emplace_back(t.exponent[0], FieldElement(t.coeff, f.poly().modulus()));
        }
    }
    return out;
}

PalindromeDivision palindrome_divmod(const Palindrome &f, const Palindrome &h) {
    const LaurentPoly &hp = h.poly();
    if (f.poly().dim() != 1 || hp.dim() != 1) {
        throw DomainError("palindrome division requires one-variable polynomials");
    }
    if (f.poly().modulus() != hp.modulus()) {
        throw MismatchError("palindromes over different primes");
    }
    if (hp.is_zero()) {
        throw DomainError("division by the zero palindrome");
    }
    Prime p = hp.modulus();
    std::int64_t deg_h = hp.degree().value();
    FieldElement lead_h_inv = hp.coefficient(Exponent{deg_h}).inverse();

    LaurentPoly quotient(p, 1);
    LaurentPoly rest = f.poly();
    while (rest.degree() >= Degree(deg_h)) {
        std::int64_t deg_r = rest.degree().value();
        FieldElement c = rest.coefficient(Exponent{deg_r}) * lead_h_inv;
        LaurentPoly step = symmetric_basis(p, deg_r - deg_h) * c;
        quotient += step;
        rest -= step * hp;
    }
    return {Palindrome(std::move(quotient)), Palindrome(std::move(rest))};
}

}  // namespace cqca
