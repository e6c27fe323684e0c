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

#include "cqca/phase_space.h"

#include <algorithm>
#include <ostream>

#include "cqca/errors.h"

namespace cqca {

namespace {

void check_compatible(const PhaseVector &a, const PhaseVector &b) {
    if (a.modulus() != b.modulus() || a.dim() != b.dim()) {
        throw MismatchError("phase vectors over different primes or dimensions");
    }
}

/// sum over the common support of f(x) g(x).
std::uint32_t pointwise_dot(const LaurentPoly &f, const LaurentPoly &g, std::uint32_t p) {
    std::uint64_t acc = 0;
    auto i = f.terms().begin();
    auto j = g.terms().begin();
    while (i != f.terms().end() && j != g.terms().end()) {
        if (i->exponent < j->exponent) {
            ++i;
        } else if (j->exponent < i->exponent) {
            ++j;
        } else {
            acc = (acc + std::uint64_t{i->coeff} * j->coeff) % p;
            ++i;
            ++j;
        }
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

PhaseVector::PhaseVector(LaurentPoly plus_, LaurentPoly minus_) : plus(std::move(plus_)), minus(std::move(minus_)) {
    if (plus.modulus() != minus.modulus() || plus.dim() != minus.dim()) {
        throw MismatchError("phase vector components over different primes or dimensions");
    }
}

PhaseVector PhaseVector::zero(Prime modulus, std::size_t dim) {
    return {LaurentPoly(modulus, dim), LaurentPoly(modulus, dim)};
}

std::vector<Exponent> PhaseVector::support() const {
    std::vector<Exponent> out;
    auto a = plus.support();
    auto b = minus.support();
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PhaseVector PhaseVector::operator+(const PhaseVector &other) const {
    return {plus + other.plus, minus + other.minus};
}

PhaseVector PhaseVector::operator-(const PhaseVector &other) const {
    return {plus - other.plus, minus - other.minus};
}

PhaseVector PhaseVector::operator*(const LaurentPoly &f) const {
    return {plus * f, minus * f};
}

PhaseVector PhaseVector::operator*(const FieldElement &c) const {
    return {plus * c, minus * c};
}

std::string PhaseVector::str() const {
    return "(\"" + plus.str() + "\", \"" + minus.str() + "\")";
}

std::ostream &operator<<(std::ostream &out, const PhaseVector &xi) {
    return out << xi.str();
}

PhaseVector e_plus(Prime modulus, const Exponent &site) {
    return {LaurentPoly::monomial(modulus, site), LaurentPoly(modulus, site.size())};
}

PhaseVector e_minus(Prime modulus, const Exponent &site) {
    return {LaurentPoly(modulus, site.size()), LaurentPoly::monomial(modulus, site)};
}

FieldElement beta(const PhaseVector &xi, const PhaseVector &eta) {
    check_compatible(xi, eta);
    Prime p = xi.modulus();
    return FieldElement(pointwise_dot(xi.plus, eta.minus, p.value()), p);
}

FieldElement sigma(const PhaseVector &xi, const PhaseVector &eta) {
    return beta(xi, eta) - beta(eta, xi);
}

LaurentPoly form_sigma_poly(const PhaseVector &xi, const PhaseVector &eta) {
    check_compatible(xi, eta);
    return xi.plus.reflect() * eta.minus - xi.minus.reflect() * eta.plus;
}

PhaseVector translate(const PhaseVector &xi, const Exponent &shift) {
    return {xi.plus.times_monomial(shift), xi.minus.times_monomial(shift)};
}

std::vector<Exponent> box_sites(std::size_t dim, std::int64_t radius) {
    std::vector<Exponent> out;
    if (radius < 0) {
        return out;
    }
    Exponent x(dim, -radius);
    while (true) {
        out.push_back(x);
        std::size_t k = dim;
        while (k > 0 && x[k - 1] == radius) {
            x[k - 1] = -radius;
            k--;
        }
        if (k == 0) {
            return out;
        }
        x[k - 1]++;
    }
}

PhaseVector from_site_values(Prime modulus, const std::vector<Exponent> &sites, std::span<const std::uint32_t> digits) {
    if (digits.size() != 2 * sites.size()) {
        throw MismatchError("expected two values per site");
    }
    std::size_t dim = sites.empty() ? 1 : sites.front().size();
    std::vector<std::pair<Exponent, std::int64_t>> plus, minus;
    for (std::size_t k = 0; k < sites.size(); k++) {
        if (digits[2 * k]) {
            plus.emplace_back(sites[k], digits[2 * k]);
        }
        if (digits[2 * k + 1]) {
            minus.emplace_back(sites[k], digits[2 * k + 1]);
        }
    }
    return {LaurentPoly::from_terms(modulus, dim, plus), LaurentPoly::from_terms(modulus, dim, minus)};
}

}  // namespace cqca
