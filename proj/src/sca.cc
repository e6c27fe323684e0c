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

#include "cqca/sca.h"

#include <algorithm>
#include <ostream>
#include <set>

#include "cqca/errors.h"

namespace cqca {

namespace {

void check_compatible(const ScaMatrix &s, const PhaseVector &xi) {
    if (s.modulus() != xi.modulus() || s.dim() != xi.dim()) {
        throw MismatchError("automaton and phase vector over different primes or dimensions");
    }
}

void require_nonnegative_index(std::int64_t n) {
    if (n < 0) {
        throw DomainError("shear index must be non-negative");
    }
}

}  // namespace

ScaMatrix::ScaMatrix(LaurentPoly pp_, LaurentPoly pm_, LaurentPoly mp_, LaurentPoly mm_)
    : pp(std::move(pp_)), pm(std::move(pm_)), mp(std::move(mp_)), mm(std::move(mm_)) {
    for (const LaurentPoly *e : {&pm, &mp, &mm}) {
        if (e->modulus() != pp.modulus() || e->dim() != pp.dim()) {
            throw MismatchError("matrix entries over different primes or dimensions");
        }
    }
}

ScaMatrix ScaMatrix::identity(Prime modulus, std::size_t dim) {
    LaurentPoly one = LaurentPoly::constant(modulus, dim, 1);
    LaurentPoly zero(modulus, dim);
    return {one, zero, zero, one};
}

PhaseVector ScaMatrix::column_plus() const {
    return {pp, mp};
}

PhaseVector ScaMatrix::column_minus() const {
    return {pm, mm};
}

ScaMatrix ScaMatrix::operator*(const LaurentPoly &f) const {
    return {pp * f, pm * f, mp * f, mm * f};
}

std::string ScaMatrix::str() const {
    return "((" + pp.str() + ", " + pm.str() + "), (" + mp.str() + ", " + mm.str() + "))";
}

std::ostream &operator<<(std::ostream &out, const ScaMatrix &s) {
    return out << s.str();
}

PhaseVector apply(const ScaMatrix &s, const PhaseVector &xi) {
    check_compatible(s, xi);
    return {s.pp * xi.plus + s.pm * xi.minus, s.mp * xi.plus + s.mm * xi.minus};
}

ScaMatrix compose(const ScaMatrix &s, const ScaMatrix &t) {
    if (s.modulus() != t.modulus() || s.dim() != t.dim()) {
        throw MismatchError("automata over different primes or dimensions");
    }
    return {
        s.pp * t.pp + s.pm * t.mp,
        s.pp * t.pm + s.pm * t.mm,
        s.mp * t.pp + s.mm * t.mp,
        s.mp * t.pm + s.mm * t.mm,
    };
}

LaurentPoly det(const ScaMatrix &s) {
    return s.pp * s.mm - s.pm * s.mp;
}

bool is_symplectic(const ScaMatrix &s) {
    PhaseVector c1 = s.column_plus();
    PhaseVector c2 = s.column_minus();
    return form_sigma_poly(c1, c1).is_zero() && form_sigma_poly(c2, c2).is_zero() &&
           form_sigma_poly(c1, c2) == LaurentPoly::constant(s.modulus(), s.dim(), 1);
}

SymplecticCertificate classify(const ScaMatrix &s) {
    LaurentPoly d = det(s);
    if (!d.is_unit()) {
        throw NotSymplecticError("determinant " + d.str() + " is not a monomial");
    }
    const Term &t = d.terms().front();
    if (t.coeff != 1) {
        throw NotSymplecticError("determinant " + d.str() + " has coefficient other than 1");
    }
    Exponent a(t.exponent.size());
    for (std::size_t k = 0; k < a.size(); k++) {
        if (t.exponent[k] % 2 != 0) {
            throw NotSymplecticError("determinant " + d.str() + " is not an even power of u");
        }
        a[k] = t.exponent[k] / 2;
    }
    Exponent back = -a;
    ScaMatrix core(s.pp.times_monomial(back), s.pm.times_monomial(back), s.mp.times_monomial(back),
                   s.mm.times_monomial(back));
    for (const LaurentPoly *e : {&core.pp, &core.pm, &core.mp, &core.mm}) {
        if (!e->is_palindrome()) {
            throw NotSymplecticError("entry " + e->str() + " of the de-shifted matrix is not a palindrome");
        }
    }
    return {std::move(a), std::move(core)};
}

ScaMatrix inverse(const ScaMatrix &s) {
    SymplecticCertificate cert = classify(s);
    const ScaMatrix &m = cert.core;
    ScaMatrix adj(m.mm, -m.pm, -m.mp, m.pp);
    return adj * LaurentPoly::monomial(s.modulus(), -cert.shift);
}

ScaMatrix shift(Prime modulus, const Exponent &a) {
    return ScaMatrix::identity(modulus, a.size()) * LaurentPoly::monomial(modulus, a);
}

ScaMatrix shear_g(Prime modulus, std::int64_t n, const FieldElement &c) {
    require_nonnegative_index(n);
    LaurentPoly one = LaurentPoly::constant(modulus, 1, 1);
    LaurentPoly zero(modulus, 1);
    return {one, zero, symmetric_basis(modulus, n) * c, one};
}

ScaMatrix upper_shear(Prime modulus, std::int64_t n, const FieldElement &c) {
    require_nonnegative_index(n);
    LaurentPoly one = LaurentPoly::constant(modulus, 1, 1);
    LaurentPoly zero(modulus, 1);
    return {one, symmetric_basis(modulus, n) * c, zero, one};
}

ScaMatrix local_f(const FieldElement &c, std::size_t dim) {
    if (c.is_zero()) {
        throw DomainError("local generator needs a nonzero constant");
    }
    Prime p = c.modulus();
    LaurentPoly zero(p, dim);
    return {zero, LaurentPoly::constant(p, dim, c.value()), LaurentPoly::constant(p, dim, (-c.inverse()).value()),
            zero};
}

ScaMatrix from_recipe(const Palindrome &f, const Palindrome &h, const Palindrome &f_prime, const Palindrome &h_prime) {
    const LaurentPoly &fp = f.poly();
    LaurentPoly one = LaurentPoly::constant(fp.modulus(), fp.dim(), 1);
    LaurentPoly target = one - fp * h.poly();
    LaurentPoly product = f_prime.poly() * h_prime.poly();
    if (product != target) {
        throw FactorizationMismatchError("f' h' = " + product.str() + " but 1 - f h = " + target.str());
    }
    return {fp, f_prime.poly(), -h_prime.poly(), h.poly()};
}

std::vector<Exponent> neighborhood(const ScaMatrix &s) {
    std::set<Exponent> sites;
    for (const LaurentPoly *e : {&s.pp, &s.pm, &s.mp, &s.mm}) {
        for (const auto &t : e->terms()) {
            sites.insert(t.exponent);
        }
    }
    return {sites.begin(), sites.end()};
}

std::int64_t neighborhood_radius(const ScaMatrix &s) {
    std::int64_t r = 0;
    for (const LaurentPoly *e : {&s.pp, &s.pm, &s.mp, &s.mm}) {
        Degree d = e->radius();
        if (!d.is_minus_infinity()) {
            r = std::max(r, d.value());
        }
    }
    return r;
}

}  // namespace cqca
