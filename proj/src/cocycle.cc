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

#include "cqca/cocycle.h"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "cqca/errors.h"

namespace cqca {

std::uint32_t phase_order(Prime p) {
    return p.value() == 2 ? 4 : p.value();
}

PhaseExponent::PhaseExponent(std::int64_t numerator, std::uint32_t order)
    : numerator_(modp::reduce(numerator, order)), order_(order) {
}

PhaseExponent PhaseExponent::epsilon_power(Prime p, std::int64_t k) {
    std::uint32_t order = phase_order(p);
    return {modp::reduce(k, p.value()) * static_cast<std::int64_t>(order / p.value()), order};
}

PhaseExponent PhaseExponent::operator+(const PhaseExponent &other) const {
    if (order_ != other.order_) {
        throw MismatchError("phases from different phase groups");
    }
    return {static_cast<std::int64_t>(numerator_) + other.numerator_, order_};
}

PhaseExponent PhaseExponent::operator-() const {
    return {-static_cast<std::int64_t>(numerator_), order_};
}

std::complex<double> PhaseExponent::value() const {
    return std::polar(1.0, 2 * std::numbers::pi * numerator_ / order_);
}

std::ostream &operator<<(std::ostream &out, const PhaseExponent &e) {
    return out << "exp(2 pi i " << e.numerator() << "/" << e.order() << ")";
}

namespace {

/// Exponent of epsilon in phi(xi + eta) / (phi(xi) phi(eta)).
FieldElement cocycle_exponent(
    const PhaseVector &xi, const PhaseVector &eta, const PhaseVector &s_xi, const PhaseVector &s_eta) {
    return beta(xi, eta) - beta(s_xi, s_eta);
}

/// phi(p e) as forced by the fold; must be the trivial phase.
PhaseExponent power_defect(const ScaMatrix &s, const PhaseVector &e, const PhaseExponent &value) {
    Prime p = s.modulus();
    PhaseVector se = apply(s, e);
    std::int64_t pv = p.value();
    std::int64_t c = cocycle_exponent(e, e, se, se).value();
    PhaseExponent total(static_cast<std::int64_t>(value.numerator()) * pv, value.order());
    // eps^(c p (p - 1) / 2), written in units of the phase group.
    std::int64_t order = value.order();
    std::int64_t eps_units = order / pv;
    return total + PhaseExponent(c * eps_units % order * ((pv * (pv - 1) / 2) % order), value.order());
}

void check_compatible(const PhaseFunction &phi, const PhaseVector &xi) {
    if (phi.automaton.modulus() != xi.modulus() || phi.automaton.dim() != xi.dim()) {
        throw MismatchError("phase vector incompatible with the automaton of the phase function");
    }
}

}  // namespace

PhaseExponent evaluate(const PhaseFunction &phi, const PhaseVector &xi) {
    check_compatible(phi, xi);
    const ScaMatrix &s = phi.automaton;
    Prime p = s.modulus();
    std::size_t dim = s.dim();
    PhaseVector s_plus = s.column_plus();
    PhaseVector s_minus = s.column_minus();

    PhaseExponent result(0, phase_order(p));
    PhaseVector partial = PhaseVector::zero(p, dim);
    PhaseVector s_partial = PhaseVector::zero(p, dim);
    auto fold = [&](const PhaseVector &e, const PhaseVector &s_e, const PhaseExponent &value) {
        FieldElement c = cocycle_exponent(partial, e, s_partial, s_e);
        result = result + value + PhaseExponent::epsilon_power(p, c.value());
        partial = partial + e;
        s_partial = s_partial + s_e;
    };
    for (const Exponent &x : xi.support()) {
        PhaseVector ep = e_plus(p, x);
        PhaseVector em = e_minus(p, x);
        PhaseVector s_ep = translate(s_plus, x);
        PhaseVector s_em = translate(s_minus, x);
        for (std::uint32_t k = 0; k < xi.plus.coefficient(x).value(); k++) {
            fold(ep, s_ep, phi.gen_plus);
        }
        for (std::uint32_t k = 0; k < xi.minus.coefficient(x).value(); k++) {
            fold(em, s_em, phi.gen_minus);
        }
    }
    return result;
}

PhaseFunction default_phase(const ScaMatrix &s) {
    if (!is_symplectic(s)) {
        throw NotSymplecticError("no Clifford automaton for the non-symplectic matrix " + s.str());
    }
    Prime p = s.modulus();
    std::uint32_t order = phase_order(p);
    Exponent origin = zero_exponent(s.dim());
    auto least_valid = [&](const PhaseVector &e, const char *name) {
        for (std::uint32_t k = 0; k < order; k++) {
            PhaseExponent candidate(k, order);
            if (power_defect(s, e, candidate).numerator() == 0) {
                return candidate;
            }
        }
        throw NoValidPhaseError(std::string("no phase value for the ") + name + " generator of " + s.str());
    };
    PhaseExponent gp = least_valid(e_plus(p, origin), "plus");
    PhaseExponent gm = least_valid(e_minus(p, origin), "minus");
    return {s, gp, gm};
}

PhaseFunction compose_phase(const PhaseFunction &phi_s, const PhaseFunction &phi_t) {
    ScaMatrix st = compose(phi_s.automaton, phi_t.automaton);
    Prime p = st.modulus();
    Exponent origin = zero_exponent(st.dim());
    auto value = [&](const PhaseVector &e) {
        return evaluate(phi_t, e) + evaluate(phi_s, apply(phi_t.automaton, e));
    };
    return {st, value(e_plus(p, origin)), value(e_minus(p, origin))};
}

std::int64_t default_validation_radius(const ScaMatrix &s) {
    return neighborhood_radius(s) + 1;
}

bool validate_cocycle(const PhaseFunction &phi, std::int64_t radius, std::uint64_t seed) {
    if (radius < 0) {
        throw DomainError("validation radius must be non-negative");
    }
    const ScaMatrix &s = phi.automaton;
    Prime p = s.modulus();
    std::uint32_t pv = p.value();
    std::vector<Exponent> sites = box_sites(s.dim(), radius);
    std::size_t slots = 2 * sites.size();

    auto holds = [&](const PhaseVector &xi, const PhaseExponent &phi_xi, const PhaseVector &s_xi,
                     const PhaseVector &eta, const PhaseExponent &phi_eta, const PhaseVector &s_eta,
                     const PhaseExponent &phi_sum) {
        FieldElement c = cocycle_exponent(xi, eta, s_xi, s_eta);
        return phi_sum == phi_xi + phi_eta + PhaseExponent::epsilon_power(p, c.value());
    };

    if (pv == 2 && slots <= 10) {
        std::size_t count = std::size_t{1} << slots;
        std::vector<PhaseVector> vectors;
        std::vector<PhaseVector> images;
        std::vector<PhaseExponent> phases;
        std::vector<std::uint32_t> digits(slots);
        for (std::size_t index = 0; index < count; index++) {
            for (std::size_t k = 0; k < slots; k++) {
                digits[k] = (index >> k) & 1;
            }
            vectors.push_back(from_site_values(p, sites, digits));
            images.push_back(apply(s, vectors.back()));
            phases.push_back(evaluate(phi, vectors.back()));
        }
        if (phases[0].numerator() != 0) {
            return false;
        }
        for (std::size_t i = 0; i < count; i++) {
            for (std::size_t j = 0; j < count; j++) {
                if (!holds(vectors[i], phases[i], images[i], vectors[j], phases[j], images[j], phases[i ^ j])) {
                    return false;
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::vector<std::uint32_t> digits(slots);
        auto random_vector = [&]() {
            for (auto &d : digits) {
                d = static_cast<std::uint32_t>(rng() % pv);
            }
            return from_site_values(p, sites, digits);
        };
        auto check = [&](const PhaseVector &xi, const PhaseVector &eta) {
            return holds(xi, evaluate(phi, xi), apply(s, xi), eta, evaluate(phi, eta), apply(s, eta),
                         evaluate(phi, xi + eta));
        };
        std::vector<PhaseVector> singles;
        for (const auto &x : sites) {
            for (std::uint32_t c = 1; c < pv; c++) {
                singles.push_back(e_plus(p, x) * FieldElement(c, p));
                singles.push_back(e_minus(p, x) * FieldElement(c, p));
            }
        }
        for (const auto &a : singles) {
            for (const auto &b : singles) {
                if (!check(a, b)) {
                    return false;
                }
            }
        }
        for (int k = 0; k < 10000; k++) {
            if (!check(random_vector(), random_vector())) {
                return false;
            }
        }
    }

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::uint32_t> digits(slots);
    for (int k = 0; k < 200; k++) {
        for (auto &d : digits) {
            d = static_cast<std::uint32_t>(rng() % pv);
        }
        PhaseVector xi = from_site_values(p, sites, digits);
        Exponent x(s.dim());
        for (auto &c : x) {
            c = static_cast<std::int64_t>(rng() % 11) - 5;
        }
        if (!(evaluate(phi, translate(xi, x)) == evaluate(phi, xi))) {
            return false;
        }
    }
    return true;
}

}  // namespace cqca
