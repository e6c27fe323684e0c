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

#ifndef CQCA_PHASE_SPACE_H
#define CQCA_PHASE_SPACE_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cqca/laurent.h"

namespace cqca {

/// A point of the discrete phase space: a finitely supported lattice function with values in F_p^2.
///
/// `plus` labels the multiplier (Z-type) part and `minus` the shift (X-type) part of the Weyl operator
/// w(xi) = tensor_x w(xi_plus(x), xi_minus(x)).
struct PhaseVector {
    PhaseVector(LaurentPoly plus, LaurentPoly minus);
    static PhaseVector zero(Prime modulus, std::size_t dim);

    Prime modulus() const {
        return plus.modulus();
    }
    std::size_t dim() const {
        return plus.dim();
    }
    bool is_zero() const {
        return plus.is_zero() && minus.is_zero();
    }
    /// Union of the supports of both components, sorted.
    std::vector<Exponent> support() const;

    PhaseVector operator+(const PhaseVector &other) const;
    PhaseVector operator-(const PhaseVector &other) const;
    /// Module action of the ring: f * (xi_plus, xi_minus).
    PhaseVector operator*(const LaurentPoly &f) const;
    PhaseVector operator*(const FieldElement &c) const;

    bool operator==(const PhaseVector &other) const = default;

    std::string str() const;

    LaurentPoly plus;
    LaurentPoly minus;
};

std::ostream &operator<<(std::ostream &out, const PhaseVector &xi);

/// Single-site generator delta_x in the plus slot.
PhaseVector e_plus(Prime modulus, const Exponent &site);
/// Single-site generator delta_x in the minus slot.
PhaseVector e_minus(Prime modulus, const Exponent &site);

/// sum_x xi_plus(x) eta_minus(x).
FieldElement beta(const PhaseVector &xi, const PhaseVector &eta);

/// beta(xi, eta) - beta(eta, xi): the commutation exponent of the Weyl operators.
FieldElement sigma(const PhaseVector &xi, const PhaseVector &eta);

/// Polynomial-valued form reflect(xi_plus) eta_minus - reflect(xi_minus) eta_plus. Its coefficient at u^x is
/// sigma(xi, translate(eta, -x)) = sigma(translate(xi, x), eta).
LaurentPoly form_sigma_poly(const PhaseVector &xi, const PhaseVector &eta);

/// Lattice translation by `shift`: both components multiplied by u^shift.
PhaseVector translate(const PhaseVector &xi, const Exponent &shift);

/// Sites of the box [-radius, radius]^dim in lexicographic order.
std::vector<Exponent> box_sites(std::size_t dim, std::int64_t radius);

/// Phase vector with values (digits[2k], digits[2k + 1]) at sites[k].
PhaseVector from_site_values(Prime modulus, const std::vector<Exponent> &sites, std::span<const std::uint32_t> digits);

}  // namespace cqca

#endif
