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

#ifndef CQCA_COCYCLE_H
#define CQCA_COCYCLE_H

#include <complex>
#include <cstdint>
#include <iosfwd>

#include "cqca/sca.h"

namespace cqca {

/// Order of the phase group: 4 for qubits (w(1,1)^2 = -1 needs i), p for odd p.
std::uint32_t phase_order(Prime p);

/// The root of unity exp(2 pi i numerator / order), stored as its exponent.
class PhaseExponent {
   public:
    PhaseExponent(std::int64_t numerator, std::uint32_t order);

    /// epsilon_p^k expressed in the phase group of p.
    static PhaseExponent epsilon_power(Prime p, std::int64_t k);

    std::uint32_t numerator() const {
        return numerator_;
    }
    std::uint32_t order() const {
        return order_;
    }

    /// Product of phases.
    PhaseExponent operator+(const PhaseExponent &other) const;
    PhaseExponent operator-() const;
    std::complex<double> value() const;

    bool operator==(const PhaseExponent &other) const = default;

   private:
    std::uint32_t numerator_;
    std::uint32_t order_;
};

std::ostream &operator<<(std::ostream &out, const PhaseExponent &e);

/// Translation invariant phase function of a Clifford automaton, fixed by its values on the single-site
/// generators e_plus(x) and e_minus(x).
///
/// Everywhere else it is defined by folding the cocycle identity
///
///     phi(xi + eta) = eps^(beta(xi, eta) - beta(s xi, s eta)) phi(xi) phi(eta)
///
/// over unit generators, visiting sites in lexicographic order and e_plus before e_minus at each site.
struct PhaseFunction {
    ScaMatrix automaton;
    PhaseExponent gen_plus;
    PhaseExponent gen_minus;
};

PhaseExponent evaluate(const PhaseFunction &phi, const PhaseVector &xi);

/// Lexicographically least (gen_plus, gen_minus) satisfying the power constraint
/// phi(e)^p eps^(p(p-1)/2 (beta(e, e) - beta(s e, s e))) = 1 for both generators.
/// Throws NotSymplecticError when s is not symplectic and NoValidPhaseError if no value works.
PhaseFunction default_phase(const ScaMatrix &s);

/// Phase function of alpha_s after alpha_t: xi -> phi_t(xi) phi_s(t xi).
PhaseFunction compose_phase(const PhaseFunction &phi_s, const PhaseFunction &phi_t);

/// Neighborhood radius + 1.
std::int64_t default_validation_radius(const ScaMatrix &s);

/// Checks the cocycle identity on pairs supported in [-radius, radius]^d and translation invariance on
/// sampled vectors. Pairs are enumerated exhaustively when there are at most 2^10 such vectors and p = 2,
/// otherwise 10^4 pseudo-random pairs plus all pairs of single-site vectors are checked.
bool validate_cocycle(const PhaseFunction &phi, std::int64_t radius, std::uint64_t seed = 0);

}  // namespace cqca

#endif
