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

#ifndef CQCA_ORACLE_H
#define CQCA_ORACLE_H

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqca/cocycle.h"

namespace cqca::oracle {

/// Entrywise tolerance of every dense identity check.
inline constexpr double kTolerance = 1e-10;

/// Largest Hilbert space dimension a window may span.
inline constexpr std::size_t kMaxWindowDimension = 4096;

/// Square complex matrix, row major.
class DenseMatrix {
   public:
    explicit DenseMatrix(std::size_t n);
    static DenseMatrix identity(std::size_t n);

    std::size_t size() const {
        return n_;
    }
    std::complex<double> &operator()(std::size_t row, std::size_t col) {
        return data_[row * n_ + col];
    }
    const std::complex<double> &operator()(std::size_t row, std::size_t col) const {
        return data_[row * n_ + col];
    }

    DenseMatrix operator*(const DenseMatrix &other) const;
    DenseMatrix operator*(std::complex<double> c) const;
    DenseMatrix adjoint() const;
    DenseMatrix kron(const DenseMatrix &other) const;

    /// max_ij |a_ij - b_ij|.
    double max_abs_diff(const DenseMatrix &other) const;
    bool approx_equal(const DenseMatrix &other, double tolerance = kTolerance) const;

   private:
    std::size_t n_;
    std::vector<std::complex<double>> data_;
};

bool is_unitary(const DenseMatrix &m, double tolerance = kTolerance);

/// Contiguous block of one-dimensional sites [lo, hi] with open boundary.
class Window {
   public:
    /// Throws WindowError when p^(hi - lo + 1) exceeds kMaxWindowDimension or hi < lo.
    Window(Prime modulus, std::int64_t lo, std::int64_t hi);

    Prime modulus() const {
        return modulus_;
    }
    std::int64_t lo() const {
        return lo_;
    }
    std::int64_t hi() const {
        return hi_;
    }
    std::size_t num_sites() const {
        return static_cast<std::size_t>(hi_ - lo_ + 1);
    }
    std::size_t hilbert_dimension() const;
    bool contains(const PhaseVector &xi) const;

   private:
    Prime modulus_;
    std::int64_t lo_;
    std::int64_t hi_;
};

/// Tensor product over the window of single-cell Weyl matrices w(a, b)|q> = eps^(-a q) |q + b>, with
/// eps = exp(2 pi i / p) and the lowest site as the most significant tensor factor.
///
/// With this sign, w(xi + eta) = eps^beta(xi, eta) w(xi) w(eta) and
/// w(eta) w(xi) = eps^sigma(xi, eta) w(xi) w(eta) hold as stated on the symbolic side. For p = 2 the sign
/// is immaterial: Z = w(1, 0), X = w(0, 1).
///
/// Throws WindowError when xi is not supported in the window.
DenseMatrix weyl_matrix(const PhaseVector &xi, const Window &w);

/// eps^k as a complex number.
std::complex<double> epsilon(Prime p, std::int64_t k);

/// ||w(xi + eta) - eps^beta(xi, eta) w(xi) w(eta)||_max < kTolerance.
bool check_weyl_relation(const PhaseVector &xi, const PhaseVector &eta, const Window &w);

/// ||w(eta) w(xi) - eps^sigma(xi, eta) w(xi) w(eta)||_max < kTolerance, sigma taken from the symbolic side.
bool check_commutation(const PhaseVector &xi, const PhaseVector &eta, const Window &w);

/// Reads k with w(eta) w(xi) (w(xi) w(eta))^dagger = eps^k I off the dense matrices. nullopt when the
/// group commutator is not a p-th root of unity times the identity.
std::optional<std::uint32_t> extract_commutation_exponent(const PhaseVector &xi, const PhaseVector &eta, const Window &w);

/// Sites x such that x + neighborhood(s) stays inside the window.
std::vector<std::int64_t> inner_sites(const ScaMatrix &s, const Window &w);

/// Checks that xi -> phi(xi) w(s xi) respects products of Weyl operators on the window:
///
///     phi(xi) phi(eta) w(s xi) w(s eta) = eps^(-beta(xi, eta)) phi(xi + eta) w(s (xi + eta))
///
/// for pairs supported on the inner sites. All pairs are checked when there are at most 256 inner
/// vectors, otherwise 500 seeded random pairs. Throws WindowError when no inner site exists.
bool check_clifford_action(const PhaseFunction &phi, const Window &w, std::uint64_t seed = 0);

/// Every phase vector supported on at most two sites of the window, including zero.
std::vector<PhaseVector> vectors_on_at_most_two_sites(const Window &w);

struct CheckReport {
    std::string name;
    bool passed;
    std::size_t checked;
    std::size_t failed;
    std::string detail;
};

/// The automata covered by the self test: identity, shift(1), f_c for every c, g_1 and three
/// palindrome recipe matrices, all with neighborhood radius at most 1.
std::vector<std::pair<std::string, ScaMatrix>> selftest_automata(Prime p);

/// Runs the full dense-oracle suite on a window of `window_sites` sites.
std::vector<CheckReport> run_selftest(Prime p, std::size_t window_sites, std::uint64_t seed = 0);

}  // namespace cqca::oracle

#endif
