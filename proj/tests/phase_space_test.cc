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

#include <gtest/gtest.h>

#include "cqca/errors.h"
#include "test_util.h"

using namespace cqca;
using cqca::testing::random_poly;
using cqca::testing::random_vector;

namespace {

LaurentPoly mono(Prime p, std::int64_t e, std::int64_t c = 1) {
    return LaurentPoly::monomial(p, Exponent{e}, c);
}

/// sum_x xi_plus(x) eta_minus(x) by coefficient lookup over a box.
FieldElement beta_by_lookup(const PhaseVector &xi, const PhaseVector &eta, std::int64_t radius) {
    FieldElement total(0, xi.modulus());
    for (const Exponent &x : box_sites(xi.dim(), radius)) {
        total = total + xi.plus.coefficient(x) * eta.minus.coefficient(x);
    }
    return total;
}

}  // namespace

TEST(phase_vector, basics) {
    Prime p(3);
    PhaseVector xi(mono(p, 1), mono(p, -1, 2));
    EXPECT_EQ(xi.support(), (std::vector<Exponent>{Exponent{-1}, Exponent{1}}));
    EXPECT_TRUE(PhaseVector::zero(p, 1).is_zero());
    EXPECT_EQ(xi - xi, PhaseVector::zero(p, 1));
    EXPECT_EQ(xi * FieldElement(2, p), PhaseVector(mono(p, 1, 2), mono(p, -1, 1)));
    EXPECT_EQ(xi.str(), "(\"u\", \"2u^-1\")");
    EXPECT_THROW(PhaseVector(mono(p, 1), LaurentPoly(Prime(2), 1)), MismatchError);
}

TEST(beta, examples) {
    Prime p(5);
    PhaseVector ones(LaurentPoly::constant(p, 1, 1), LaurentPoly::constant(p, 1, 1));
    EXPECT_EQ(beta(ones, ones).value(), 1u);
    PhaseVector a(mono(p, 1), LaurentPoly(p, 1));
    PhaseVector b(LaurentPoly(p, 1), mono(p, 2));
    EXPECT_EQ(beta(a, b).value(), 0u);
    PhaseVector c(LaurentPoly(p, 1), mono(p, 0, 3) + mono(p, 4));
    EXPECT_EQ(beta(c, ones).value(), 0u);
    EXPECT_EQ(beta(c, c).value(), 0u);
}

TEST(beta, matches_lookup) {
    std::mt19937_64 rng(11);
    for (std::uint32_t pv : cqca::testing::small_primes()) {
        for (std::size_t dim : {1u, 2u}) {
            for (int k = 0; k < 200; k++) {
                PhaseVector xi = random_vector(Prime(pv), dim, rng, 6, 2);
                PhaseVector eta = random_vector(Prime(pv), dim, rng, 6, 2);
                ASSERT_EQ(beta(xi, eta), beta_by_lookup(xi, eta, 2));
            }
        }
    }
}

TEST(sigma, examples) {
    Prime p(2);
    Exponent origin{0};
    EXPECT_EQ(sigma(e_plus(p, origin), e_minus(p, origin)).value(), 1u);
    PhaseVector xi(mono(p, 1) + mono(p, 3), mono(p, 1));
    EXPECT_EQ(sigma(xi, xi).value(), 0u);
    EXPECT_EQ(sigma(e_plus(p, Exponent{0}), e_minus(p, Exponent{1})).value(), 0u);
    Prime p3(3);
    EXPECT_EQ(sigma(e_minus(p3, origin), e_plus(p3, origin)).value(), 2u);
}

TEST(form_sigma_poly, examples) {
    Prime p(5);
    Exponent origin{0};
    EXPECT_EQ(form_sigma_poly(e_plus(p, origin), e_minus(p, origin)), LaurentPoly::constant(p, 1, 1));
    PhaseVector uu(mono(p, 1), mono(p, 1));
    EXPECT_TRUE(form_sigma_poly(uu, uu).is_zero());
    PhaseVector a(mono(p, 1), LaurentPoly(p, 1));
    EXPECT_EQ(form_sigma_poly(a, e_minus(p, origin)), mono(p, -1));
}

TEST(translate, examples) {
    Prime p(3);
    EXPECT_EQ(translate(e_plus(p, Exponent{0}), Exponent{3}), e_plus(p, Exponent{3}));
    std::mt19937_64 rng(12);
    for (int k = 0; k < 50; k++) {
        PhaseVector xi = random_vector(p, 2, rng);
        Exponent a = cqca::testing::random_exponent(rng, 2, 5);
        EXPECT_EQ(translate(xi, Exponent{0, 0}), xi);
        EXPECT_EQ(translate(translate(xi, a), -a), xi);
    }
}

// The coefficient of u^x in the polynomial form pairs xi with eta moved back by x.
TEST(form_sigma_poly, coefficients_are_translated_sigma) {
    std::mt19937_64 rng(13);
    for (std::uint32_t pv : cqca::testing::small_primes()) {
        Prime p(pv);
        for (std::size_t dim : {1u, 2u}) {
            for (int k = 0; k < 170; k++) {
                PhaseVector xi = random_vector(p, dim, rng, 4, 2);
                PhaseVector eta = random_vector(p, dim, rng, 4, 2);
                LaurentPoly big = form_sigma_poly(xi, eta);
                for (const Exponent &x : box_sites(dim, 4)) {
                    ASSERT_EQ(big.coefficient(x), sigma(xi, translate(eta, -x)));
                    ASSERT_EQ(big.coefficient(x), sigma(translate(xi, x), eta));
                }
            }
        }
    }
}

TEST(form_sigma_poly, sesquilinear_and_antisymmetric) {
    std::mt19937_64 rng(14);
    for (std::uint32_t pv : cqca::testing::small_primes()) {
        Prime p(pv);
        for (std::size_t dim : {1u, 2u}) {
            for (int k = 0; k < 100; k++) {
                PhaseVector xi = random_vector(p, dim, rng);
                PhaseVector eta = random_vector(p, dim, rng);
                LaurentPoly f = random_poly(p, dim, rng);
                LaurentPoly s = form_sigma_poly(xi, eta);
                ASSERT_EQ(form_sigma_poly(xi, eta * f), s * f);
                ASSERT_EQ(form_sigma_poly(xi * f, eta), f.reflect() * s);
                ASSERT_EQ(s, -form_sigma_poly(eta, xi).reflect());
                ASSERT_EQ(s.coefficient(zero_exponent(dim)), sigma(xi, eta));
            }
        }
    }
}

TEST(sigma, antisymmetric_and_translation_invariant) {
    std::mt19937_64 rng(15);
    for (std::uint32_t pv : cqca::testing::small_primes()) {
        Prime p(pv);
        for (int k = 0; k < 200; k++) {
            PhaseVector xi = random_vector(p, 2, rng);
            PhaseVector eta = random_vector(p, 2, rng);
            Exponent x = cqca::testing::random_exponent(rng, 2, 6);
            ASSERT_EQ(sigma(xi, eta), -sigma(eta, xi));
            ASSERT_EQ(sigma(translate(xi, x), translate(eta, x)), sigma(xi, eta));
        }
    }
}

TEST(box_sites, lexicographic) {
    EXPECT_EQ(box_sites(1, 1), (std::vector<Exponent>{Exponent{-1}, Exponent{0}, Exponent{1}}));
    auto sites = box_sites(2, 1);
    ASSERT_EQ(sites.size(), 9u);
    EXPECT_EQ(sites.front(), (Exponent{-1, -1}));
    EXPECT_EQ(sites[1], (Exponent{-1, 0}));
    EXPECT_EQ(sites.back(), (Exponent{1, 1}));
}

TEST(from_site_values, interleaves_plus_and_minus) {
    Prime p(3);
    std::vector<Exponent> sites{Exponent{0}, Exponent{1}};
    std::vector<std::uint32_t> digits{1, 0, 2, 1};
    PhaseVector xi = from_site_values(p, sites, digits);
    EXPECT_EQ(xi, PhaseVector(mono(p, 0) + mono(p, 1, 2), mono(p, 1)));
    std::vector<std::uint32_t> short_digits{1};
    EXPECT_THROW(from_site_values(p, sites, short_digits), MismatchError);
}
