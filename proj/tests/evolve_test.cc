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

#include "cqca/evolve.h"

#include <gtest/gtest.h>
#include <set>

#include "cqca/errors.h"
#include "cqca/factor.h"

using namespace cqca;

namespace {

std::vector<std::set<std::int64_t>> support_track(const EvolutionTrace &trace) {
    std::vector<std::set<std::int64_t>> out(static_cast<std::size_t>(trace.steps + 1));
    for (const auto &row : trace.rows) {
        out[static_cast<std::size_t>(row.t)].insert(row.x[0]);
    }
    return out;
}

}  // namespace

TEST(evolve, shift_translates) {
    Prime p(2);
    EvolutionTrace trace = evolve(shift(p, Exponent{1}), e_plus(p, Exponent{0}), 3);
    EXPECT_EQ(support_track(trace), (std::vector<std::set<std::int64_t>>{{0}, {1}, {2}, {3}}));
}

TEST(evolve, shear_spreads_to_plus_minus_n) {
    Prime p(2);
    EvolutionTrace trace = evolve(shear_g(p, 1, FieldElement(1, p)), e_plus(p, Exponent{0}), 1);
    std::vector<TraceRow> step1;
    for (const auto &row : trace.rows) {
        if (row.t == 1) {
            step1.push_back(row);
        }
    }
    EXPECT_EQ(step1, (std::vector<TraceRow>{{1, Exponent{-1}, 0, 1}, {1, Exponent{0}, 1, 0}, {1, Exponent{1}, 0, 1}}));
    for (std::int64_t n = 1; n <= 4; n++) {
        EvolutionTrace tn = evolve(shear_g(p, n, FieldElement(1, p)), e_plus(p, Exponent{0}), 1);
        EXPECT_EQ(support_track(tn)[1], (std::set<std::int64_t>{-n, 0, n}));
    }
}

TEST(evolve, local_rotation_never_spreads) {
    Prime p(5);
    PhaseVector xi(LaurentPoly::from_coefficients(p, -1, {1, 2, 3}), LaurentPoly::monomial(p, Exponent{4}));
    EvolutionTrace trace = evolve(local_f(FieldElement(3, p)), xi, 12);
    for (const auto &sites : support_track(trace)) {
        EXPECT_EQ(sites, (std::set<std::int64_t>{-1, 0, 1, 4}));
    }
}

TEST(evolve, light_cone_bound_holds_for_random_automata) {
    Prime p(3);
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        ScaMatrix s = multiply_word(random_word(p, 6, 2, seed));
        EXPECT_NO_THROW(evolve(s, e_minus(p, Exponent{0}), 10));
    }
    EXPECT_THROW(evolve(ScaMatrix::identity(p, 1), e_plus(p, Exponent{0}), -1), DomainError);
}

TEST(render, csv) {
    Prime p(3);
    EvolutionTrace trace = evolve(shear_g(p, 1, FieldElement(1, p)), e_plus(p, Exponent{0}), 1);
    EXPECT_EQ(render_csv(trace), "t,x,plus,minus\n0,0,1,0\n1,-1,0,1\n1,0,1,0\n1,1,0,1\n");
    EvolutionTrace trace2 = evolve(shift(p, Exponent{1, -1}), e_minus(p, Exponent{0, 0}), 1);
    EXPECT_EQ(render_csv(trace2), "t,x,plus,minus\n0,0;0,0,1\n1,1;-1,0,1\n");
}

TEST(render, ascii) {
    Prime p(2);
    EvolutionTrace trace = evolve(shear_g(p, 1, FieldElement(1, p)), e_plus(p, Exponent{0}), 2);
    EXPECT_EQ(render_width(trace), 5);
    // g1^2 e+ = (1, 2 b1) = (1, 0) in characteristic 2.
    EXPECT_EQ(render_ascii(trace), "  +  \n -+- \n  +  \n");
    PhaseVector both = e_plus(p, Exponent{0}) + e_minus(p, Exponent{0});
    EXPECT_EQ(render_ascii(evolve(ScaMatrix::identity(p, 1), both, 0)), "*\n");
}

TEST(render, ascii_width_cap) {
    Prime p(2);
    ScaMatrix wide = shear_g(p, 50, FieldElement(1, p));
    EvolutionTrace trace = evolve(wide, e_plus(p, Exponent{0}), 3);
    EXPECT_GT(render_width(trace), kMaxAsciiColumns);
    EXPECT_THROW(render_ascii(trace), DomainError);
    EXPECT_THROW(render_ascii(evolve(shift(p, Exponent{1, 0}), e_plus(p, Exponent{0, 0}), 1)), DomainError);
}

TEST(render, pgm) {
    Prime p(2);
    EvolutionTrace trace = evolve(shear_g(p, 1, FieldElement(1, p)), e_plus(p, Exponent{0}), 1);
    std::string image = render_pgm(trace);
    std::string header = "P5\n3 2\n255\n";
    ASSERT_EQ(image.size(), header.size() + 6);
    EXPECT_EQ(image.substr(0, header.size()), header);
    std::string pixels = image.substr(header.size());
    EXPECT_EQ(pixels, std::string({0, 96, 0, char(160), 96, char(160)}));
}
