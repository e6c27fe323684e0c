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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cqca/cocycle.h"
#include "cqca/errors.h"
#include "cqca/factor.h"
#include "cqca/oracle.h"

using namespace cqca;

namespace {

// Pinned thresholds.
constexpr int kSuiteWordsPerPrime = 1000;
constexpr int kSuiteCorruptionsPerPrime = 1000;
constexpr std::size_t kMaxWordLength = 8;
constexpr std::int64_t kMaxShearIndex = 3;
constexpr double kSuiteSeconds = 30.0;
constexpr std::int64_t kRoundTripMaxDegree = 24;
constexpr double kFactorSecondsPerMatrix = 1.0;
constexpr int kFormTriples = 1000;
constexpr int kSigmaPairs = 1000;
constexpr std::size_t kOracleSitesP2 = 4;
constexpr std::size_t kOracleSitesP3 = 3;
constexpr double kOracleTolerance = 1e-10;
constexpr double kOracleSeconds = 60.0;
constexpr std::int64_t kLightConeSteps = 10;
constexpr std::int64_t kLightConeShearMax = 6;
constexpr int kRecipePairs = 100;
constexpr std::int64_t kRecipeMaxDegree = 6;
constexpr std::int64_t kGeneratorMaxN = 6;
constexpr std::uint64_t kSeed = 20260101;

const std::uint32_t kPrimes[] = {2, 3, 5};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const std::string &id, bool passed, const std::string &detail) {
    std::printf("[%s] criterion %s: %s\n", passed ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !passed;
}

void note(const std::string &id, bool passed, const std::string &detail) {
    std::printf("[%s] supplementary %s: %s\n", passed ? "pass" : "fail", id.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::int64_t uniform(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

LaurentPoly random_poly(Prime p, std::size_t dim, std::mt19937_64 &rng) {
    std::vector<std::pair<Exponent, std::int64_t>> terms;
    for (std::int64_t k = uniform(rng, 0, 4); k > 0; k--) {
        Exponent e(dim, 0);
        for (auto &c : e) {
            c = uniform(rng, -3, 3);
        }
        terms.emplace_back(e, uniform(rng, 0, p.value() - 1));
    }
    return LaurentPoly::from_terms(p, dim, terms);
}

PhaseVector random_vector(Prime p, std::size_t dim, std::mt19937_64 &rng) {
    return {random_poly(p, dim, rng), random_poly(p, dim, rng)};
}

LaurentPoly random_palindrome(Prime p, std::mt19937_64 &rng) {
    std::vector<std::pair<Exponent, std::int64_t>> terms;
    for (std::int64_t n = 0, degree = uniform(rng, 0, kRecipeMaxDegree); n <= degree; n++) {
        std::int64_t c = uniform(rng, 0, p.value() - 1);
        terms.emplace_back(Exponent{n}, c);
        if (n) {
            terms.emplace_back(Exponent{-n}, c);
        }
    }
    return LaurentPoly::from_terms(p, 1, terms);
}

std::int64_t max_entry_degree(const ScaMatrix &s) {
    std::int64_t d = 0;
    for (const LaurentPoly *e : {&s.pp, &s.pm, &s.mp, &s.mm}) {
        if (!e->is_zero()) {
            d = std::max(d, e->radius().value());
        }
    }
    return d;
}

struct SuiteEntry {
    ScaMatrix matrix;
    bool symplectic;
};

std::vector<SuiteEntry> suite;

void criterion_equivalence() {
    auto start = Clock::now();
    std::size_t disagreements = 0, exceptions = 0, words = 0, corruptions = 0;
    std::string first_problem;
    auto examine = [&](const ScaMatrix &s) {
        try {
            bool form_ok = is_symplectic(s);
            bool classified = true;
            try {
                SymplecticCertificate cert = classify(s);
                classified = det(cert.core) == LaurentPoly::constant(s.modulus(), 1, 1);
            } catch (const NotSymplecticError &) {
                classified = false;
            }
            if (form_ok != classified) {
                disagreements++;
                if (first_problem.empty()) {
                    first_problem = "; first disagreement " + s.str();
                }
            }
            suite.push_back({s, form_ok});
        } catch (const std::exception &e) {
            exceptions++;
            if (first_problem.empty()) {
                first_problem = std::string("; first exception ") + e.what();
            }
        }
    };
    for (std::uint32_t pv : kPrimes) {
        Prime p(pv);
        std::mt19937_64 rng(kSeed + pv);
        for (int k = 0; k < kSuiteWordsPerPrime; k++) {
            ScaMatrix s = multiply_word(random_word(p, uniform(rng, 0, kMaxWordLength), kMaxShearIndex, rng()));
            examine(s);
            words++;
        }
        for (int k = 0; k < kSuiteCorruptionsPerPrime; k++) {
            ScaMatrix s = multiply_word(random_word(p, uniform(rng, 0, kMaxWordLength), kMaxShearIndex, rng()));
            LaurentPoly *entries[] = {&s.pp, &s.pm, &s.mp, &s.mm};
            *entries[uniform(rng, 0, 3)] +=
                LaurentPoly::monomial(p, Exponent{uniform(rng, -4, 4)}, uniform(rng, 1, pv - 1));
            examine(s);
            corruptions++;
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << words << " word matrices + " << corruptions << " corruptions over p in {2,3,5}: " << disagreements
           << " disagreements, " << exceptions << " exceptions, " << elapsed << " s (limit " << kSuiteSeconds << " s)"
           << first_problem;
    report("1 (form criterion <=> shift x SL(2, palindromes) classification)",
           disagreements == 0 && exceptions == 0 && words >= 1000 && corruptions >= 1000 && elapsed < kSuiteSeconds,
           detail.str());
}

void criterion_round_trip() {
    std::size_t checked = 0, mismatches = 0, shift_errors = 0, slow = 0, errors = 0;
    double worst = 0;
    std::string first_problem;
    for (const auto &entry : suite) {
        if (!entry.symplectic || max_entry_degree(entry.matrix) > kRoundTripMaxDegree) {
            continue;
        }
        checked++;
        try {
            auto start = Clock::now();
            GeneratorWord w = factorize(entry.matrix);
            ScaMatrix back = multiply_word(w);
            double elapsed = seconds_since(start);
            worst = std::max(worst, elapsed);
            slow += elapsed >= kFactorSecondsPerMatrix;
            if (!(back == entry.matrix)) {
                mismatches++;
                if (first_problem.empty()) {
                    first_problem = "; first mismatch " + entry.matrix.str();
                }
            }
            if (!(Exponent{w.shift()} == classify(entry.matrix).shift)) {
                shift_errors++;
            }
        } catch (const std::exception &e) {
            errors++;
            if (first_problem.empty()) {
                first_problem = std::string("; first error ") + e.what();
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " symplectic matrices (entry degree <= " << kRoundTripMaxDegree << "): " << mismatches
           << " product mismatches, " << shift_errors << " shift mismatches, " << errors << " errors, slowest "
           << worst << " s (limit " << kFactorSecondsPerMatrix << " s)" << first_problem;
    report("2 (factorization round trip)", checked > 0 && mismatches == 0 && shift_errors == 0 && errors == 0 && slow == 0,
           detail.str());
}

void criterion_form_preservation() {
    std::mt19937_64 rng(kSeed + 3);
    std::size_t sigma_failures = 0, poly_failures = 0;
    int done = 0;
    std::vector<const SuiteEntry *> symplectic;
    for (const auto &entry : suite) {
        if (entry.symplectic) {
            symplectic.push_back(&entry);
        }
    }
    for (; done < kFormTriples && !symplectic.empty(); done++) {
        const ScaMatrix &s = symplectic[static_cast<std::size_t>(uniform(rng, 0, symplectic.size() - 1))]->matrix;
        PhaseVector xi = random_vector(s.modulus(), 1, rng);
        PhaseVector eta = random_vector(s.modulus(), 1, rng);
        PhaseVector sxi = apply(s, xi), seta = apply(s, eta);
        sigma_failures += !(sigma(sxi, seta) == sigma(xi, eta));
        poly_failures += !(form_sigma_poly(sxi, seta) == form_sigma_poly(xi, eta));
    }
    std::ostringstream detail;
    detail << done << " random (s, xi, eta) triples: " << sigma_failures << " sigma failures, " << poly_failures
           << " polynomial-form failures (exact)";
    report("3 (form preservation)", done == kFormTriples && sigma_failures == 0 && poly_failures == 0, detail.str());
}

/// Compares coefficient x of the polynomial form with sigma against eta translated by sign * x.
struct SigmaScan {
    std::size_t pairs = 0;
    std::size_t bad_pairs = 0;
    std::size_t bad_coefficients = 0;
    std::string example;
};

SigmaScan scan_sigma_identity(int sign) {
    SigmaScan scan;
    std::mt19937_64 rng(kSeed + 4);
    for (int k = 0; k < kSigmaPairs; k++) {
        Prime p(kPrimes[k % 3]);
        std::size_t dim = 1 + static_cast<std::size_t>(k % 2);
        PhaseVector xi = random_vector(p, dim, rng);
        PhaseVector eta = random_vector(p, dim, rng);
        LaurentPoly big = form_sigma_poly(xi, eta);
        bool bad = false;
        for (const Exponent &x : box_sites(dim, 6)) {
            Exponent shift_by = sign > 0 ? x : -x;
            if (!(big.coefficient(x) == sigma(xi, translate(eta, shift_by)))) {
                scan.bad_coefficients++;
                if (!bad && scan.example.empty()) {
                    std::ostringstream out;
                    out << "xi = " << xi << ", eta = " << eta << ", coefficient at x = (";
                    for (std::size_t i = 0; i < x.size(); i++) {
                        out << (i ? "," : "") << x[i];
                    }
                    out << ") is " << big.coefficient(x) << " but sigma gives "
                        << sigma(xi, translate(eta, shift_by));
                    scan.example = out.str();
                }
                bad = true;
            }
        }
        scan.pairs++;
        scan.bad_pairs += bad;
    }
    return scan;
}

void criterion_sigma_consistency() {
    SigmaScan literal = scan_sigma_identity(+1);
    std::ostringstream detail;
    detail << "Sigma(xi,eta)[x] == sigma(xi, translate(eta, x)) on " << literal.pairs
           << " random pairs, d in {1,2}: " << literal.bad_pairs << " pairs violate it (" << literal.bad_coefficients
           << " coefficients)";
    if (!literal.example.empty()) {
        detail << "; e.g. " << literal.example;
    }
    report("4 (polynomial form vs translated sigma)", literal.bad_pairs == 0, detail.str());

    SigmaScan reflected = scan_sigma_identity(-1);
    std::ostringstream more;
    more << "Sigma(xi,eta)[x] == sigma(xi, translate(eta, -x)) on " << reflected.pairs << " pairs: "
         << reflected.bad_pairs << " violations";
    note("4' (same identity with the translation reversed)", reflected.bad_pairs == 0, more.str());
}

void criterion_oracle() {
    auto start = Clock::now();
    std::size_t pairs = 0, weyl_failures = 0, commutation_failures = 0;
    std::size_t automata = 0, action_failures = 0;
    std::string failed_names;
    for (auto [pv, max_sites] : {std::pair<std::uint32_t, std::size_t>{2, kOracleSitesP2}, {3, kOracleSitesP3}}) {
        Prime p(pv);
        for (std::size_t sites = 1; sites <= max_sites; sites++) {
            oracle::Window w(p, 0, static_cast<std::int64_t>(sites) - 1);
            std::vector<PhaseVector> vectors = oracle::vectors_on_at_most_two_sites(w);
            std::vector<oracle::DenseMatrix> weyl;
            for (const auto &v : vectors) {
                weyl.push_back(oracle::weyl_matrix(v, w));
            }
            for (std::size_t i = 0; i < vectors.size(); i++) {
                for (std::size_t j = 0; j < vectors.size(); j++) {
                    pairs++;
                    oracle::DenseMatrix product = weyl[i] * weyl[j];
                    weyl_failures += !oracle::weyl_matrix(vectors[i] + vectors[j], w)
                                          .approx_equal(product * oracle::epsilon(p, beta(vectors[i], vectors[j]).value()),
                                                        kOracleTolerance);
                    commutation_failures +=
                        !(weyl[j] * weyl[i])
                             .approx_equal(product * oracle::epsilon(p, sigma(vectors[i], vectors[j]).value()),
                                           kOracleTolerance);
                }
            }
        }
        oracle::Window w(p, 0, static_cast<std::int64_t>(max_sites) - 1);
        for (const auto &[name, s] : oracle::selftest_automata(p)) {
            automata++;
            bool ok = false;
            try {
                ok = oracle::check_clifford_action(default_phase(s), w, kSeed);
            } catch (const std::exception &) {
                ok = false;
            }
            if (!ok) {
                action_failures++;
                failed_names += " " + name + "@p=" + std::to_string(pv);
            }
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << pairs << " vector pairs on windows of <= 4 (p=2) / <= 3 (p=3) sites: " << weyl_failures
           << " Weyl-relation and " << commutation_failures << " commutation failures (tol " << kOracleTolerance
           << "); " << automata << " automata with default phases: " << action_failures << " Clifford-action failures"
           << failed_names << "; " << elapsed << " s (limit " << kOracleSeconds << " s)";
    report("5 (dense oracle)", weyl_failures == 0 && commutation_failures == 0 && action_failures == 0 &&
                                   elapsed < kOracleSeconds,
           detail.str());
}

void criterion_light_cone() {
    std::size_t checked = 0, escapes = 0, shear_failures = 0;
    for (const auto &entry : suite) {
        if (!entry.symplectic) {
            continue;
        }
        checked++;
        const ScaMatrix &s = entry.matrix;
        std::int64_t r = neighborhood_radius(s);
        PhaseVector xi = e_plus(s.modulus(), Exponent{0});
        for (std::int64_t t = 1; t <= kLightConeSteps; t++) {
            xi = apply(s, xi);
            bool inside = true;
            for (const Exponent &x : xi.support()) {
                inside = inside && std::abs(x[0]) <= t * r;
            }
            if (!inside) {
                escapes++;
                break;
            }
        }
    }
    for (std::uint32_t pv : kPrimes) {
        Prime p(pv);
        for (std::int64_t n = 1; n <= kLightConeShearMax; n++) {
            PhaseVector image = apply(shear_g(p, n, FieldElement(1, p)), e_plus(p, Exponent{0}));
            shear_failures += !(image.support() == std::vector<Exponent>{Exponent{-n}, Exponent{0}, Exponent{n}});
        }
    }
    std::ostringstream detail;
    detail << checked << " symplectic suite matrices, t <= " << kLightConeSteps << ": " << escapes
           << " leave [-tR, tR]; g_n (n <= " << kLightConeShearMax << ") one-step support != {-n,0,n}: "
           << shear_failures;
    report("6 (light cone)", checked > 0 && escapes == 0 && shear_failures == 0, detail.str());
}

void criterion_recipe() {
    std::size_t built = 0, failed = 0;
    for (std::uint32_t pv : kPrimes) {
        Prime p(pv);
        std::mt19937_64 rng(kSeed + 7 + pv);
        LaurentPoly one = LaurentPoly::constant(p, 1, 1);
        for (int k = 0; k < kRecipePairs; k++) {
            LaurentPoly f = random_palindrome(p, rng);
            LaurentPoly h = random_palindrome(p, rng);
            built++;
            try {
                failed += !is_symplectic(from_recipe(Palindrome(f), Palindrome(h), Palindrome(one - f * h), Palindrome(one)));
            } catch (const std::exception &) {
                failed++;
            }
        }
    }
    std::ostringstream detail;
    detail << built << " random palindrome pairs (degree <= " << kRecipeMaxDegree
           << ", p in {2,3,5}) with h' = 1, f' = 1 - f h: " << failed << " not symplectic";
    report("7 (recipe validity)", failed == 0, detail.str());
}

void criterion_generators() {
    std::size_t checked = 0, failed = 0;
    std::string problems;
    for (std::uint32_t pv : kPrimes) {
        Prime p(pv);
        LaurentPoly one = LaurentPoly::constant(p, 1, 1);
        for (std::uint32_t c = 1; c < pv; c++) {
            FieldElement fc(c, p);
            ScaMatrix f = local_f(fc);
            checked += 2;
            if (!is_symplectic(f) || !(det(f) == one)) {
                failed++;
                problems += " f(" + std::to_string(c) + ")@p=" + std::to_string(pv);
            }
            for (std::int64_t n = 0; n <= kGeneratorMaxN; n++) {
                checked++;
                if (!is_symplectic(shear_g(p, n, fc))) {
                    failed++;
                    problems += " g(" + std::to_string(n) + "," + std::to_string(c) + ")@p=" + std::to_string(pv);
                }
            }
        }
        FieldElement f1(1, p);
        checked++;
        ScaMatrix minus_identity = ScaMatrix::identity(p, 1) * (-one);
        if (!(compose(local_f(f1), local_f(f1)) == minus_identity)) {
            failed++;
            problems += " f1^2@p=" + std::to_string(pv);
        }
    }
    std::ostringstream detail;
    detail << checked << " checks (f_c symplectic with det 1, g_n symplectic for n <= " << kGeneratorMaxN
           << ", f_1^2 = -1): " << failed << " failures" << problems;
    report("8 (generator sanity)", failed == 0, detail.str());
}

}  // namespace

int main() {
    criterion_equivalence();
    criterion_round_trip();
    criterion_form_preservation();
    criterion_sigma_consistency();
    criterion_oracle();
    criterion_light_cone();
    criterion_recipe();
    criterion_generators();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
