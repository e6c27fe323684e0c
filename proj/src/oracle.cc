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

#include "cqca/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cqca/errors.h"

namespace cqca::oracle {

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), data_(n * n) {
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &other) const {
    if (n_ != other.n_) {
        throw MismatchError("dense matrices of different sizes");
    }
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t k = 0; k < n_; k++) {
            std::complex<double> a = (*this)(i, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < n_; j++) {
                out(i, j) += a * other(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(std::complex<double> c) const {
    DenseMatrix out(*this);
    for (auto &x : out.data_) {
        x *= c;
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix &other) const {
    std::size_t m = other.n_;
    DenseMatrix out(n_ * m);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            std::complex<double> a = (*this)(i, j);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t k = 0; k < m; k++) {
                for (std::size_t l = 0; l < m; l++) {
                    out(i * m + k, j * m + l) = a * other(k, l);
                }
            }
        }
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix &other) const {
    if (n_ != other.n_) {
        throw MismatchError("dense matrices of different sizes");
    }
    double worst = 0;
    for (std::size_t k = 0; k < data_.size(); k++) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

bool DenseMatrix::approx_equal(const DenseMatrix &other, double tolerance) const {
    return max_abs_diff(other) < tolerance;
}

bool is_unitary(const DenseMatrix &m, double tolerance) {
    return (m.adjoint() * m).approx_equal(DenseMatrix::identity(m.size()), tolerance);
}

Window::Window(Prime modulus, std::int64_t lo, std::int64_t hi) : modulus_(modulus), lo_(lo), hi_(hi) {
    if (hi < lo) {
        throw WindowError("empty window");
    }
    std::size_t dimension = 1;
    for (std::int64_t x = lo; x <= hi; x++) {
        dimension *= modulus.value();
        if (dimension > kMaxWindowDimension) {
            throw WindowError("window of " + std::to_string(hi - lo + 1) + " sites exceeds the dense size cap");
        }
    }
}

std::size_t Window::hilbert_dimension() const {
    std::size_t dimension = 1;
    for (std::size_t k = 0; k < num_sites(); k++) {
        dimension *= modulus_.value();
    }
    return dimension;
}

bool Window::contains(const PhaseVector &xi) const {
    if (xi.dim() != 1) {
        return false;
    }
    for (const Exponent &x : xi.support()) {
        if (x[0] < lo_ || x[0] > hi_) {
            return false;
        }
    }
    return true;
}

std::complex<double> epsilon(Prime p, std::int64_t k) {
    std::int64_t r = modp::reduce(k, p.value());
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(r) / p.value());
}

namespace {

DenseMatrix single_cell_weyl(Prime p, std::uint32_t a, std::uint32_t b) {
    std::uint32_t pv = p.value();
    DenseMatrix m(pv);
    for (std::uint32_t q = 0; q < pv; q++) {
        m((q + b) % pv, q) = epsilon(p, -static_cast<std::int64_t>(modp::mul(a, q, pv)));
    }
    return m;
}

void require_inside(const PhaseVector &xi, const Window &w) {
    if (xi.modulus() != w.modulus()) {
        throw MismatchError("phase vector and window over different primes");
    }
    if (!w.contains(xi)) {
        throw WindowError("phase vector " + xi.str() + " is not supported in the window");
    }
}

}  // namespace

DenseMatrix weyl_matrix(const PhaseVector &xi, const Window &w) {
    require_inside(xi, w);
    Prime p = w.modulus();
    DenseMatrix out = DenseMatrix::identity(1);
    for (std::int64_t x = w.lo(); x <= w.hi(); x++) {
        Exponent site{x};
        out = out.kron(single_cell_weyl(p, xi.plus.coefficient(site).value(), xi.minus.coefficient(site).value()));
    }
    return out;
}

bool check_weyl_relation(const PhaseVector &xi, const PhaseVector &eta, const Window &w) {
    DenseMatrix lhs = weyl_matrix(xi + eta, w);
    DenseMatrix rhs = (weyl_matrix(xi, w) * weyl_matrix(eta, w)) * epsilon(w.modulus(), beta(xi, eta).value());
    return lhs.approx_equal(rhs);
}

bool check_commutation(const PhaseVector &xi, const PhaseVector &eta, const Window &w) {
    DenseMatrix wx = weyl_matrix(xi, w);
    DenseMatrix we = weyl_matrix(eta, w);
    return (we * wx).approx_equal((wx * we) * epsilon(w.modulus(), sigma(xi, eta).value()));
}

std::optional<std::uint32_t> extract_commutation_exponent(const PhaseVector &xi, const PhaseVector &eta, const Window &w) {
    DenseMatrix wx = weyl_matrix(xi, w);
    DenseMatrix we = weyl_matrix(eta, w);
    DenseMatrix commutator = (we * wx) * (wx * we).adjoint();
    std::complex<double> phase = commutator(0, 0);
    Prime p = w.modulus();
    double turns = std::arg(phase) / (2 * std::numbers::pi) * p.value();
    std::int64_t k = std::llround(turns);
    if (std::abs(turns - static_cast<double>(k)) > 1e-6) {
        return std::nullopt;
    }
    if (!commutator.approx_equal(DenseMatrix::identity(commutator.size()) * epsilon(p, k))) {
        return std::nullopt;
    }
    return modp::reduce(k, p.value());
}

std::vector<std::int64_t> inner_sites(const ScaMatrix &s, const Window &w) {
    std::vector<Exponent> n = neighborhood(s);
    std::int64_t lo = w.lo();
    std::int64_t hi = w.hi();
    if (!n.empty()) {
        lo -= n.front()[0];
        hi -= n.back()[0];
    }
    std::vector<std::int64_t> out;
    for (std::int64_t x = lo; x <= hi; x++) {
        out.push_back(x);
    }
    return out;
}

bool check_clifford_action(const PhaseFunction &phi, const Window &w, std::uint64_t seed) {
    const ScaMatrix &s = phi.automaton;
    if (s.dim() != 1) {
        throw DomainError("the dense oracle works in one dimension");
    }
    if (s.modulus() != w.modulus()) {
        throw MismatchError("automaton and window over different primes");
    }
    Prime p = w.modulus();
    std::vector<std::int64_t> inner = inner_sites(s, w);
    if (inner.empty()) {
        throw WindowError("window too small for the automaton's neighborhood");
    }
    std::vector<Exponent> sites;
    for (auto x : inner) {
        sites.push_back(Exponent{x});
    }
    std::size_t slots = 2 * sites.size();
    std::uint32_t pv = p.value();

    struct Image {
        PhaseVector xi;
        std::complex<double> phase;
        DenseMatrix weyl;
    };
    auto image = [&](const PhaseVector &xi) {
        PhaseVector s_xi = apply(s, xi);
        require_inside(s_xi, w);
        return Image{xi, evaluate(phi, xi).value(), weyl_matrix(s_xi, w)};
    };
    auto holds = [&](const Image &a, const Image &b) {
        Image sum = image(a.xi + b.xi);
        DenseMatrix lhs = (a.weyl * b.weyl) * (a.phase * b.phase);
        DenseMatrix rhs = sum.weyl * (sum.phase * epsilon(p, -static_cast<std::int64_t>(beta(a.xi, b.xi).value())));
        return lhs.approx_equal(rhs);
    };

    std::size_t count = 1;
    for (std::size_t k = 0; k < slots && count <= 256; k++) {
        count *= pv;
    }
    std::vector<std::uint32_t> digits(slots);
    if (count <= 256) {
        std::vector<Image> images;
        for (std::size_t index = 0; index < count; index++) {
            std::size_t rest = index;
            for (auto &d : digits) {
                d = static_cast<std::uint32_t>(rest % pv);
                rest /= pv;
            }
            images.push_back(image(from_site_values(p, sites, digits)));
        }
        for (const auto &a : images) {
            for (const auto &b : images) {
                if (!holds(a, b)) {
                    return false;
                }
            }
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    auto random_image = [&]() {
        for (auto &d : digits) {
            d = static_cast<std::uint32_t>(rng() % pv);
        }
        return image(from_site_values(p, sites, digits));
    };
    for (int k = 0; k < 500; k++) {
        if (!holds(random_image(), random_image())) {
            return false;
        }
    }
    return true;
}

std::vector<PhaseVector> vectors_on_at_most_two_sites(const Window &w) {
    Prime p = w.modulus();
    std::uint32_t pv = p.value();
    std::vector<PhaseVector> out{PhaseVector::zero(p, 1)};
    // Nonzero single-site values (a, b).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> values;
    for (std::uint32_t a = 0; a < pv; a++) {
        for (std::uint32_t b = 0; b < pv; b++) {
            if (a || b) {
                values.emplace_back(a, b);
            }
        }
    }
    auto at = [&](std::int64_t x, std::pair<std::uint32_t, std::uint32_t> v) {
        return PhaseVector(LaurentPoly::monomial(p, Exponent{x}, v.first), LaurentPoly::monomial(p, Exponent{x}, v.second));
    };
    for (std::int64_t x = w.lo(); x <= w.hi(); x++) {
        for (auto v : values) {
            out.push_back(at(x, v));
        }
    }
    for (std::int64_t x = w.lo(); x <= w.hi(); x++) {
        for (std::int64_t y = x + 1; y <= w.hi(); y++) {
            for (auto v : values) {
                for (auto u : values) {
                    out.push_back(at(x, v) + at(y, u));
                }
            }
        }
    }
    return out;
}

std::vector<std::pair<std::string, ScaMatrix>> selftest_automata(Prime p) {
    std::vector<std::pair<std::string, ScaMatrix>> out;
    out.emplace_back("identity", ScaMatrix::identity(p, 1));
    out.emplace_back("shift(1)", shift(p, Exponent{1}));
    for (std::uint32_t c = 1; c < p.value(); c++) {
        out.emplace_back("f(" + std::to_string(c) + ")", local_f(FieldElement(c, p)));
    }
    out.emplace_back("g(1)", shear_g(p, 1, FieldElement(1, p)));

    LaurentPoly zero(p, 1);
    LaurentPoly one = LaurentPoly::constant(p, 1, 1);
    LaurentPoly b1 = symmetric_basis(p, 1);
    auto recipe = [&](const LaurentPoly &f, const LaurentPoly &h) {
        Palindrome pf(f), ph(h);
        return from_recipe(pf, ph, Palindrome(one - f * h), Palindrome(one));
    };
    out.emplace_back("recipe(1, u + u^-1)", recipe(one, b1));
    out.emplace_back("recipe(u + u^-1, 0)", recipe(b1, zero));
    out.emplace_back("recipe(u + u^-1, 1)", recipe(b1, one));
    return out;
}

std::vector<CheckReport> run_selftest(Prime p, std::size_t window_sites, std::uint64_t seed) {
    if (window_sites == 0) {
        throw WindowError("self test needs at least one site");
    }
    Window w(p, 0, static_cast<std::int64_t>(window_sites) - 1);
    std::vector<PhaseVector> vectors = vectors_on_at_most_two_sites(w);
    std::vector<DenseMatrix> weyl;
    weyl.reserve(vectors.size());
    for (const auto &v : vectors) {
        weyl.push_back(weyl_matrix(v, w));
    }

    std::vector<CheckReport> reports;
    auto report = [&](std::string name, std::size_t checked, std::size_t failed, std::string detail) {
        reports.push_back({std::move(name), failed == 0, checked, failed, std::move(detail)});
    };

    std::size_t failed = 0;
    for (const auto &m : weyl) {
        failed += !is_unitary(m);
    }
    report("unitarity", weyl.size(), failed, "");

    std::size_t relation_failed = 0;
    std::size_t commutation_failed = 0;
    std::size_t extraction_failed = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < vectors.size(); i++) {
        for (std::size_t j = 0; j < vectors.size(); j++) {
            const PhaseVector &xi = vectors[i];
            const PhaseVector &eta = vectors[j];
            pairs++;
            DenseMatrix product = weyl[i] * weyl[j];
            DenseMatrix reversed = weyl[j] * weyl[i];
            relation_failed +=
                !weyl_matrix(xi + eta, w).approx_equal(product * epsilon(p, beta(xi, eta).value()));
            commutation_failed += !reversed.approx_equal(product * epsilon(p, sigma(xi, eta).value()));
            DenseMatrix commutator = reversed * product.adjoint();
            extraction_failed +=
                !commutator.approx_equal(DenseMatrix::identity(commutator.size()) * epsilon(p, sigma(xi, eta).value()));
        }
    }
    report("weyl_relation", pairs, relation_failed, "");
    report("commutation", pairs, commutation_failed, "");
    report("sigma_extraction", pairs, extraction_failed, "");

    for (const auto &[name, s] : selftest_automata(p)) {
        PhaseFunction phi = default_phase(s);
        try {
            bool action = check_clifford_action(phi, w, seed);
            report("clifford_action " + name, 1, !action, "");
        } catch (const WindowError &e) {
            report("clifford_action " + name, 1, 1, e.what());
        }
        bool cocycle = validate_cocycle(phi, default_validation_radius(s), seed);
        report("cocycle " + name, 1, !cocycle, "");
    }
    return reports;
}

}  // namespace cqca::oracle
