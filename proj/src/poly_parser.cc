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

#include "cqca/poly_parser.h"

#include <cctype>
#include <limits>

#include "cqca/errors.h"

namespace cqca {

namespace {

class Parser {
   public:
    Parser(std::string_view text, Prime modulus, std::size_t dim) : text_(text), p_(modulus.value()), dim_(dim) {
    }

    std::vector<std::pair<Exponent, std::int64_t>> parse() {
        std::vector<std::pair<Exponent, std::int64_t>> terms;
        bool negative = false;
        skip_space();
        if (peek() == '-') {
            negative = true;
            pos_++;
        }
        while (true) {
            auto [exponent, coeff] = term();
            terms.emplace_back(std::move(exponent), negative ? -static_cast<std::int64_t>(coeff) : coeff);
            skip_space();
            if (at_end()) {
                return terms;
            }
            char c = peek();
            if (c != '+' && c != '-') {
                fail("expected '+' or '-'");
            }
            negative = c == '-';
            pos_++;
        }
    }

   private:
    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return at_end() ? '\0' : text_[pos_];
    }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(message, pos_);
    }
    bool at_digit() const {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    /// Unsigned integer reduced mod p as it is read.
    std::uint32_t coefficient() {
        std::uint64_t value = 0;
        while (at_digit()) {
            value = (value * 10 + static_cast<std::uint64_t>(peek() - '0')) % p_;
            pos_++;
        }
        return static_cast<std::uint32_t>(value);
    }

    /// Unsigned integer that must stay within `limit`.
    std::uint64_t bounded(std::uint64_t limit, const char *what) {
        if (!at_digit()) {
            fail(std::string("expected ") + what);
        }
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (at_digit()) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > limit) {
                pos_ = start;
                fail(std::string(what) + " out of range");
            }
            pos_++;
        }
        return value;
    }

    std::int64_t exponent() {
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            pos_++;
            skip_space();
        }
        constexpr std::uint64_t kMax = std::numeric_limits<std::int32_t>::max();
        std::uint64_t magnitude = bounded(negative ? kMax + 1 : kMax, "exponent");
        return negative ? -static_cast<std::int64_t>(magnitude) : static_cast<std::int64_t>(magnitude);
    }

    /// One 'u' factor; adds its exponent into `e`.
    void variable(Exponent &e) {
        pos_++;  // 'u'
        std::size_t k = 0;
        if (dim_ > 1) {
            skip_space();
            std::size_t at = pos_;
            std::uint64_t index = bounded(dim_, "variable index");
            if (index == 0) {
                pos_ = at;
                fail("variable index out of range");
            }
            k = static_cast<std::size_t>(index - 1);
        }
        skip_space();
        std::int64_t power = 1;
        if (peek() == '^') {
            pos_++;
            power = exponent();
        }
        e[k] += power;
    }

    std::pair<Exponent, std::uint32_t> term() {
        skip_space();
        Exponent e(dim_, 0);
        std::uint32_t c = 1;
        bool seen = false;
        if (at_digit()) {
            c = coefficient();
            seen = true;
            skip_space();
            if (peek() == '*') {
                pos_++;
                skip_space();
                if (peek() != 'u') {
                    fail("expected variable after '*'");
                }
            }
        }
        while (peek() == 'u') {
            variable(e);
            seen = true;
            skip_space();
            if (dim_ > 1 && peek() == '*') {
                pos_++;
                skip_space();
                if (peek() != 'u') {
                    fail("expected variable after '*'");
                }
            }
            if (dim_ == 1) {
                break;
            }
        }
        if (!seen) {
            fail("expected a term");
        }
        return {std::move(e), c};
    }

    std::string_view text_;
    std::uint32_t p_;
    std::size_t dim_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, Prime modulus, std::size_t dim) {
    if (dim == 0) {
        throw DomainError("lattice dimension must be positive");
    }
    return LaurentPoly::from_terms(modulus, dim, Parser(text, modulus, dim).parse());
}

}  // namespace cqca
