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

#ifndef CQCA_POLY_PARSER_H
#define CQCA_POLY_PARSER_H

#include <string_view>

#include "cqca/laurent.h"

namespace cqca {

/// Parses a Laurent polynomial written as a sum of terms:
///
///     expr   := ['-'] term (('+' | '-') term)*
///     term   := coeff [var] | var
///     var    := 'u' ['^' int]                      (d = 1)
///             | ('u' index ['^' int])+             (d > 1, index in 1..d)
///     coeff  := unsigned decimal integer
///     int    := ['-'] unsigned decimal integer
///
/// Whitespace between tokens is ignored. Coefficients are reduced mod p, so negative and oversized values
/// are accepted. Exponents must fit in 32 bits. LaurentPoly::str() produces text this parser accepts.
///
/// Throws ParseError carrying the byte offset of the first offending character.
LaurentPoly parse_poly(std::string_view text, Prime modulus, std::size_t dim = 1);

}  // namespace cqca

#endif
