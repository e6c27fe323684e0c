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

#ifndef CQCA_ERRORS_H
#define CQCA_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqca {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different primes, or different lattice dimensions.
struct MismatchError : Error {
    using Error::Error;
};

/// An operation outside its mathematical domain (inverting zero, dividing by zero, d != 1, ...).
struct DomainError : Error {
    using Error::Error;
};

struct NotSymplecticError : Error {
    using Error::Error;
};

struct FactorizationMismatchError : Error {
    using Error::Error;
};

struct NoValidPhaseError : Error {
    using Error::Error;
};

/// A phase vector or automaton image does not fit inside a dense oracle window.
struct WindowError : Error {
    using Error::Error;
};

/// Malformed textual input. `offset` is the byte offset of the failure in the parsed text.
struct ParseError : Error {
    ParseError(const std::string &message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset(offset) {
    }
    std::size_t offset;
};

}  // namespace cqca

#endif
